#include "sls/surgery.hpp"

#include <algorithm>
#include <stdexcept>

namespace sls {

namespace {

PauliOperator embed(const PauliOperator& p, std::size_t n_merged,
                    const std::vector<std::size_t>& map) {
    BitVec x(n_merged), z(n_merged);
    for (std::size_t q = 0; q < p.n(); ++q) {
        if (p.x_bit(q)) x.set(map[q]);
        if (p.z_bit(q)) z.set(map[q]);
    }
    return PauliOperator(n_merged, std::move(x), std::move(z), p.phase_exp());
}

/// Scan order 0, N-1, 1, N-2, ... so retained generators sit at the seam ends.
std::vector<std::size_t> ends_inward(std::size_t n) {
    std::vector<std::size_t> order;
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        order.push_back(lo++);
        if (lo < hi) order.push_back(--hi);
    }
    return order;
}

}  // namespace

std::vector<PauliOperator> merging_operators(const MergeSpec& spec, const MergedLayout& layout) {
    const auto& qa = spec.logical_a.ordered_support;
    const auto& qb = spec.logical_b.ordered_support;
    const std::size_t N = std::max(qa.size(), qb.size());
    const std::size_t n = spec.code_a.n + spec.code_b.n + layout.q_c.size();

    std::vector<PauliOperator> ops;
    for (std::size_t i = 0; i < N; ++i) {
        BitVec x(n), z(n);
        if (i < qa.size()) {
            if (spec.logical_a.op.x_bit(qa[i])) x.set(layout.q_a[i]);
            if (spec.logical_a.op.z_bit(qa[i])) z.set(layout.q_a[i]);
        }
        if (i < qb.size()) {
            if (spec.logical_b.op.x_bit(qb[i])) x.set(layout.q_b[i]);
            if (spec.logical_b.op.z_bit(qb[i])) z.set(layout.q_b[i]);
        }
        if (spec.with_ancillas) {
            if (i + 1 < N) z.flip(layout.q_c[i]);        // Z_i, absent on the last operator
            if (i >= 1) z.flip(layout.q_c[i - 1]);       // Z_{i-1}, absent on the first
        }
        ops.emplace_back(n, std::move(x), std::move(z), 0);
    }
    return ops;
}

MergeResult build_merged_code(const MergeSpec& spec) {
    const std::size_t N =
        std::max(spec.logical_a.ordered_support.size(), spec.logical_b.ordered_support.size());
    const std::size_t anc = spec.with_ancillas ? N - 1 : 0;

    MergeResult out;
    out.spec = spec;
    out.layout = prepare_merged_lattice(spec.code_a, spec.logical_a, spec.code_b, spec.logical_b,
                                        anc);
    out.a_to_merged = out.layout.a_to_merged;
    out.b_to_merged = out.layout.b_to_merged;
    const std::size_t n = spec.code_a.n + spec.code_b.n + anc;
    for (std::size_t i = 0; i < anc; ++i) out.ancilla_qubits.push_back(out.layout.q_c[i]);

    out.merging_operators = merging_operators(spec, out.layout);
    out.joint_logical = embed(spec.logical_a.op, n, out.a_to_merged) *
                        embed(spec.logical_b.op, n, out.b_to_merged);

    out.merged.n = n;
    out.merged.name = spec.code_a.name + "+" + spec.code_b.name;
    out.merged.geometry = out.layout.lattice;
    for (const auto& g : spec.code_a.gauge_generators)
        out.merged.gauge_generators.push_back(embed(g, n, out.a_to_merged));
    for (const auto& g : spec.code_b.gauge_generators)
        out.merged.gauge_generators.push_back(embed(g, n, out.b_to_merged));
    for (const auto& m : out.merging_operators) out.merged.gauge_generators.push_back(m);
    for (std::size_t q : out.ancilla_qubits)
        out.merged.gauge_generators.push_back(PauliOperator::single(n, q, 'X'));

    // W: merging operators independent modulo G^A x G^B x <P_L^A P_L^B>.
    Gf2Space span(2 * n);
    for (const auto& g : spec.code_a.gauge_generators) span.add(embed(g, n, out.a_to_merged).symplectic());
    for (const auto& g : spec.code_b.gauge_generators) span.add(embed(g, n, out.b_to_merged).symplectic());
    span.add(out.joint_logical.symplectic());
    for (std::size_t i : ends_inward(N))
        if (span.add(out.merging_operators[i].symplectic()))
            out.merging_generator_indices.push_back(i);
    std::sort(out.merging_generator_indices.begin(), out.merging_generator_indices.end());
    out.delta_g = out.merging_generator_indices.size();

    Gf2Space centre(2 * n);
    for (const auto& c : center(out.merged)) centre.add(c.symplectic());
    if (!centre.contains(out.joint_logical.symplectic()))
        throw InvalidCodeError("joint logical is not in the merged center");

    return out;
}

std::vector<std::pair<PauliOperator, PauliOperator>> verify_lemma2(const MergeResult& result) {
    const std::size_t n = result.merged.n;
    CodeAnalysis an_a = analyze(result.spec.code_a);
    CodeAnalysis an_b = analyze(result.spec.code_b);
    std::vector<PauliOperator> stabs;
    for (const auto& s : an_a.stabilizer_generators)
        stabs.push_back(embed(s, n, result.a_to_merged));
    for (const auto& s : an_b.stabilizer_generators)
        stabs.push_back(embed(s, n, result.b_to_merged));

    const auto& W = result.merging_generator_indices;
    std::vector<std::pair<PauliOperator, PauliOperator>> witnesses;
    for (std::size_t t = 0; t < W.size(); ++t) {
        BinaryMatrix constraints(stabs.size());
        BitVec rhs(W.size());
        for (std::size_t i = 0; i < W.size(); ++i) {
            BitVec row(stabs.size());
            for (std::size_t b = 0; b < stabs.size(); ++b)
                if (!stabs[b].commutes_with(result.merging_operators[W[i]])) row.set(b);
            constraints.add_row(std::move(row));
        }
        rhs.set(t);
        auto sol = constraints.solve(rhs);
        if (!sol)
            throw InvalidCodeError("lemma2 violation: no stabilizer witness for merging generator " +
                                   std::to_string(W[t] + 1));

        auto build = [&](const BitVec& coeff) {
            PauliOperator s = PauliOperator::identity(n);
            for (std::size_t b = 0; b < stabs.size(); ++b)
                if (coeff.test(b)) s = s * stabs[b];
            return s;
        };
        PauliOperator best = build(sol->particular);
        if (sol->kernel.size() <= 12) {
            std::size_t combos = std::size_t(1) << sol->kernel.size();
            for (std::size_t mask = 1; mask < combos; ++mask) {
                BitVec coeff = sol->particular;
                for (std::size_t i = 0; i < sol->kernel.size(); ++i)
                    if ((mask >> i) & 1) coeff ^= sol->kernel[i];
                PauliOperator cand = build(coeff);
                if (cand.weight() < best.weight() ||
                    (cand.weight() == best.weight() && cand.to_string() < best.to_string()))
                    best = cand;
            }
        }
        witnesses.emplace_back(result.merging_operators[W[t]], best);
    }
    return witnesses;
}

MergedParamsReport verify_merged_parameters(const MergeResult& result, std::size_t max_weight) {
    MergedParamsReport rep;
    CodeAnalysis an_a = analyze(result.spec.code_a);
    CodeAnalysis an_b = analyze(result.spec.code_b);
    CodeAnalysis an_m = analyze(result.merged);

    rep.n = an_m.params.n;
    rep.k = an_m.params.k;
    rep.g = an_m.params.g;
    rep.s = an_m.s();
    rep.delta_g = result.delta_g;
    rep.ancillas = result.ancilla_qubits.size();
    rep.expected_k = an_a.params.k + an_b.params.k - 1;
    rep.expected_g = an_a.params.g + an_b.params.g + result.delta_g;

    auto d_a = distance(result.spec.code_a, an_a, max_weight);
    auto d_b = distance(result.spec.code_b, an_b, max_weight);
    if (!d_a || !d_b) rep.violations.push_back("input distance not found up to max_weight");
    rep.d_min = d_a && d_b ? std::min(*d_a, *d_b) : 0;
    rep.d_merged = distance(result.merged, an_m, max_weight);

    rep.r_before = std::max(interaction_range(result.spec.code_a),
                            interaction_range(result.spec.code_b));
    rep.r_after = interaction_range(result.merged);

    if (rep.k != rep.expected_k) rep.violations.push_back("k mismatch");
    if (rep.g != rep.expected_g) rep.violations.push_back("g mismatch");
    if (rep.n != result.spec.code_a.n + result.spec.code_b.n + rep.ancillas)
        rep.violations.push_back("n mismatch");
    if (rep.d_min && (!rep.d_merged || *rep.d_merged < rep.d_min))
        rep.violations.push_back("merged distance below the minimum input distance");
    if (rep.r_after > rep.r_before + 2) rep.violations.push_back("locality violated");
    rep.ok = rep.violations.empty();
    return rep;
}

SubsystemCode gauge_fix(const SubsystemCode& merged, const std::vector<PauliOperator>& fix_set) {
    if (fix_set.empty()) return merged;
    Gf2Space gauge_span(2 * merged.n);
    for (const auto& g : merged.gauge_generators) gauge_span.add(g.symplectic());
    std::vector<PauliOperator> stabs = center(merged);
    for (std::size_t i = 0; i < fix_set.size(); ++i) {
        const auto& f = fix_set[i];
        if (!f.is_hermitian()) throw std::invalid_argument("fix operator not Hermitian");
        if (!gauge_span.contains(f.symplectic()))
            throw std::invalid_argument("fix operator not in the gauge group");
        for (std::size_t j = 0; j < i; ++j)
            if (!f.commutes_with(fix_set[j]))
                throw std::invalid_argument("fix operators do not commute");
        for (const auto& s : stabs)
            if (!f.commutes_with(s))
                throw std::invalid_argument("fix operator anticommutes with the stabilizer");
    }

    // New gauge group: centralizer of fix_set inside the old gauge group.
    BinaryMatrix constraints(merged.gauge_generators.size());
    for (const auto& f : fix_set) {
        BitVec row(merged.gauge_generators.size());
        for (std::size_t b = 0; b < merged.gauge_generators.size(); ++b)
            if (!merged.gauge_generators[b].commutes_with(f)) row.set(b);
        constraints.add_row(std::move(row));
    }
    auto sol = constraints.solve(BitVec(fix_set.size()));

    SubsystemCode out;
    out.n = merged.n;
    out.name = merged.name + "/fixed";
    out.geometry = merged.geometry;
    out.gauge_generators = fix_set;
    for (const auto& coeff : sol->kernel) {
        PauliOperator p = PauliOperator::identity(merged.n);
        for (std::size_t b = 0; b < merged.gauge_generators.size(); ++b)
            if (coeff.test(b)) p = p * merged.gauge_generators[b];
        if (!p.is_hermitian()) p = p.with_phase_shift(1);
        out.gauge_generators.push_back(p);
    }
    return out;
}

SplitResult split(const MergeResult& result) {
    SplitResult out;
    out.code_a = result.spec.code_a;
    out.code_b = result.spec.code_b;
    const std::size_t n = out.code_a.n + out.code_b.n;
    std::vector<std::size_t> ida(out.code_a.n), idb(out.code_b.n);
    for (std::size_t q = 0; q < out.code_a.n; ++q) ida[q] = q;
    for (std::size_t q = 0; q < out.code_b.n; ++q) idb[q] = out.code_a.n + q;
    out.joint_record =
        embed(result.spec.logical_a.op, n, ida) * embed(result.spec.logical_b.op, n, idb);
    return out;
}

bool gauge_groups_equal_after_seam_collapse(const MergeResult& result, const SubsystemCode& ref) {
    const auto& merged = result.merged;
    if (!merged.geometry || !ref.geometry || merged.n != ref.n) return false;
    const int seam = result.spec.code_a.geometry->width() + 1;
    std::vector<std::size_t> to_ref(merged.n);
    for (std::size_t q = 0; q < merged.n; ++q) {
        Coord c = merged.geometry->position(q);
        if (c.col > seam) c.col -= 1;
        auto r = ref.geometry->qubit_at(c);
        if (!r) return false;
        to_ref[q] = *r;
    }
    Gf2Space ref_span(2 * ref.n), merged_span(2 * ref.n);
    for (const auto& g : ref.gauge_generators) ref_span.add(g.symplectic());
    for (const auto& g : merged.gauge_generators) {
        PauliOperator r = embed(g.unsigned_rep(), ref.n, to_ref);
        merged_span.add(r.symplectic());
        if (!ref_span.contains(r.symplectic())) return false;
    }
    for (const auto& g : ref.gauge_generators)
        if (!merged_span.contains(g.symplectic())) return false;
    return true;
}

}  // namespace sls
