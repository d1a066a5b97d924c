#include "sls/sim.hpp"

#include <algorithm>
#include <stdexcept>

namespace sls {

uint64_t Rng::next_u64() {
    uint64_t z = seed + (++counter) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

char eigenstate_pauli(Eigenstate e) {
    switch (e) {
        case Eigenstate::Zp:
        case Eigenstate::Zm: return 'Z';
        case Eigenstate::Xp:
        case Eigenstate::Xm: return 'X';
        default: return 'Y';
    }
}

int eigenstate_sign(Eigenstate e) {
    return (e == Eigenstate::Zp || e == Eigenstate::Xp || e == Eigenstate::Yp) ? +1 : -1;
}

std::string to_string(Eigenstate e) {
    return std::string(1, eigenstate_pauli(e)) + (eigenstate_sign(e) > 0 ? "+" : "-");
}

std::optional<Eigenstate> parse_eigenstate(const std::string& text) {
    for (Eigenstate e : kAllEigenstates)
        if (to_string(e) == text) return e;
    return std::nullopt;
}

namespace {

PauliOperator embed(const PauliOperator& p, std::size_t n_total,
                    const std::vector<std::size_t>& map) {
    BitVec x(n_total), z(n_total);
    for (std::size_t q = 0; q < p.n(); ++q) {
        if (p.x_bit(q)) x.set(map[q]);
        if (p.z_bit(q)) z.set(map[q]);
    }
    return PauliOperator(n_total, std::move(x), std::move(z), p.phase_exp());
}

}  // namespace

StabilizerState::StabilizerState(std::size_t n, std::vector<PauliOperator> generators,
                                 uint64_t seed)
    : n_(n), gens_(std::move(generators)) {
    rng_.seed = seed;
    if (gens_.size() != n_) throw std::invalid_argument("state needs exactly n generators");
    Gf2Space span(2 * n_);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].n() != n_) throw DimensionError("generator size mismatch");
        if (!gens_[i].is_hermitian()) throw std::invalid_argument("non-Hermitian generator");
        for (std::size_t j = 0; j < i; ++j)
            if (!gens_[i].commutes_with(gens_[j]))
                throw std::invalid_argument("state generators must commute");
        if (!span.add(gens_[i].symplectic()))
            throw std::invalid_argument("state generators must be independent");
    }
}

MeasurementRecord StabilizerState::measure(const PauliOperator& p, std::string step_label) {
    if (!p.is_hermitian()) throw std::invalid_argument("measured operator must be Hermitian");
    if (p.n() != n_) throw DimensionError("operator size mismatch");

    MeasurementRecord rec;
    rec.op = p;
    rec.step_label = std::move(step_label);

    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (!gens_[i].commutes_with(p)) {
            pivot = i;
            break;
        }

    if (pivot) {
        for (std::size_t i = *pivot + 1; i < gens_.size(); ++i)
            if (!gens_[i].commutes_with(p)) gens_[i] = gens_[i] * gens_[*pivot];
        rec.outcome = rng_.next_bit() ? +1 : -1;
        rec.deterministic = false;
        gens_[*pivot] = rec.outcome > 0 ? p : p.with_phase_shift(2);
        return rec;
    }

    auto exp = expectation(p);
    if (!exp) throw std::logic_error("commuting operator outside the stabilizer span");
    rec.outcome = *exp;
    rec.deterministic = true;
    return rec;
}

void StabilizerState::apply_pauli(const PauliOperator& e) {
    if (e.n() != n_) throw DimensionError("operator size mismatch");
    for (auto& g : gens_)
        if (!g.commutes_with(e)) g = g.with_phase_shift(2);
}

std::optional<int> StabilizerState::expectation(const PauliOperator& p) const {
    for (const auto& g : gens_)
        if (!g.commutes_with(p)) return std::nullopt;
    BinaryMatrix rows(2 * n_);
    for (const auto& g : gens_) rows.add_row(g.symplectic());
    auto sol = rows.transposed().solve(p.symplectic());
    if (!sol) return std::nullopt;
    PauliOperator prod = PauliOperator::identity(n_);
    for (std::size_t b = 0; b < gens_.size(); ++b)
        if (sol->particular.test(b)) prod = prod * gens_[b];
    return prod.phase_exp() == p.phase_exp() ? +1 : -1;
}

PauliOperator signed_logical(const OperatorPair& pair, Eigenstate e) {
    PauliOperator p(pair.x_like.n());
    switch (eigenstate_pauli(e)) {
        case 'X': p = pair.x_like; break;
        case 'Z': p = pair.z_like; break;
        default: p = (pair.x_like * pair.z_like).with_phase_shift(1); break;    // Y = iXZ
    }
    return eigenstate_sign(e) > 0 ? p : p.with_phase_shift(2);
}

StabilizerState encode(const SubsystemCode& code, const CodeAnalysis& analysis,
                       const std::vector<Eigenstate>& logical_basis,
                       const std::vector<Eigenstate>& gauge_fixing, uint64_t seed) {
    if (logical_basis.size() != analysis.logical_pairs.size() ||
        gauge_fixing.size() != analysis.gauge_pairs.size())
        throw std::invalid_argument("encode needs one eigenstate per logical and gauge pair");
    std::vector<PauliOperator> gens = analysis.stabilizer_generators;
    for (std::size_t i = 0; i < logical_basis.size(); ++i)
        gens.push_back(signed_logical(analysis.logical_pairs[i], logical_basis[i]));
    for (std::size_t i = 0; i < gauge_fixing.size(); ++i)
        gens.push_back(signed_logical(analysis.gauge_pairs[i], gauge_fixing[i]));
    return StabilizerState(code.n, std::move(gens), seed);
}

MergeRun run_merge_schedule(StabilizerState& state, const MergeResult& merge,
                            const CodeAnalysis& merged_analysis, std::size_t rounds) {
    MergeRun run;
    for (std::size_t i = 0; i < merge.merging_operators.size(); ++i) {
        auto rec = state.measure(merge.merging_operators[i], "merge:G" + std::to_string(i + 1));
        run.m1 *= rec.outcome;
        run.records.push_back(std::move(rec));
    }

    // Product stabilizers the merge never touches stay sharp at +1.
    const std::size_t n = merge.merged.n;
    Gf2Space untouched(2 * n);
    auto collect = [&](const SubsystemCode& c, const std::vector<std::size_t>& map) {
        for (const auto& s : analyze(c).stabilizer_generators) {
            PauliOperator es = embed(s, n, map);
            bool clean = true;
            for (const auto& m : merge.merging_operators)
                if (!es.commutes_with(m)) {
                    clean = false;
                    break;
                }
            if (clean) untouched.add(es.symplectic());
        }
    };
    collect(merge.spec.code_a, merge.a_to_merged);
    collect(merge.spec.code_b, merge.b_to_merged);

    std::vector<int> baseline;
    for (std::size_t r = 0; r < std::max<std::size_t>(rounds, 1); ++r) {
        for (std::size_t i = 0; i < merged_analysis.stabilizer_generators.size(); ++i) {
            const auto& s = merged_analysis.stabilizer_generators[i];
            auto rec = state.measure(s, "round" + std::to_string(r + 1) + ":S" +
                                            std::to_string(i + 1));
            if (!rec.deterministic)
                throw std::logic_error("merged stabilizer indeterminate after the merge");
            if (r == 0)
                baseline.push_back(rec.outcome);
            else if (rec.outcome != baseline[i])
                throw std::logic_error("merged stabilizer outcome drifted between rounds");
            if (untouched.contains(s.symplectic()) && rec.outcome != +1)
                throw std::logic_error("untouched product stabilizer lost its +1 eigenvalue");
            run.records.push_back(std::move(rec));
        }
    }
    return run;
}

SplitRun run_split_schedule(StabilizerState& state, const MergeResult& merge) {
    const std::size_t n = merge.merged.n;
    SplitRun run;
    for (std::size_t j = 0; j < merge.ancilla_qubits.size(); ++j) {
        auto rec = state.measure(PauliOperator::single(n, merge.ancilla_qubits[j], 'X'),
                                 "split:anc" + std::to_string(j + 1));
        run.ancilla_outcomes.push_back(rec.outcome);
        run.records.push_back(std::move(rec));
    }

    std::vector<PauliOperator> stabs;
    std::vector<PauliOperator> keep;    // bare logicals the frame must not touch
    auto collect = [&](const SubsystemCode& c, const std::vector<std::size_t>& map) {
        CodeAnalysis an = analyze(c);
        for (const auto& s : an.stabilizer_generators) stabs.push_back(embed(s, n, map));
        for (const auto& pair : an.logical_pairs) {
            keep.push_back(embed(pair.x_like, n, map));
            keep.push_back(embed(pair.z_like, n, map));
        }
    };
    collect(merge.spec.code_a, merge.a_to_merged);
    collect(merge.spec.code_b, merge.b_to_merged);

    std::vector<int> outcomes;
    for (std::size_t i = 0; i < stabs.size(); ++i) {
        auto rec = state.measure(stabs[i], "split:S" + std::to_string(i + 1));
        outcomes.push_back(rec.outcome);
        run.records.push_back(std::move(rec));
    }

    // Frame f: anticommutes with exactly the -1 stabilizers, commutes with all
    // bare logicals, acts on code qubits only.
    auto comm_row = [n](const PauliOperator& p) {
        BitVec row(2 * n);    // symplectic partner: (z | x)
        for (std::size_t q = 0; q < n; ++q) {
            if (p.z_bit(q)) row.set(q);
            if (p.x_bit(q)) row.set(n + q);
        }
        return row;
    };
    BinaryMatrix constraints(2 * n);
    BitVec rhs(stabs.size() + keep.size() + 2 * merge.ancilla_qubits.size());
    std::size_t r = 0;
    for (std::size_t i = 0; i < stabs.size(); ++i, ++r) {
        constraints.add_row(comm_row(stabs[i]));
        if (outcomes[i] < 0) rhs.set(r);
    }
    for (const auto& l : keep) {
        constraints.add_row(comm_row(l));
        ++r;
    }
    for (std::size_t q : merge.ancilla_qubits) {
        BitVec rx(2 * n), rz(2 * n);
        rx.set(q);
        rz.set(n + q);
        constraints.add_row(std::move(rx));
        constraints.add_row(std::move(rz));
        r += 2;
    }
    auto sol = constraints.solve(rhs);
    if (!sol) throw std::logic_error("no Pauli frame restores the split stabilizers");

    BitVec f = sol->particular;
    bool improved = true;    // greedy weight reduction, cosmetic
    while (improved) {
        improved = false;
        for (const auto& kv : sol->kernel) {
            BitVec cand = f ^ kv;
            if (PauliOperator::from_symplectic(n, cand).weight() <
                PauliOperator::from_symplectic(n, f).weight()) {
                f = cand;
                improved = true;
            }
        }
    }
    run.frame = PauliOperator::from_symplectic(n, f);
    state.apply_pauli(run.frame);

    for (const auto& s : stabs)
        if (state.expectation(s) != std::optional<int>(+1))
            throw std::logic_error("split frame failed to restore a stabilizer");
    return run;
}

StabilizerState encode_product(const MergeResult& merge, Eigenstate input_a, Eigenstate input_b,
                               uint64_t seed) {
    const std::size_t n = merge.merged.n;
    CodeAnalysis an_a = analyze(merge.spec.code_a);
    CodeAnalysis an_b = analyze(merge.spec.code_b);
    if (an_a.params.k != 1 || an_b.params.k != 1)
        throw std::invalid_argument("encode_product expects one logical qubit per code");

    std::vector<PauliOperator> gens;
    for (const auto& s : an_a.stabilizer_generators) gens.push_back(embed(s, n, merge.a_to_merged));
    for (const auto& s : an_b.stabilizer_generators) gens.push_back(embed(s, n, merge.b_to_merged));
    gens.push_back(embed(signed_logical(an_a.logical_pairs[0], input_a), n, merge.a_to_merged));
    gens.push_back(embed(signed_logical(an_b.logical_pairs[0], input_b), n, merge.b_to_merged));
    for (const auto& gp : an_a.gauge_pairs)
        gens.push_back(embed(signed_logical(gp, Eigenstate::Zp), n, merge.a_to_merged));
    for (const auto& gp : an_b.gauge_pairs)
        gens.push_back(embed(signed_logical(gp, Eigenstate::Zp), n, merge.b_to_merged));
    for (std::size_t q : merge.ancilla_qubits) gens.push_back(PauliOperator::single(n, q, 'X'));
    return StabilizerState(n, std::move(gens), seed);
}

TeleportReport teleport(const MergeResult& merge, Eigenstate input, uint64_t seed,
                        std::size_t rounds) {
    const std::size_t n = merge.merged.n;
    CodeAnalysis an_a = analyze(merge.spec.code_a);
    CodeAnalysis an_b = analyze(merge.spec.code_b);
    CodeAnalysis an_m = analyze(merge.merged);
    StabilizerState state = encode_product(merge, input, Eigenstate::Xp, seed);

    TeleportReport rep;
    rep.seed = seed;
    rep.input = input;

    MergeRun mr = run_merge_schedule(state, merge, an_m, rounds);
    rep.m1 = mr.m1;
    rep.records = std::move(mr.records);

    SplitRun sr = run_split_schedule(state, merge);
    rep.ancilla_outcomes = sr.ancilla_outcomes;
    rep.frame = sr.frame;
    for (auto& r : sr.records) rep.records.push_back(std::move(r));

    PauliOperator xla = embed(an_a.logical_pairs[0].x_like, n, merge.a_to_merged);
    auto rec2 = state.measure(xla, "readout:XLA");
    rep.m2 = rec2.outcome;
    rep.records.push_back(std::move(rec2));

    // Z correction parity: m2 dressed with the ancilla X outcomes making
    // X_L^A X_L^B commute with every merging operator.
    PauliOperator xlab = xla * embed(an_b.logical_pairs[0].x_like, n, merge.b_to_merged);
    BinaryMatrix dressing(merge.ancilla_qubits.size());
    BitVec drhs(merge.merging_operators.size());
    for (std::size_t i = 0; i < merge.merging_operators.size(); ++i) {
        const auto& m = merge.merging_operators[i];
        BitVec row(merge.ancilla_qubits.size());
        for (std::size_t j = 0; j < merge.ancilla_qubits.size(); ++j)
            if (m.z_bit(merge.ancilla_qubits[j])) row.set(j);
        dressing.add_row(std::move(row));
        if (!xlab.commutes_with(m)) drhs.set(i);
    }
    auto dsol = dressing.solve(drhs);
    if (!dsol) throw std::logic_error("no ancilla dressing joins the X logicals");
    int z_parity = rep.m2;
    for (std::size_t j = 0; j < merge.ancilla_qubits.size(); ++j)
        if (dsol->particular.test(j)) z_parity *= rep.ancilla_outcomes[j];

    if (rep.m1 < 0) {
        state.apply_pauli(embed(an_b.logical_pairs[0].x_like, n, merge.b_to_merged));
        rep.correction += "X_L^B";
    }
    if (z_parity < 0) {
        state.apply_pauli(embed(an_b.logical_pairs[0].z_like, n, merge.b_to_merged));
        if (!rep.correction.empty()) rep.correction += " ";
        rep.correction += "Z_L^B";
    }

    auto read = [&](Eigenstate e) {
        auto v = state.expectation(embed(signed_logical(an_b.logical_pairs[0], e), n,
                                         merge.b_to_merged));
        return v.value_or(0);
    };
    rep.final_x = read(Eigenstate::Xp);
    rep.final_y = read(Eigenstate::Yp);
    rep.final_z = read(Eigenstate::Zp);
    switch (eigenstate_pauli(input)) {
        case 'X': rep.want_x = eigenstate_sign(input); break;
        case 'Y': rep.want_y = eigenstate_sign(input); break;
        default: rep.want_z = eigenstate_sign(input); break;
    }
    rep.pass = rep.final_x == rep.want_x && rep.final_y == rep.want_y && rep.final_z == rep.want_z;
    return rep;
}

}  // namespace sls
