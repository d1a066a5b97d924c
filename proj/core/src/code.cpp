#include "sls/code.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace sls {

namespace {

bool symp(const BitVec& a, const BitVec& b, std::size_t n) {
    bool acc = false;
    // (x_a . z_b) + (z_a . x_b); vectors are laid out as (x | z).
    for (std::size_t q = 0; q < n; ++q)
        acc ^= (a.test(q) && b.test(n + q)) || (a.test(n + q) && b.test(q));
    return acc;
}

/// Ordering key: lowest qubit index touched, X bit before Z bit.
std::size_t leading_key(const BitVec& v, std::size_t n) {
    for (std::size_t q = 0; q < n; ++q) {
        if (v.test(q)) return 2 * q;
        if (v.test(n + q)) return 2 * q + 1;
    }
    return 2 * n;
}

BinaryMatrix symplectic_matrix(const SubsystemCode& code) {
    BinaryMatrix m(2 * code.n);
    for (const auto& g : code.gauge_generators) {
        if (g.n() != code.n) throw InvalidCodeError("generator size does not match code.n");
        m.add_row(g.symplectic());
    }
    return m;
}

/// Canonical-order product of the generators selected by `coeff`.
PauliOperator subset_product(const std::vector<PauliOperator>& gens, const BitVec& coeff,
                             std::size_t n) {
    PauliOperator p = PauliOperator::identity(n);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (coeff.test(i)) p = p * gens[i];
    return p;
}

/// Reject generator lists whose products contain a scalar other than +1;
/// such a list cannot carry a consistent stabilizer sign assignment.
void validate_generators(const SubsystemCode& code, const BinaryMatrix& m) {
    for (const auto& g : code.gauge_generators)
        if (!g.is_hermitian())
            throw InvalidCodeError("gauge generator " + g.to_string() + " is not Hermitian");
    auto dep = m.transposed().solve(BitVec(2 * code.n));
    assert(dep);
    const auto& kernel = dep->kernel;
    if (kernel.empty()) return;
    if (kernel.size() <= 16) {
        std::size_t combos = std::size_t(1) << kernel.size();
        for (std::size_t mask = 1; mask < combos; ++mask) {
            BitVec coeff(code.gauge_generators.size());
            for (std::size_t i = 0; i < kernel.size(); ++i)
                if ((mask >> i) & 1) coeff ^= kernel[i];
            PauliOperator p = subset_product(code.gauge_generators, coeff, code.n);
            if (p.phase_exp() != 0)
                throw InvalidCodeError("center contains -I: generator dependency multiplies to " +
                                       p.to_string());
        }
    } else {
        for (const auto& k : kernel) {
            PauliOperator p = subset_product(code.gauge_generators, k, code.n);
            if (p.phase_exp() != 0)
                throw InvalidCodeError("center contains -I: generator dependency multiplies to " +
                                       p.to_string());
        }
    }
}

/// Symplectic Gram-Schmidt: peel anticommuting pairs off `cand`, deterministically.
std::vector<OperatorPair> pair_up(std::vector<BitVec> cand, std::size_t n) {
    std::vector<OperatorPair> pairs;
    auto key_less = [n](const BitVec& a, const BitVec& b) {
        std::size_t ka = leading_key(a, n), kb = leading_key(b, n);
        if (ka != kb) return ka < kb;
        // Stable total order for equal leading keys.
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.test(i) != b.test(i)) return a.test(i);
        return false;
    };
    while (!cand.empty()) {
        std::sort(cand.begin(), cand.end(), key_less);
        BitVec v = cand.front();
        cand.erase(cand.begin());
        if (v.is_zero()) continue;
        std::size_t wi = cand.size();
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (symp(v, cand[i], n)) {
                wi = i;
                break;
            }
        if (wi == cand.size()) continue;    // radical element; dropped by the caller's quotient
        BitVec w = cand[wi];
        cand.erase(cand.begin() + wi);
        for (auto& u : cand) {
            if (symp(u, w, n)) u ^= v;
            if (symp(u, v, n)) u ^= w;
        }
        auto op_v = PauliOperator::from_symplectic(n, v);
        auto op_w = PauliOperator::from_symplectic(n, w);
        auto pure_z = [](const PauliOperator& p) { return p.x_bits().is_zero(); };
        auto pure_x = [](const PauliOperator& p) { return p.z_bits().is_zero(); };
        if (pure_z(op_v) && !pure_z(op_w))
            pairs.push_back({op_w, op_v});
        else if (pure_z(op_w))
            pairs.push_back({op_v, op_w});
        else if (pure_x(op_w) && !pure_x(op_v))
            pairs.push_back({op_w, op_v});
        else
            pairs.push_back({op_v, op_w});
    }
    return pairs;
}

}  // namespace

std::vector<PauliOperator> center(const SubsystemCode& code) {
    BinaryMatrix m = symplectic_matrix(code);
    validate_generators(code, m);
    const std::size_t ngen = code.gauge_generators.size();

    BinaryMatrix comm(ngen);
    for (std::size_t i = 0; i < ngen; ++i) {
        BitVec row(ngen);
        for (std::size_t j = 0; j < ngen; ++j)
            if (symp(m.row(i), m.row(j), code.n)) row.set(j);
        comm.add_row(std::move(row));
    }
    auto sol = comm.solve(BitVec(ngen));
    assert(sol);

    Gf2Space span(2 * code.n);
    std::vector<PauliOperator> result;
    for (const auto& coeff : sol->kernel) {
        BitVec bits(2 * code.n);
        for (std::size_t i = 0; i < ngen; ++i)
            if (coeff.test(i)) bits ^= m.row(i);
        if (span.add(bits)) result.push_back(PauliOperator::from_symplectic(code.n, bits));
    }
    return result;
}

CodeAnalysis analyze(const SubsystemCode& code) {
    const std::size_t n = code.n;
    BinaryMatrix m = symplectic_matrix(code);

    CodeAnalysis a;
    a.stabilizer_generators = center(code);
    const std::size_t s = a.stabilizer_generators.size();

    Gf2Space stab_span(2 * n);
    for (const auto& p : a.stabilizer_generators) stab_span.add(p.symplectic());

    // N(G): everything commuting with every gauge generator.
    BinaryMatrix commute_constraints(2 * n);
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        // Row i constrains v: symp(g_i, v) = 0, i.e. (z_i | x_i) . v = 0.
        BitVec row(2 * n);
        for (std::size_t q = 0; q < n; ++q) {
            if (m.row(i).test(n + q)) row.set(q);
            if (m.row(i).test(q)) row.set(n + q);
        }
        commute_constraints.add_row(std::move(row));
    }
    auto normalizer = commute_constraints.solve(BitVec(m.n_rows()));
    assert(normalizer);

    // Logical classes: N(G) modulo <i>S.
    {
        Gf2Space seen(2 * n);
        for (const auto& b : stab_span.basis()) seen.add(b);
        std::vector<BitVec> cand;
        for (const auto& v : normalizer->kernel) {
            BitVec r = seen.reduce(v);
            if (seen.add(r)) cand.push_back(stab_span.reduce(v));
        }
        a.logical_pairs = pair_up(std::move(cand), n);
    }

    // Gauge pairs: the gauge group modulo <i>S.
    {
        Gf2Space seen(2 * n);
        for (const auto& b : stab_span.basis()) seen.add(b);
        std::vector<BitVec> cand;
        for (std::size_t i = 0; i < m.n_rows(); ++i) {
            BitVec r = seen.reduce(m.row(i));
            if (seen.add(r)) cand.push_back(stab_span.reduce(m.row(i)));
        }
        a.gauge_pairs = pair_up(std::move(cand), n);
    }

    a.params.n = n;
    a.params.k = a.logical_pairs.size();
    a.params.g = a.gauge_pairs.size();
    if (a.params.k + s + a.params.g != n)
        throw InvalidCodeError("inconsistent counts: n != k + s + g");
    return a;
}

std::optional<std::size_t> distance(const SubsystemCode& code, std::size_t max_weight) {
    return distance(code, analyze(code), max_weight);
}

std::optional<std::size_t> distance(const SubsystemCode& code, const CodeAnalysis& analysis,
                                    std::size_t max_weight) {
    const std::size_t n = code.n;
    if (n > 64) throw std::invalid_argument("distance search supports up to 64 qubits");

    struct Mask {
        uint64_t x = 0, z = 0;
    };
    auto to_mask = [n](const PauliOperator& p) {
        Mask m;
        for (std::size_t q = 0; q < n; ++q) {
            if (p.x_bit(q)) m.x |= uint64_t(1) << q;
            if (p.z_bit(q)) m.z |= uint64_t(1) << q;
        }
        return m;
    };
    std::vector<Mask> stab;
    for (const auto& p : analysis.stabilizer_generators) stab.push_back(to_mask(p));

    Gf2Space gauge_span(2 * n);
    for (const auto& g : code.gauge_generators) gauge_span.add(g.symplectic());

    auto commutes_all = [&](const Mask& c) {
        for (const auto& s : stab) {
            uint64_t acc = (c.x & s.z) ^ (c.z & s.x);
            if (std::popcount(acc) & 1) return false;
        }
        return true;
    };
    auto in_gauge = [&](const Mask& c) {
        BitVec v(2 * n);
        for (std::size_t q = 0; q < n; ++q) {
            if ((c.x >> q) & 1) v.set(q);
            if ((c.z >> q) & 1) v.set(n + q);
        }
        return gauge_span.contains(v);
    };

    std::vector<std::size_t> support;
    // Enumerate supports of size w (increasing first qubit), then 3^w letters.
    auto try_support = [&](const auto& self, std::size_t next, std::size_t remaining) -> bool {
        if (remaining == 0) {
            std::size_t w = support.size();
            std::size_t total = 1;
            for (std::size_t i = 0; i < w; ++i) total *= 3;
            for (std::size_t code_ix = 0; code_ix < total; ++code_ix) {
                Mask c;
                std::size_t t = code_ix;
                for (std::size_t i = 0; i < w; ++i) {
                    std::size_t letter = t % 3;
                    t /= 3;
                    uint64_t bit = uint64_t(1) << support[i];
                    if (letter != 1) c.x |= bit;    // 0 = X, 2 = Y
                    if (letter != 0) c.z |= bit;    // 1 = Z, 2 = Y
                }
                if (commutes_all(c) && !in_gauge(c)) return true;
            }
            return false;
        }
        for (std::size_t q = next; q + remaining <= n; ++q) {
            support.push_back(q);
            if (self(self, q + 1, remaining - 1)) return true;
            support.pop_back();
        }
        return false;
    };

    for (std::size_t w = 1; w <= max_weight && w <= n; ++w) {
        support.clear();
        if (try_support(try_support, 0, w)) return w;
    }
    return std::nullopt;
}

std::vector<OperatorPair> bare_logicals(const SubsystemCode& code) {
    return analyze(code).logical_pairs;
}

std::optional<PauliOperator> reduce_to_support(const PauliOperator& p, const SubsystemCode& code,
                                               const CodeAnalysis& analysis,
                                               const std::set<std::size_t>& allowed,
                                               bool use_gauge) {
    const std::size_t n = code.n;
    std::vector<PauliOperator> basis = analysis.stabilizer_generators;
    if (use_gauge)
        for (const auto& g : code.gauge_generators) basis.push_back(g);

    std::vector<std::size_t> forbidden;
    for (std::size_t q = 0; q < n; ++q)
        if (!allowed.count(q)) forbidden.push_back(q);

    BinaryMatrix constraints(basis.size());
    BitVec rhs(2 * forbidden.size());
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
        std::size_t q = forbidden[i];
        BitVec rx(basis.size()), rz(basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (basis[b].x_bit(q)) rx.set(b);
            if (basis[b].z_bit(q)) rz.set(b);
        }
        constraints.add_row(std::move(rx));
        constraints.add_row(std::move(rz));
        if (p.x_bit(q)) rhs.set(2 * i);
        if (p.z_bit(q)) rhs.set(2 * i + 1);
    }
    auto sol = constraints.solve(rhs);
    if (!sol) return std::nullopt;

    BitVec bits = p.symplectic();
    for (std::size_t b = 0; b < basis.size(); ++b)
        if (sol->particular.test(b)) bits ^= basis[b].symplectic();
    return PauliOperator::from_symplectic(n, bits);
}

}  // namespace sls
