#include "sls/pauli.hpp"

#include <bit>
#include <cassert>

namespace sls {

namespace {

std::size_t y_count(const BitVec& x, const BitVec& z) {
    std::size_t c = 0;
    const auto& xw = x.words();
    const auto& zw = z.words();
    for (std::size_t w = 0; w < xw.size(); ++w) c += std::popcount(xw[w] & zw[w]);
    return c;
}

}  // namespace

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char letter) {
    PauliOperator p(n);
    if (q >= n) throw DimensionError("qubit index out of range");
    switch (letter) {
        case 'X': p.x_.set(q); break;
        case 'Z': p.z_.set(q); break;
        case 'Y': p.x_.set(q); p.z_.set(q); break;
        default: throw std::invalid_argument("letter must be X, Y or Z");
    }
    return p;
}

PauliOperator PauliOperator::from_support(std::size_t n, const std::vector<std::size_t>& qubits,
                                          char letter) {
    PauliOperator p(n);
    for (std::size_t q : qubits) {
        PauliOperator s = single(n, q, letter);
        p.x_ ^= s.x_;
        p.z_ ^= s.z_;
    }
    return p;
}

PauliOperator PauliOperator::parse(std::string_view text) {
    int phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        bool neg = text[0] == '-';
        text.remove_prefix(1);
        if (!text.empty() && text[0] == 'i') {
            phase = neg ? 3 : 1;
            text.remove_prefix(1);
        } else {
            phase = neg ? 2 : 0;
        }
    }
    PauliOperator p(text.size());
    p.phase_ = phase;
    for (std::size_t q = 0; q < text.size(); ++q) {
        switch (text[q]) {
            case 'I': break;
            case 'X': p.x_.set(q); break;
            case 'Z': p.z_.set(q); break;
            case 'Y': p.x_.set(q); p.z_.set(q); break;
            default: throw std::invalid_argument("invalid Pauli letter in string");
        }
    }
    return p;
}

std::size_t PauliOperator::weight() const {
    std::size_t c = 0;
    const auto& xw = x_.words();
    const auto& zw = z_.words();
    for (std::size_t w = 0; w < xw.size(); ++w) c += std::popcount(xw[w] | zw[w]);
    return c;
}

PauliOperator PauliOperator::operator*(const PauliOperator& o) const {
    if (n_ != o.n_) throw DimensionError("Pauli operands have different qubit counts");
    PauliOperator r(n_);
    r.x_ = x_ ^ o.x_;
    r.z_ = z_ ^ o.z_;
    // Letter convention: each operand is i^p i^y X^x Z^z in XZ form. Moving
    // Z^z_a past X^x_b contributes (-1)^(z_a . x_b); converting back to
    // letters removes i^y of the result.
    int p = phase_ + o.phase_;
    p += static_cast<int>(y_count(x_, z_)) + static_cast<int>(y_count(o.x_, o.z_));
    p += 2 * static_cast<int>(z_.dot(o.x_));
    p -= static_cast<int>(y_count(r.x_, r.z_));
    r.phase_ = ((p % 4) + 4) % 4;
    return r;
}

bool PauliOperator::commutes_with(const PauliOperator& o) const {
    if (n_ != o.n_) throw DimensionError("Pauli operands have different qubit counts");
    return !symplectic_product(*this, o);
}

bool PauliOperator::symplectic_product(const PauliOperator& a, const PauliOperator& b) {
    return a.x_.dot(b.z_) ^ a.z_.dot(b.x_);
}

BitVec PauliOperator::symplectic() const {
    BitVec v(2 * n_);
    for (std::size_t q = 0; q < n_; ++q) {
        if (x_.test(q)) v.set(q);
        if (z_.test(q)) v.set(n_ + q);
    }
    return v;
}

PauliOperator PauliOperator::from_symplectic(std::size_t n, const BitVec& v, int phase_exp) {
    assert(v.size() == 2 * n);
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (v.test(q)) p.x_.set(q);
        if (v.test(n + q)) p.z_.set(q);
    }
    p.phase_ = ((phase_exp % 4) + 4) % 4;
    return p;
}

std::string PauliOperator::to_string() const {
    static const char* signs[4] = {"+", "+i", "-", "-i"};
    std::string s = signs[phase_];
    for (std::size_t q = 0; q < n_; ++q) {
        bool x = x_.test(q), z = z_.test(q);
        s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

bool in_group(const PauliOperator& p, const std::vector<PauliOperator>& generators,
              bool ignore_phase) {
    if (generators.empty()) return p.is_identity() || (ignore_phase && p.is_identity_up_to_phase());
    const std::size_t n = generators[0].n();
    if (p.n() != n) throw DimensionError("membership test across different qubit counts");

    BinaryMatrix span(2 * n);
    for (const auto& g : generators) {
        if (g.n() != n) throw DimensionError("generator qubit counts differ");
        span.add_row(g.symplectic());
    }
    auto sol = span.transposed().solve(p.symplectic());
    if (!sol) return false;
    if (ignore_phase) return true;

    auto subset_product = [&](const BitVec& coeff) {
        PauliOperator q = PauliOperator::identity(n);
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (coeff.test(i)) q = q * generators[i];
        return q;
    };

    // Phases reachable on top of the canonical-order product: a subgroup of Z4
    // generated by reorderings (factor -1 whenever two generators anticommute)
    // and by products over dependency relations among the generators.
    int phase_gen = 0;    // gcd-style: 0 -> {0}, 2 -> {0,2}, 1 -> Z4
    for (std::size_t i = 0; i < generators.size() && phase_gen != 1; ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (!generators[i].commutes_with(generators[j])) {
                phase_gen = 2;
                break;
            }
    for (const auto& k : sol->kernel) {
        PauliOperator q = subset_product(k);
        int ph = q.phase_exp();
        if (ph & 1) phase_gen = 1;
        else if (ph == 2 && phase_gen == 0) phase_gen = 2;
        if (phase_gen == 1) break;
    }

    int delta = ((p.phase_exp() - subset_product(sol->particular).phase_exp()) % 4 + 4) % 4;
    if (phase_gen == 1) return true;
    if (phase_gen == 2) return delta == 0 || delta == 2;
    return delta == 0;
}

}  // namespace sls
