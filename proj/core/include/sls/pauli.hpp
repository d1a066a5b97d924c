#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sls/gf2.hpp"

namespace sls {

/// Thrown when operands act on different qubit counts.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A Pauli group element in the binary symplectic representation.
///
/// Stored as i^phase_exp * (tensor product of single-qubit letters I, X, Y, Z),
/// with the letter on qubit j given by the bit pair (x_j, z_j) and Y = i*X*Z.
/// Under this convention an operator is Hermitian iff phase_exp is even.
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : n_(n), x_(n), z_(n), phase_(0) {}
    PauliOperator(std::size_t n, BitVec x, BitVec z, int phase_exp)
        : n_(n), x_(std::move(x)), z_(std::move(z)), phase_(((phase_exp % 4) + 4) % 4) {}

    static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
    /// Single-qubit X, Y or Z embedded on qubit `q` of an n-qubit register.
    static PauliOperator single(std::size_t n, std::size_t q, char letter);
    /// Weight-w operator with the given letter on every listed qubit.
    static PauliOperator from_support(std::size_t n, const std::vector<std::size_t>& qubits,
                                      char letter);
    /// Parse the canonical text form: optional sign ("+", "-", "+i", "-i")
    /// followed by a string over {I,X,Y,Z}.
    static PauliOperator parse(std::string_view text);

    std::size_t n() const { return n_; }
    int phase_exp() const { return phase_; }
    bool x_bit(std::size_t q) const { return x_.test(q); }
    bool z_bit(std::size_t q) const { return z_.test(q); }
    const BitVec& x_bits() const { return x_; }
    const BitVec& z_bits() const { return z_; }

    bool is_hermitian() const { return (phase_ & 1) == 0; }
    bool is_identity() const { return phase_ == 0 && x_.is_zero() && z_.is_zero(); }
    bool is_identity_up_to_phase() const { return x_.is_zero() && z_.is_zero(); }
    std::size_t weight() const;

    PauliOperator operator*(const PauliOperator& o) const;
    bool commutes_with(const PauliOperator& o) const;
    bool operator==(const PauliOperator& o) const {
        return n_ == o.n_ && phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
    }

    /// Same with the phase forced to +1.
    PauliOperator unsigned_rep() const { return PauliOperator(n_, x_, z_, 0); }
    /// Product with i^k.
    PauliOperator with_phase_shift(int k) const { return PauliOperator(n_, x_, z_, phase_ + k); }

    /// Concatenated (x|z) bits, length 2n. Phase is dropped.
    BitVec symplectic() const;
    static PauliOperator from_symplectic(std::size_t n, const BitVec& v, int phase_exp = 0);

    /// Parity of the symplectic form: 0 = commute, 1 = anticommute.
    static bool symplectic_product(const PauliOperator& a, const PauliOperator& b);

    std::string to_string() const;

  private:
    std::size_t n_ = 0;
    BitVec x_, z_;
    int phase_ = 0;
};

/// True iff p is a product of the given generators. With ignore_phase the test
/// is membership of the symplectic vector in the generators' span; otherwise
/// phases are tracked exactly (so e.g. -I is not in a valid stabilizer group).
bool in_group(const PauliOperator& p, const std::vector<PauliOperator>& generators,
              bool ignore_phase);

}  // namespace sls
