#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sls {

/// Dense bit vector over GF(2), packed into 64-bit words.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v = true) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool is_zero() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    std::size_t popcount() const;
    /// Parity of the AND with another vector.
    bool dot(const BitVec& o) const;
    /// Index of the first set bit, or size() if none.
    std::size_t leading_bit() const;

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

    const std::vector<uint64_t>& words() const { return words_; }

  private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

/// Particular solution plus a basis of the homogeneous kernel.
struct AffineSolution {
    BitVec particular;
    std::vector<BitVec> kernel;
};

/// Row-major matrix over GF(2). Rows are constraint or span vectors.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(std::size_t n_cols) : n_cols_(n_cols) {}

    std::size_t n_cols() const { return n_cols_; }
    std::size_t n_rows() const { return rows_.size(); }
    void add_row(BitVec row) { rows_.push_back(std::move(row)); }
    const BitVec& row(std::size_t i) const { return rows_[i]; }
    const std::vector<BitVec>& rows() const { return rows_; }

    /// Row rank by Gaussian elimination. The matrix itself is untouched.
    std::size_t rank() const;

    /// Solve m * x = rhs with rows as constraints and n_cols unknowns.
    /// rhs.size() must equal n_rows(). Returns nullopt on inconsistency.
    std::optional<AffineSolution> solve(const BitVec& rhs) const;

    BinaryMatrix transposed() const;

  private:
    std::size_t n_cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Incrementally maintained reduced row space, for membership and quotient tests.
class Gf2Space {
  public:
    explicit Gf2Space(std::size_t n_cols) : n_cols_(n_cols) {}

    std::size_t n_cols() const { return n_cols_; }
    std::size_t rank() const { return basis_.size(); }

    /// Reduce v against the current basis; the residual is zero iff v is in the span.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

    /// Add v to the space. Returns true if the rank grew.
    bool add(const BitVec& v);

    const std::vector<BitVec>& basis() const { return basis_; }

  private:
    std::size_t n_cols_;
    std::vector<BitVec> basis_;    // rows with distinct pivots, kept reduced
    std::vector<std::size_t> pivots_;
};

}  // namespace sls
