#include "sls/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace sls {

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool BitVec::dot(const BitVec& o) const {
    assert(nbits_ == o.nbits_);
    uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
}

std::size_t BitVec::leading_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return nbits_;
}

std::size_t BinaryMatrix::rank() const {
    std::vector<BitVec> work = rows_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_cols_ && rank < work.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t r = 0; r < work.size(); ++r)
            if (r != rank && work[r].test(col)) work[r] ^= work[rank];
        ++rank;
    }
    return rank;
}

std::optional<AffineSolution> BinaryMatrix::solve(const BitVec& rhs) const {
    assert(rhs.size() == n_rows());
    // Augmented elimination: keep each constraint row with its rhs bit.
    std::vector<BitVec> work = rows_;
    std::vector<bool> b(n_rows());
    for (std::size_t r = 0; r < n_rows(); ++r) b[r] = rhs.test(r);

    std::vector<std::size_t> pivot_col;    // column of the pivot of eliminated row i
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_cols_ && rank < work.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[rank], work[pivot]);
        std::swap(b[rank], b[pivot]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r != rank && work[r].test(col)) {
                work[r] ^= work[rank];
                b[r] = b[r] ^ b[rank];
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < work.size(); ++r)
        if (b[r]) return std::nullopt;

    AffineSolution sol;
    sol.particular = BitVec(n_cols_);
    for (std::size_t r = 0; r < rank; ++r)
        if (b[r]) sol.particular.set(pivot_col[r]);

    std::vector<bool> is_pivot(n_cols_, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t col = 0; col < n_cols_; ++col) {
        if (is_pivot[col]) continue;
        BitVec k(n_cols_);
        k.set(col);
        for (std::size_t r = 0; r < rank; ++r)
            if (work[r].test(col)) k.set(pivot_col[r]);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(n_rows());
    for (std::size_t c = 0; c < n_cols_; ++c) {
        BitVec row(n_rows());
        for (std::size_t r = 0; r < n_rows(); ++r)
            if (rows_[r].test(c)) row.set(r);
        t.add_row(std::move(row));
    }
    return t;
}

BitVec Gf2Space::reduce(BitVec v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.test(pivots_[i])) v ^= basis_[i];
    return v;
}

bool Gf2Space::add(const BitVec& v) {
    BitVec r = reduce(v);
    if (r.is_zero()) return false;
    std::size_t p = r.leading_bit();
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].test(p)) basis_[i] ^= r;
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

}  // namespace sls
