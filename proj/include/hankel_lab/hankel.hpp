#pragma once

#include <cstddef>
#include <vector>

#include "hankel_lab/bigint.hpp"

namespace hlab {

// Dense square matrix of exact integers, row-major.
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n, Int(0)) {}

    std::size_t dim() const { return n_; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    void swap_rows(std::size_t i, std::size_t j);

private:
    std::size_t n_;
    std::vector<Int> entries_;
};

// (n+1)x(n+1) matrix with entry (i,j) = a[i+j+shift].
// Requires len(a) >= 2n+1+shift; throws InsufficientTerms otherwise.
SquareMatrix hankel_matrix(const IntSeq& a, std::size_t n, std::size_t shift = 0);

// Exact determinant by fraction-free (Bareiss) elimination with row-swap
// pivoting: first nonzero entry in the current column is the pivot, each swap
// flips the tracked sign, a column with no pivot gives 0. Every internal
// division is exact and asserted exact.
Int det_exact(SquareMatrix m);

struct HankelResult {
    std::size_t shift = 0;
    IntSeq values;                     // h_0..h_M
    std::vector<std::size_t> support;  // indices with h != 0, ascending
    bool in_unit_set = false;          // all values in {-1,0,1}
};

std::vector<std::size_t> support_of(const IntSeq& values);
bool all_in_unit_set(const IntSeq& values);

// h_n = det of the order-n Hankel matrix of a (entries a_{i+j+shift}),
// n = 0..M with M = floor((len(a)-1-shift)/2). Never extrapolates a.
HankelResult hankel_transform(const IntSeq& a, std::size_t shift = 0);

// prefix ++ a.
IntSeq prepend(const IntSeq& a, const IntSeq& prefix);

}  // namespace hlab
