#include "hankel_lab/hankel.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hankel_lab/errors.hpp"

namespace hlab {

void SquareMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n_; ++k) std::swap(at(i, k), at(j, k));
}

SquareMatrix hankel_matrix(const IntSeq& a, std::size_t n, std::size_t shift) {
    std::size_t need = 2 * n + 1 + shift;
    if (a.size() < need) {
        throw InsufficientTerms("hankel_matrix: need " + std::to_string(need) + " terms, have " +
                                std::to_string(a.size()));
    }
    SquareMatrix m(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) m.at(i, j) = a[i + j + shift];
    }
    return m;
}

Int det_exact(SquareMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // First nonzero pivot in column k.
        std::size_t pivot_row = k;
        while (pivot_row < n && m.at(pivot_row, k) == 0) ++pivot_row;
        if (pivot_row == n) return 0;
        if (pivot_row != k) {
            m.swap_rows(pivot_row, k);
            sign = -sign;
        }
        const Int pivot = m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * pivot - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_div(num, prev, "det_exact");
            }
            m.at(i, k) = 0;
        }
        prev = pivot;
    }
    return sign * m.at(n - 1, n - 1);
}

std::vector<std::size_t> support_of(const IntSeq& values) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0) s.push_back(i);
    }
    return s;
}

bool all_in_unit_set(const IntSeq& values) {
    return std::all_of(values.begin(), values.end(),
                       [](const Int& v) { return v >= -1 && v <= 1; });
}

HankelResult hankel_transform(const IntSeq& a, std::size_t shift) {
    if (a.size() < 1 + shift) {
        throw InsufficientTerms("hankel_transform: need at least " + std::to_string(1 + shift) +
                                " terms, have " + std::to_string(a.size()));
    }
    std::size_t count = (a.size() - 1 - shift) / 2 + 1;  // h_0..h_M
    HankelResult r;
    r.shift = shift;
    r.values.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        r.values.push_back(det_exact(hankel_matrix(a, n, shift)));
    }
    r.support = support_of(r.values);
    r.in_unit_set = all_in_unit_set(r.values);
    return r;
}

IntSeq prepend(const IntSeq& a, const IntSeq& prefix) {
    IntSeq r;
    r.reserve(prefix.size() + a.size());
    r.insert(r.end(), prefix.begin(), prefix.end());
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

}  // namespace hlab
