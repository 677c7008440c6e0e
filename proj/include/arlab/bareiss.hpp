#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace arlab {

/// Fraction-free (Bareiss) determinant over an integral domain. ExactDiv
/// must perform exact division (the Bareiss identity guarantees
/// divisibility). Zero/One name the ring constants.
template <class R, class ExactDiv>
R det_bareiss(std::vector<std::vector<R>> m, const R& zero, const R& one, ExactDiv exact_div) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    int sign = 1;
    R prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == zero) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == zero) ++swap_row;
            if (swap_row == n) return zero;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
            m[i][k] = zero;
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return sign < 0 ? zero - det : det;
}

} // namespace arlab
