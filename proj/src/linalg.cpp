#include "arlab/linalg.hpp"

#include <stdexcept>

namespace arlab {

Rref rref(RatMatrix m) {
    Rref out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    out.m = std::move(m);
    return out;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m, int cols) {
    Rref red = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : red.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
            if (red.pivot_cols[r] < f) v[red.pivot_cols[r]] = -red.m[r][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BigInt> to_coprime_integers(const std::vector<Rat>& v) {
    BigInt den_lcm = 1;
    for (const Rat& q : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(v.size());
    BigInt g = 0;
    for (const Rat& q : v) {
        BigInt x = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        out.push_back(std::move(x));
    }
    if (g == 0) throw std::invalid_argument("to_coprime_integers: zero vector");
    for (const BigInt& x : out) {
        if (x != 0) {
            if (x < 0) g = -g;
            break;
        }
    }
    for (BigInt& x : out) x /= g;
    return out;
}

} // namespace arlab
