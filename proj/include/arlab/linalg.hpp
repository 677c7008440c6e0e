#pragma once

#include "arlab/rat.hpp"

#include <vector>

namespace arlab {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Reduced row echelon form over Q (exact); returns the pivot columns in
/// increasing order alongside the reduced matrix.
struct Rref {
    RatMatrix m;
    std::vector<int> pivot_cols;
};
Rref rref(RatMatrix m);

/// Basis of the right kernel of m, one vector per free column, ordered by
/// increasing free-column index. Each vector has a 1 in its free column.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m, int cols);

/// Clear denominators and divide by the gcd; flip sign so the first
/// nonzero entry is positive. Input must be nonzero.
std::vector<BigInt> to_coprime_integers(const std::vector<Rat>& v);

} // namespace arlab
