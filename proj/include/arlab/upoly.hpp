#pragma once

#include "arlab/densepoly.hpp"
#include "arlab/rat.hpp"

#include <utility>
#include <vector>

namespace arlab {

using UPoly = DensePoly<Rat>;

UPoly monic(const UPoly& p);

/// Rational content: gcd of numerators over lcm of denominators, carrying
/// the sign of the leading coefficient. p == content * primitive_part,
/// where the primitive part has coprime integer coefficients and positive
/// leading coefficient.
Rat content_rat(const UPoly& p);
UPoly primitive_part(const UPoly& p);

/// Monic gcd via the primitive-part Euclidean algorithm (primitive PRS
/// over the integers). gcd(0,0) = 0, gcd(a,0) = monic(a).
UPoly gcd_monic(const UPoly& a, const UPoly& b);

struct XgcdResult {
    UPoly g, u, v; // g monic, g = u*a + v*b
};
XgcdResult xgcd(const UPoly& a, const UPoly& b);

bool divides(const UPoly& d, const UPoly& a);
UPoly lcm_monic(const UPoly& a, const UPoly& b);

/// Yun squarefree decomposition of a nonzero polynomial: pairwise coprime
/// monic squarefree parts with multiplicities, product of parts^mult equals
/// monic(a). Parts are emitted in increasing multiplicity order.
std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& a);

/// Monic product of the distinct irreducible factors of a nonzero a.
UPoly radical(const UPoly& a);

} // namespace arlab
