#pragma once

#include "arlab/errors.hpp"
#include "arlab/linalg.hpp"
#include "arlab/mpoly.hpp"
#include "arlab/rat.hpp"
#include "arlab/upoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace arlab {

enum class IndependenceMode { Plain, ModConstants };

/// A verified dependence: prod_i F_i^{relation[i]} == constant, with
/// constant == 1 in plain mode. Negative exponents mean exact division.
struct DependenceCertificate {
    std::vector<BigInt> relation;
    Rat constant;
};

template <class P>
struct PolyOps; // normalize / gcd / exact divide per polynomial flavour

template <>
struct PolyOps<UPoly> {
    static bool is_zero(const UPoly& p) { return p.is_zero(); }
    static bool is_constant(const UPoly& p) { return p.is_constant(); }
    static Rat constant_value(const UPoly& p) { return p.is_zero() ? Rat(0) : p.coeff(0); }
    static UPoly one_like(const UPoly&) { return UPoly::constant(Rat(1)); }
    static UPoly gcd(const UPoly& a, const UPoly& b) { return gcd_monic(a, b); }
    static std::optional<UPoly> divide(const UPoly& a, const UPoly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }
    // monic normalization: p = unit * normalized
    static std::pair<UPoly, Rat> normalize(const UPoly& p) {
        const Rat lc = p.lead();
        return {p.div_scalar(lc), lc};
    }
    static UPoly pow(const UPoly& p, unsigned long e) { return p.pow(e); }
    static UPoly mul_rat(const UPoly& p, const Rat& c) { return p.mul_scalar(c); }
};

template <>
struct PolyOps<MPoly> {
    static bool is_zero(const MPoly& p) { return p.is_zero(); }
    static bool is_constant(const MPoly& p) { return p.is_constant(); }
    static Rat constant_value(const MPoly& p) { return p.constant_value(); }
    static MPoly one_like(const MPoly& p) { return MPoly::constant(p.arity(), Rat(1)); }
    static MPoly gcd(const MPoly& a, const MPoly& b) { return mgcd(a, b); }
    static std::optional<MPoly> divide(const MPoly& a, const MPoly& b) { return try_divide(a, b); }
    static std::pair<MPoly, Rat> normalize(const MPoly& p) {
        const Rat lc = p.lead_coeff();
        return {p.div_scalar(lc), lc};
    }
    static MPoly pow(const MPoly& p, unsigned long e) { return p.pow(e); }
    static MPoly mul_rat(const MPoly& p, const Rat& c) { return p.mul_scalar(c); }
};

/// Pairwise-coprime nonconstant basis with integer exponent rows: for each
/// input i, input_i == units[i] * prod_j basis[j]^exponents[i][j], exactly.
template <class P>
struct GcdFreeBasis {
    std::vector<P> basis;
    std::vector<std::vector<long>> exponents; // row per input
    std::vector<Rat> units;
};

template <class P>
GcdFreeBasis<P> gcd_free_basis(const std::vector<P>& polys);

/// Independence verdict from a coprime-basis decomposition alone; exposed
/// so refinement invariance can be tested directly.
std::optional<DependenceCertificate>
dependence_from_decomposition(const std::vector<std::vector<long>>& exponents,
                              const std::vector<Rat>& units, IndependenceMode mode);

/// nullopt = multiplicatively independent; otherwise a certificate that
/// re-multiplies exactly (see certificate_valid).
template <class P>
std::optional<DependenceCertificate>
find_dependence(const std::vector<P>& polys, IndependenceMode mode);

template <class P>
bool certificate_valid(const std::vector<P>& polys, const DependenceCertificate& cert);

/// Throws HypothesisError when the polynomials are dependent in the given
/// mode; the message carries the certificate.
template <class P>
void require_independent(const std::vector<P>& polys, IndependenceMode mode, const char* context);

std::string certificate_to_string(const DependenceCertificate& cert);

} // namespace arlab
