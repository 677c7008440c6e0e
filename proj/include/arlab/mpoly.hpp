#pragma once

#include "arlab/rat.hpp"
#include "arlab/upoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arlab {

using ExpVec = std::vector<std::uint32_t>;

/// Graded-lexicographic monomial order, X1 heaviest within a degree block.
/// Used as the std::map comparator, so the leading term sits at rbegin().
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over Q in variables X1..X_arity.
/// Invariant: no stored zero coefficients; all exponent vectors have
/// length arity.
class MPoly {
public:
    using TermMap = std::map<ExpVec, Rat, GradedLex>;

    explicit MPoly(int arity);
    static MPoly constant(int arity, Rat c);
    static MPoly var(int arity, int index); // index in [1, arity]
    static MPoly term(int arity, Rat c, ExpVec e);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()
    int term_count() const { return static_cast<int>(terms_.size()); }

    std::optional<int> total_degree() const;
    int degree_in(int index) const; // deg_{X_index}; -1 for the zero polynomial

    const TermMap& terms() const { return terms_; }
    const Rat& lead_coeff() const; // graded-lex leading coefficient
    const ExpVec& lead_exp() const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly mul_scalar(const Rat& s) const;
    MPoly div_scalar(const Rat& s) const;
    MPoly pow(unsigned long e) const;

    /// Substitute X_index := value (an MPoly of the same arity).
    MPoly substitute(int index, const MPoly& value) const;

    /// Evaluate X2..X_arity at alphas (length arity-1); X1 becomes T.
    UPoly specialize(const std::vector<Rat>& alphas) const;

    Rat eval(const std::vector<Rat>& point) const; // point length = arity

    void add_term(const ExpVec& e, const Rat& c); // internal accumulation

private:
    int arity_;
    TermMap terms_;
};

/// Embed a univariate polynomial as X_index within an arity-variable ring.
MPoly upoly_to_mpoly(const UPoly& f, int arity, int index);

/// Inverse embedding; requires that at most X_index occurs.
UPoly mpoly_to_upoly(const MPoly& F, int index);

/// h(F) for univariate h.
MPoly compose_upoly(const UPoly& h, const MPoly& F);

/// Exact division: a / b when b divides a, nullopt otherwise.
std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);

/// Gcd normalized to graded-lex leading coefficient 1, by recursion to the
/// main variable with primitive PRS. Arity capped at 3 (desk-scale limit).
MPoly mgcd(const MPoly& a, const MPoly& b);

/// Res_T(f(T) - X1, g(T) - X2): the implicit equation of the curve
/// parametrized by (f(t), g(t)). Sylvester determinant with the rows of
/// f(T) - X1 on top, evaluated by fraction-free elimination.
MPoly implicitize(const UPoly& f, const UPoly& g);

/// Sylvester resultant of two univariate-in-T polynomials with MPoly
/// coefficients, given lowest degree first. Rows of `a` on top.
MPoly resultant_mpoly(const std::vector<MPoly>& a, const std::vector<MPoly>& b, int arity);

} // namespace arlab
