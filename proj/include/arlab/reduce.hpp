#pragma once

#include "arlab/mpoly.hpp"
#include "arlab/rat.hpp"
#include "arlab/upoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arlab {

/// X_i -> X_i + X1^(d^(i-1)) for i = 2..arity; the degree-stabilizing
/// substitution used before specializing. d >= 2.
MPoly kronecker_forward(const MPoly& F, long d);
/// The inverse automorphism X_i -> X_i - X1^(d^(i-1)).
MPoly kronecker_backward(const MPoly& F, long d);

/// Deterministic enumeration of Q by increasing height:
/// 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, -3/2, 1/3, -1/3, 2/3, ...
std::vector<Rat> rationals_by_height(std::size_t count);

struct SpecializationResult {
    std::vector<Rat> alphas;
    std::vector<UPoly> specialized;
    long candidates_tried = 0;
};

/// First candidate vector (height-increasing diagonal order over tuples)
/// whose specializations stay multiplicatively independent mod constants.
/// Throws HypothesisError when the inputs are dependent, and
/// BudgetExhausted-style HypothesisError when no candidate works within the
/// budget. Candidate testing may run speculatively in parallel; the commit
/// order is the fixed enumeration order.
SpecializationResult find_independent_specialization(const std::vector<MPoly>& Fs, long budget,
                                                     int workers = 1);

struct MultivarChainReport {
    long n = 0, m = 0;
    int ell = 0;
    long cap_d = 0;  // D
    long sub_d = 0;  // d = D + 1
    MPoly tilde_f, tilde_g;
    std::vector<Rat> alphas;
    UPoly spec_f, spec_g;
    MPoly direct_gcd;
    int deg_direct = 0;
    int deg_tilde = 0;
    int deg_univariate = 0;
    BigInt bound;
    bool chain_ok = false;
    long candidates_tried = 0;

    MultivarChainReport() : tilde_f(1), tilde_g(1), direct_gcd(1) {}
};

/// Multivariate-to-univariate check: direct multivariate gcd, the
/// tilde/specialize univariate gcd, the degree chain between them, and the
/// exact bound dh1*dh2*(44(D+1)^(2l))^((D+1)^l).
MultivarChainReport multivar_ar_check(const UPoly& h1, const UPoly& h2, const MPoly& F,
                                      const MPoly& G, long n, long m, long budget = 1000,
                                      int workers = 1);

/// Nonzero R with R(F_1,...,F_{l+1}) = 0 and deg R <= deg_cap, found as a
/// kernel vector of the monomial-expansion matrix; deterministic choice via
/// the first free column in graded-lex order. |Fs| must be arity+1.
MPoly annihilator(const std::vector<MPoly>& Fs, long deg_cap);

struct BoundReport {
    std::string theorem;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> intermediates;
    BigInt value;
    bool exact = true; // false: directed upper rounding of a real-valued formula
    std::vector<std::string> warnings;
};

BoundReport bound_genar1(long dh1, long dh2, long df, long dg);
BoundReport bound_multivar(long dh1, long dh2, long D, long ell);
BoundReport bound_gamma(long D, long ell);
/// Covering-variety package: gamma, primorial, the defining-polynomial
/// degree bound (l+1) D^l primorial(gamma), and the variety-count upper
/// bound.
BoundReport bound_coset(long D, long ell);

/// ceil of (0.792 g / log(g+1))^g with every operation rounded toward
/// +infinity (>= 256-bit mantissa), so the result never understates the
/// paper bound.
BigInt n_bound_upper(unsigned long g);

/// gamma_l(D) = binom(l + 1 + D^l, l + 1)
BigInt gamma_ld(long D, long ell);

// --- torsion-coset containment verifier ---

struct CosetPiece {
    UPoly piece;                            // gcd-free piece of the solution union
    std::vector<std::vector<long>> covering; // relations whose cleared form it divides
};

struct CosetReportU {
    long n_cap = 0, b_cap = 0;
    std::vector<std::pair<std::vector<long>, UPoly>> tuple_zeros; // nonconstant per-tuple gcds
    std::vector<CosetPiece> pieces;
    std::optional<std::vector<long>> selected; // first relation covering every piece
    bool covered = false;
};

/// l = 1: solution sets are exact univariate gcds; coverage is exact
/// divisibility of the cleared relation polynomial by each piece.
CosetReportU coset_check_univariate(const std::vector<UPoly>& Fs, long n_cap, long b_cap);

struct ValueTupleRec {
    std::vector<int> orders;   // exact order of each coordinate value
    std::vector<int> indices;  // value_j = zeta_{orders[j]}^{indices[j]}
    std::string status;        // "candidate" or "degenerate"
};

struct CosetReportM {
    long n_cap = 0, b_cap = 0;
    int ell = 0;
    long tuples_scanned = 0;
    long empty_fibers = 0;
    std::vector<ValueTupleRec> candidates; // value tuples whose fiber was not proved empty
    std::optional<std::vector<long>> selected;
    bool covered = false;
    std::vector<std::string> warnings;
};

/// l = 2: enumerates root-of-unity value tuples, decides fiber emptiness by
/// resultant projections over the exact cyclotomic field, and checks the
/// relation condition on the surviving tuples. Emptiness certification is
/// one-sided: a tuple never proved empty stays in the constraint set, so a
/// reported covering relation is always sound.
CosetReportM coset_check_multivariate(const std::vector<MPoly>& Fs, long n_cap, long b_cap);

/// Shared signed-relation enumeration: component values ordered
/// 0, 1, ..., cap, -1, ..., -cap; tuples by (max rank, lex), zero excluded.
std::vector<std::vector<long>> relation_candidates(int slots, long cap);

} // namespace arlab
