#pragma once

#include "arlab/mulind.hpp"
#include "arlab/rat.hpp"
#include "arlab/upoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arlab {

/// The S-unit family of the sweep experiments: the two sides are
/// prod fs^n - prod phis^nu and prod gs^m - prod psis^mu. Empty phis/psis
/// mean the constant 1, which recovers gcd(f^n - 1, g^m - 1).
struct SUnitFamily {
    std::vector<UPoly> fs, phis, gs, psis;

    bool is_ar_case() const {
        return fs.size() == 1 && phis.empty() && gs.size() == 1 && psis.empty();
    }
    int exponent_count() const {
        return static_cast<int>(fs.size() + phis.size() + gs.size() + psis.size());
    }
    std::vector<UPoly> all_polys() const;
};

/// Theorem hypotheses shared by the sweep operations: nonconstant inputs,
/// disjoint zero sets within each side, multiplicative independence of the
/// whole family. Throws HypothesisError.
void check_family_hypotheses(const SUnitFamily& fam);

/// (11(df+dg)^2)^min(df,dg)
BigInt univar_bound(long df, long dg);
/// dh1*dh2*(11(df+dg)^2)^min(df,dg)
BigInt genar1_bound(long dh1, long dh2, long df, long dg);

/// Monic gcd(f^n - 1, g^m - 1).
UPoly ar_gcd(const UPoly& f, const UPoly& g, long n, long m);

struct GenAr1Result {
    UPoly gcd;
    BigInt bound;
    bool within_bound = false;
};

/// gcd(h1(f^n), h2(g^m)) with the Theorem-level degree bound; the
/// independence precheck (mod constants) runs unless suppressed.
GenAr1Result genar1_gcd(const UPoly& h1, const UPoly& h2, const UPoly& f, const UPoly& g,
                        long n, long m, bool precheck = true);

/// The gcd of the two S-unit differences at one exponent tuple. The tuple
/// lists exponents for fs, phis, gs, psis in that order; a side whose
/// exponents are all zero evaluates to 0 and is rejected.
UPoly sunit_gcd(const SUnitFamily& fam, const std::vector<long>& exps,
                bool check_hypotheses = true);

struct SweepRecord {
    std::vector<long> exps;
    UPoly gcd;
    std::optional<BigInt> bound; // present for the AR case
    bool within_bound = true;
};

struct SweepReport {
    SUnitFamily family;
    long grid_bound = 0;
    int torsion_window = 0;
    std::vector<SweepRecord> records; // lexicographic tuple order
    UPoly stable_divisor;             // running lcm over all records
    std::optional<std::vector<long>> stabilized_at; // last tuple where the lcm changed
    bool stabilized_early = false; // lcm unchanged over the final half of the grid
    std::optional<UPoly> h_candidate;         // AR case with sufficient window
    std::optional<bool> divides_candidate;    // stable_divisor | h_candidate
};

/// Sweep every admissible exponent tuple with entries <= grid_bound,
/// accumulate the stable divisor, and cross-check it against the torsion
/// window candidate when one is available. Stabilization is evidence, not
/// proof, and the report labels it as such.
SweepReport stable_divisor_sweep(const SUnitFamily& fam, long grid_bound, int torsion_window,
                                 int workers = 1);

/// Largest multiplicity among the roots; 0 for nonzero constants.
int max_multiplicity(const UPoly& p);

struct AbcMultResult {
    int mult = 0;
    long bound = 0;
    bool ok = false;
    UPoly difference;
};

/// Multiplicity check for prod fs^ns - prod gs^ms against the ABC bound
/// sum deg fs + sum deg gs. Requires disjoint zero sets and a nonzero
/// difference.
AbcMultResult abc_mult_check(const std::vector<UPoly>& fs, const std::vector<UPoly>& gs,
                             const std::vector<long>& ns, const std::vector<long>& ms);

/// Mason-Stothers: for pairwise coprime A + B = C, not all constant,
/// max(deg A, deg B, deg C) <= deg rad(ABC) - 1. Precondition violations
/// throw HypothesisError with distinct messages.
bool mason_stothers_check(const UPoly& A, const UPoly& B, const UPoly& C);

struct MonoidRecord {
    UPoly factor; // gcd-free piece of the stable divisor
    std::vector<std::vector<long>> members;
    long closure_pairs_checked = 0;
    bool closure_holds = true;
};

struct DensityReport {
    Rat density; // fraction of grid tuples with gcd == 1
    long total_cells = 0;
    long coprime_cells = 0;
    std::vector<MonoidRecord> monoids;
};

/// Box density of coprime tuples plus the monoid structure of the
/// exceptional ones. Requires gcd(prod fs - 1, prod gs - 1) = 1 on top of
/// the family hypotheses.
DensityReport coprimality_density(const SUnitFamily& fam, long grid_bound, std::uint64_t seed,
                                  int workers = 1);

/// Lexicographic exponent grid with entries in [0, bound], skipping tuples
/// where a side's exponents are all zero (the difference would be 0).
std::vector<std::vector<long>> sweep_grid(const SUnitFamily& fam, long bound);

namespace gcdlab_detail {
/// Serial reference kernel: one monic gcd per grid tuple.
std::vector<UPoly> sweep_cells_serial(const SUnitFamily& fam,
                                      const std::vector<std::vector<long>>& grid);
/// OpenMP kernel; identical output to the serial reference.
std::vector<UPoly> sweep_cells_parallel(const SUnitFamily& fam,
                                        const std::vector<std::vector<long>>& grid, int workers);
} // namespace gcdlab_detail

} // namespace arlab
