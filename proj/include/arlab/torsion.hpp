#pragma once

#include "arlab/mpoly.hpp"
#include "arlab/rat.hpp"
#include "arlab/upoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arlab {

int euler_phi(int d);

struct CyclotomicIndex {
    int d = 0;
    int phi = 0;
    UPoly poly; // Phi_d
};

/// Phi_d, computed as (T^d - 1) / prod_{e|d, e<d} Phi_e. Cached.
UPoly cyclotomic(int d);
CyclotomicIndex cyclotomic_index(int d);

/// True iff every root of p is a root of unity: trial division by all
/// Phi_d with phi(d) <= deg p, enumerated via d <= 2*(deg p)^2.
bool is_cyclotomic_product(const UPoly& p);

/// Psi_B = prod_{d<=B} Phi_d; deg = sum of phi(d).
UPoly torsion_window(int B);

/// Monic squarefree polynomial whose roots are exactly the t with f(t) and
/// g(t) both roots of unity of order <= B.
UPoly common_torsion_zeros(const UPoly& f, const UPoly& g, int B);

struct TorsionScanConfig {
    int max_order = 0; // 0: use default_scan_bound
    int prime_count = 3;
    long prime_floor = 1000;
    bool certify = false;
    int workers = 1;
};

struct TorsionPoint {
    int order_x = 0, order_y = 0; // exact multiplicative orders
    int index_x = 0, index_y = 0; // point is (zeta_ox^ix, zeta_oy^iy)
};

struct ExceptionalFactor {
    MPoly factor;
    std::string description;
};

struct TorsionScan {
    int scan_bound = 0;
    std::vector<TorsionPoint> points;
    std::vector<long> primes_used; // sorted union over scanned order pairs
    std::vector<std::string> warnings;
    std::optional<ExceptionalFactor> exceptional; // set => scan was skipped
    bool certified = false;
};

/// Heuristic default window 6*(deg H + 1)^2. No effective universal bound
/// on torsion-point orders is pinned here, so counts are always labeled
/// "within order <= B".
int default_scan_bound(const MPoly& H);

/// Binomial subtorus factors X^i Y^j - rho or X^i - rho Y^j (rho a root of
/// unity), detected over Q through their rational norm forms Phi_d(X^i Y^j)
/// and sum_c a_c X^{ic} Y^{j(phi(d)-c)}; a non-rational rho cannot divide a
/// rational H without all of its conjugates, so divisibility by the norm
/// form is the right rational test.
std::optional<ExceptionalFactor> find_exceptional_factor(const MPoly& H);

/// Scan all order pairs (a,b) <= B. A point is reported iff H vanishes on
/// it under prime_count independent prime embeddings p = 1 (mod lcm(a,b));
/// certify additionally re-checks each candidate symbolically via
/// gcd(Res_Y(H, Y^b - 1), Phi_a) != 1.
TorsionScan count_torsion_points(const MPoly& H, const TorsionScanConfig& cfg);

// --- modular evaluation helpers (exposed for the agreement tests) ---

/// Primes p = 1 (mod modulus), p >= floor, usable for H (p divides neither
/// the cleared denominator nor the numerator content). Empty if the search
/// ceiling is exhausted.
std::vector<long> admissible_primes(const MPoly& H, long modulus, long floor, int count);

/// Evaluate H at (zeta_ax^ix, zeta_ay^iy) under the embedding into F_p
/// determined by the smallest primitive root; requires p = 1 (mod lcm).
bool zero_at_unity_pair_mod_p(const MPoly& H, long p, int ax, int ix, int ay, int iy);

namespace torsion_detail {
/// Serial reference kernel over the listed order pairs.
std::vector<std::vector<TorsionPoint>>
scan_cells_serial(const MPoly& H, const std::vector<std::pair<int, int>>& pairs,
                  const TorsionScanConfig& cfg, std::vector<std::string>& warnings,
                  std::vector<long>& primes_used);
/// OpenMP kernel; byte-identical results to the serial reference.
std::vector<std::vector<TorsionPoint>>
scan_cells_parallel(const MPoly& H, const std::vector<std::pair<int, int>>& pairs,
                    const TorsionScanConfig& cfg, std::vector<std::string>& warnings,
                    std::vector<long>& primes_used);
} // namespace torsion_detail

bool operator==(const TorsionPoint& a, const TorsionPoint& b);

} // namespace arlab
