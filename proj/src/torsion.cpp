#include "arlab/torsion.hpp"

#include "arlab/bareiss.hpp"
#include "arlab/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arlab {

int euler_phi(int d) {
    if (d < 1) throw std::invalid_argument("euler_phi: d must be >= 1");
    int result = d;
    int n = d;
    for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

UPoly t_power_minus_one(int d) {
    UPoly p = UPoly::term(Rat(1), static_cast<std::size_t>(d));
    return p - UPoly::constant(Rat(1));
}

} // namespace

UPoly cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be >= 1");
    static std::mutex mu;
    static std::map<int, UPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (T^d - 1) / prod_{e|d, e<d} Phi_e, computed bottom-up so the
    // recursion only ever sees cached entries.
    for (int k = 1; k <= d; ++k) {
        if (d % k != 0 || cache.count(k)) continue;
        UPoly num = t_power_minus_one(k);
        for (int e = 1; e < k; ++e) {
            if (k % e != 0) continue;
            auto [q, r] = divrem(num, cache.at(e));
            if (!r.is_zero()) throw std::logic_error("cyclotomic: non-exact division");
            num = std::move(q);
        }
        cache.emplace(k, std::move(num));
    }
    return cache.at(d);
}

CyclotomicIndex cyclotomic_index(int d) {
    CyclotomicIndex ci;
    ci.d = d;
    ci.phi = euler_phi(d);
    ci.poly = cyclotomic(d);
    return ci;
}

bool is_cyclotomic_product(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("is_cyclotomic_product: zero polynomial");
    UPoly q = monic(p);
    const int dq = q.deg();
    const long dmax = 2L * dq * dq;
    for (long d = 1; d <= dmax && !q.is_constant(); ++d) {
        if (euler_phi(static_cast<int>(d)) > q.deg()) continue;
        const UPoly phi = cyclotomic(static_cast<int>(d));
        while (!q.is_constant()) {
            auto [quot, rem] = divrem(q, phi);
            if (!rem.is_zero()) break;
            q = std::move(quot);
        }
    }
    return q.is_constant();
}

UPoly torsion_window(int B) {
    if (B < 1) throw std::invalid_argument("torsion_window: B must be >= 1");
    UPoly w = UPoly::constant(Rat(1));
    for (int d = 1; d <= B; ++d) w *= cyclotomic(d);
    return w;
}

UPoly common_torsion_zeros(const UPoly& f, const UPoly& g, int B) {
    if (f.is_constant() || g.is_constant())
        throw std::invalid_argument("common_torsion_zeros: constant inputs rejected");
    const UPoly window = torsion_window(B);
    const UPoly gf = window.compose(f);
    const UPoly gg = window.compose(g);
    UPoly d = gcd_monic(gf, gg);
    if (d.is_constant()) return UPoly::constant(Rat(1));
    return radical(d);
}

int default_scan_bound(const MPoly& H) {
    const int deg = H.total_degree().value_or(0);
    return 6 * (deg + 1) * (deg + 1);
}

std::optional<ExceptionalFactor> find_exceptional_factor(const MPoly& H) {
    if (H.is_zero() || H.arity() != 2)
        throw std::invalid_argument("find_exceptional_factor: nonzero arity-2 polynomial required");
    const int deg = *H.total_degree();
    if (deg == 0) return std::nullopt;
    auto gcd_ij = [](int i, int j) { return std::gcd(i, j); };
    for (int d = 1; d <= 2 * deg * deg; ++d) {
        const int phi = euler_phi(d);
        if (phi > deg) continue;
        const UPoly phi_d = cyclotomic(d);
        // Type A: Phi_d(X^i Y^j), the norm of X^i Y^j - rho, deg = phi*(i+j).
        for (int i = 0; i * phi <= deg; ++i) {
            for (int j = (i == 0 ? 1 : 0); phi * (i + j) <= deg; ++j) {
                if (i > 0 && j > 0 && gcd_ij(i, j) != 1) continue;
                MPoly cand(2);
                for (std::size_t c = 0; c < phi_d.coeffs().size(); ++c) {
                    const Rat& a = phi_d.coeffs()[c];
                    if (a == 0) continue;
                    cand.add_term({static_cast<std::uint32_t>(i * c),
                                   static_cast<std::uint32_t>(j * c)},
                                  a);
                }
                if (try_divide(H, cand)) {
                    return ExceptionalFactor{cand, "torsion-coset factor: norm of X^" +
                                                       std::to_string(i) + "*Y^" + std::to_string(j) +
                                                       " - rho with rho of order " + std::to_string(d)};
                }
            }
        }
        // Type B: norm of X^i - rho Y^j, deg = phi*max(i,j).
        for (int i = 1; i * phi <= deg; ++i) {
            for (int j = 1; phi * std::max(i, j) <= deg; ++j) {
                if (gcd_ij(i, j) != 1) continue;
                MPoly cand(2);
                for (std::size_t c = 0; c < phi_d.coeffs().size(); ++c) {
                    const Rat& a = phi_d.coeffs()[c];
                    if (a == 0) continue;
                    cand.add_term({static_cast<std::uint32_t>(i * c),
                                   static_cast<std::uint32_t>(j * (phi - static_cast<int>(c)))},
                                  a);
                }
                if (try_divide(H, cand)) {
                    return ExceptionalFactor{cand, "torsion-coset factor: norm of X^" +
                                                       std::to_string(i) + " - rho*Y^" + std::to_string(j) +
                                                       " with rho of order " + std::to_string(d)};
                }
            }
        }
    }
    return std::nullopt;
}

// --- modular machinery ---

namespace {

long mulmod(long a, long b, long p) {
    return static_cast<long>(static_cast<__int128>(a) * b % p);
}

long powmod(long base, long e, long p) {
    long r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (e) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d : {2L, 3L, 5L, 7L, 11L, 13L}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit range
    long d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (a % n == 0) continue;
        long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

long primitive_root(long p) {
    std::vector<long> qs;
    long m = p - 1;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        qs.push_back(q);
        while (m % q == 0) m /= q;
    }
    if (m > 1) qs.push_back(m);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs) {
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: not found");
}

struct ClearedPoly {
    // integer-cleared H: terms (e1, e2, numerator), common denominator den
    std::vector<std::tuple<std::uint32_t, std::uint32_t, BigInt>> terms;
    BigInt den = 1;
    BigInt content = 0;
};

ClearedPoly clear_denominators(const MPoly& H) {
    ClearedPoly out;
    for (const auto& [e, c] : H.terms())
        mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : H.terms()) {
        BigInt n = c.get_num() * (out.den / c.get_den());
        mpz_gcd(out.content.get_mpz_t(), out.content.get_mpz_t(), n.get_mpz_t());
        out.terms.emplace_back(e[0], e[1], std::move(n));
    }
    return out;
}

constexpr long kPrimeSearchCeiling = 2'000'000;

std::vector<long> admissible_primes_cleared(const ClearedPoly& cp, long modulus, long floor,
                                            int count) {
    std::vector<long> out;
    long k = std::max(1L, (floor - 1 + modulus - 1) / modulus);
    for (; static_cast<int>(out.size()) < count; ++k) {
        const long p = modulus * k + 1;
        if (p > kPrimeSearchCeiling) break;
        if (!is_prime_long(p)) continue;
        if (mpz_divisible_ui_p(cp.den.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        if (cp.content != 0 &&
            mpz_divisible_ui_p(cp.content.get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        out.push_back(p);
    }
    return out;
}

// candidate zeros of H among points of exact orders (a, b), under one prime
std::set<std::pair<int, int>> zero_indices_mod_p(const ClearedPoly& cp, long p, int a, int b,
                                                 long lcm_ab) {
    const long g = primitive_root(p);
    const long omega = powmod(g, (p - 1) / lcm_ab, p); // order lcm_ab
    const long za = powmod(omega, lcm_ab / a, p);      // order a
    const long zb = powmod(omega, lcm_ab / b, p);      // order b
    // reduce coefficients once
    std::vector<std::tuple<std::uint32_t, std::uint32_t, long>> terms;
    terms.reserve(cp.terms.size());
    for (const auto& [e1, e2, c] : cp.terms) {
        long r = static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
        terms.emplace_back(e1, e2, r);
    }
    std::set<std::pair<int, int>> zeros;
    for (int i = 0; i < a; ++i) {
        if (std::gcd(i, a) != 1 && !(a == 1 && i == 0)) continue;
        const long x = powmod(za, i, p);
        for (int k = 0; k < b; ++k) {
            if (std::gcd(k, b) != 1 && !(b == 1 && k == 0)) continue;
            const long y = powmod(zb, k, p);
            long acc = 0;
            for (const auto& [e1, e2, c] : terms) {
                acc = (acc + mulmod(c, mulmod(powmod(x, e1, p), powmod(y, e2, p), p), p)) % p;
            }
            if (acc == 0) zeros.emplace(i, k);
        }
    }
    return zeros;
}

// Res_Y(H, Y^b - 1) as a polynomial in X, by Bareiss over Q[X].
UPoly resultant_y_unity(const MPoly& H, int b) {
    const int dy = H.degree_in(2);
    if (dy < 1) {
        // H does not involve Y; the common-zero condition degenerates to H(X) itself
        return mpoly_to_upoly(H, 1);
    }
    std::vector<UPoly> hc(static_cast<std::size_t>(dy) + 1, UPoly::zero());
    for (const auto& [e, c] : H.terms()) {
        hc[e[1]] += UPoly::term(c, e[0]);
    }
    std::vector<UPoly> yb(static_cast<std::size_t>(b) + 1, UPoly::zero());
    yb[0] = UPoly::constant(Rat(-1));
    yb[static_cast<std::size_t>(b)] = UPoly::constant(Rat(1));
    const int n = dy + b;
    std::vector<std::vector<UPoly>> m(static_cast<std::size_t>(n),
                                      std::vector<UPoly>(static_cast<std::size_t>(n), UPoly::zero()));
    for (int r = 0; r < b; ++r)
        for (int j = 0; j <= dy; ++j) m[r][r + j] = hc[static_cast<std::size_t>(dy - j)];
    for (int r = 0; r < dy; ++r)
        for (int j = 0; j <= b; ++j) m[b + r][r + j] = yb[static_cast<std::size_t>(b - j)];
    auto exact_div = [](const UPoly& num, const UPoly& den) {
        auto [q, rem] = divrem(num, den);
        if (!rem.is_zero()) throw std::logic_error("bareiss: non-exact division");
        return q;
    };
    return det_bareiss(std::move(m), UPoly::zero(), UPoly::constant(Rat(1)), exact_div);
}

struct CellOutcome {
    std::vector<TorsionPoint> points;
    std::vector<long> primes;
    std::vector<std::string> warnings;
};

CellOutcome scan_one_pair(const ClearedPoly& cp, int a, int b, const TorsionScanConfig& cfg) {
    CellOutcome out;
    const long l = std::lcm<long>(a, b);
    std::vector<long> primes = admissible_primes_cleared(cp, l, cfg.prime_floor, cfg.prime_count);
    if (static_cast<int>(primes.size()) < cfg.prime_count) {
        out.warnings.push_back("no admissible prime = 1 mod " + std::to_string(l) +
                               " below the search ceiling; order pair (" + std::to_string(a) +
                               "," + std::to_string(b) + ") skipped");
        return out;
    }
    out.primes = primes;
    std::set<std::pair<int, int>> zeros = zero_indices_mod_p(cp, primes[0], a, b, l);
    for (std::size_t i = 1; i < primes.size() && !zeros.empty(); ++i) {
        std::set<std::pair<int, int>> next = zero_indices_mod_p(cp, primes[i], a, b, l);
        std::set<std::pair<int, int>> merged;
        std::set_intersection(zeros.begin(), zeros.end(), next.begin(), next.end(),
                              std::inserter(merged, merged.begin()));
        zeros = std::move(merged);
    }
    for (const auto& [i, k] : zeros) out.points.push_back(TorsionPoint{a, b, i, k});
    return out;
}

} // namespace

std::vector<long> admissible_primes(const MPoly& H, long modulus, long floor, int count) {
    return admissible_primes_cleared(clear_denominators(H), modulus, floor, count);
}

bool zero_at_unity_pair_mod_p(const MPoly& H, long p, int ax, int ix, int ay, int iy) {
    const long l = std::lcm<long>(ax, ay);
    if ((p - 1) % l != 0) throw std::invalid_argument("zero_at_unity_pair_mod_p: p != 1 mod lcm");
    ClearedPoly cp = clear_denominators(H);
    const long g = primitive_root(p);
    const long omega = powmod(g, (p - 1) / l, p);
    const long x = powmod(omega, (l / ax) * ix, p);
    const long y = powmod(omega, (l / ay) * iy, p);
    long acc = 0;
    for (const auto& [e1, e2, c] : cp.terms) {
        long cr = static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
        acc = (acc + mulmod(cr, mulmod(powmod(x, e1, p), powmod(y, e2, p), p), p)) % p;
    }
    return acc == 0;
}

namespace torsion_detail {

std::vector<std::vector<TorsionPoint>>
scan_cells_serial(const MPoly& H, const std::vector<std::pair<int, int>>& pairs,
                  const TorsionScanConfig& cfg, std::vector<std::string>& warnings,
                  std::vector<long>& primes_used) {
    const ClearedPoly cp = clear_denominators(H);
    std::vector<std::vector<TorsionPoint>> cells(pairs.size());
    std::vector<CellOutcome> outcomes(pairs.size());
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        outcomes[idx] = scan_one_pair(cp, pairs[idx].first, pairs[idx].second, cfg);
    }
    std::set<long> primes;
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        cells[idx] = std::move(outcomes[idx].points);
        primes.insert(outcomes[idx].primes.begin(), outcomes[idx].primes.end());
        for (auto& w : outcomes[idx].warnings) warnings.push_back(std::move(w));
    }
    primes_used.assign(primes.begin(), primes.end());
    return cells;
}

std::vector<std::vector<TorsionPoint>>
scan_cells_parallel(const MPoly& H, const std::vector<std::pair<int, int>>& pairs,
                    const TorsionScanConfig& cfg, std::vector<std::string>& warnings,
                    std::vector<long>& primes_used) {
    const ClearedPoly cp = clear_denominators(H);
    std::vector<std::vector<TorsionPoint>> cells(pairs.size());
    std::vector<CellOutcome> outcomes(pairs.size());
    const int n = static_cast<int>(pairs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, cfg.workers))
#endif
    for (int idx = 0; idx < n; ++idx) {
        outcomes[static_cast<std::size_t>(idx)] =
            scan_one_pair(cp, pairs[static_cast<std::size_t>(idx)].first,
                          pairs[static_cast<std::size_t>(idx)].second, cfg);
    }
    // deterministic merge in pair order
    std::set<long> primes;
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        cells[idx] = std::move(outcomes[idx].points);
        primes.insert(outcomes[idx].primes.begin(), outcomes[idx].primes.end());
        for (auto& w : outcomes[idx].warnings) warnings.push_back(std::move(w));
    }
    primes_used.assign(primes.begin(), primes.end());
    return cells;
}

} // namespace torsion_detail

bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
    return a.order_x == b.order_x && a.order_y == b.order_y && a.index_x == b.index_x &&
           a.index_y == b.index_y;
}

TorsionScan count_torsion_points(const MPoly& H, const TorsionScanConfig& cfg) {
    if (H.is_zero()) throw std::invalid_argument("count_torsion_points: zero polynomial");
    if (H.arity() != 2) throw std::invalid_argument("count_torsion_points: arity-2 curve required");
    TorsionScan scan;
    scan.scan_bound = cfg.max_order > 0 ? cfg.max_order : default_scan_bound(H);
    scan.exceptional = find_exceptional_factor(H);
    if (scan.exceptional) return scan;

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(scan.scan_bound) * scan.scan_bound);
    for (int a = 1; a <= scan.scan_bound; ++a)
        for (int b = 1; b <= scan.scan_bound; ++b) pairs.emplace_back(a, b);

    auto cells = cfg.workers > 1
                     ? torsion_detail::scan_cells_parallel(H, pairs, cfg, scan.warnings,
                                                           scan.primes_used)
                     : torsion_detail::scan_cells_serial(H, pairs, cfg, scan.warnings,
                                                         scan.primes_used);
    for (auto& cell : cells)
        for (auto& pt : cell) scan.points.push_back(pt);

    if (cfg.certify) {
        std::vector<TorsionPoint> kept;
        for (const TorsionPoint& pt : scan.points) {
            const UPoly res = resultant_y_unity(H, pt.order_y);
            const UPoly phi = cyclotomic(pt.order_x);
            const bool ok = res.is_zero() || !gcd_monic(res, phi).is_constant();
            if (ok) {
                kept.push_back(pt);
            } else {
                scan.warnings.push_back("candidate point rejected by the symbolic recheck at orders (" +
                                        std::to_string(pt.order_x) + "," +
                                        std::to_string(pt.order_y) + ")");
            }
        }
        scan.points = std::move(kept);
        scan.certified = true;
    }
    return scan;
}

} // namespace arlab
