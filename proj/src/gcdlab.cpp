#include "arlab/gcdlab.hpp"

#include "arlab/errors.hpp"
#include "arlab/torsion.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arlab {

std::vector<UPoly> SUnitFamily::all_polys() const {
    std::vector<UPoly> out;
    out.insert(out.end(), fs.begin(), fs.end());
    out.insert(out.end(), phis.begin(), phis.end());
    out.insert(out.end(), gs.begin(), gs.end());
    out.insert(out.end(), psis.begin(), psis.end());
    return out;
}

namespace {

UPoly product(const std::vector<UPoly>& ps) {
    UPoly r = UPoly::constant(Rat(1));
    for (const UPoly& p : ps) r *= p;
    return r;
}

UPoly power_product(const std::vector<UPoly>& ps, const long* exps) {
    UPoly r = UPoly::constant(Rat(1));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (exps[i] < 0) throw std::invalid_argument("sunit side: negative exponent");
        if (exps[i] > 0) r *= ps[i].pow(static_cast<unsigned long>(exps[i]));
    }
    return r;
}

bool all_zero(const long* exps, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (exps[i] != 0) return false;
    }
    return true;
}

constexpr long kGridCellCap = 2'000'000;

} // namespace

void check_family_hypotheses(const SUnitFamily& fam) {
    if (fam.fs.empty() || fam.gs.empty())
        throw HypothesisError("sunit family: fs and gs must be nonempty");
    for (const UPoly& p : fam.all_polys()) {
        if (p.is_constant())
            throw HypothesisError("sunit family: constant polynomial in the family");
    }
    if (!fam.phis.empty() && !gcd_monic(product(fam.fs), product(fam.phis)).is_constant())
        throw HypothesisError("sunit family: Z(f_1...f_l) and Z(phi_1...phi_k) intersect");
    if (!fam.psis.empty() && !gcd_monic(product(fam.gs), product(fam.psis)).is_constant())
        throw HypothesisError("sunit family: Z(g_1...g_r) and Z(psi_1...psi_s) intersect");
    require_independent(fam.all_polys(), IndependenceMode::Plain, "sunit family");
}

BigInt univar_bound(long df, long dg) {
    const BigInt base = BigInt(11) * (df + dg) * (df + dg);
    return bigint_pow(base, static_cast<unsigned long>(std::min(df, dg)));
}

BigInt genar1_bound(long dh1, long dh2, long df, long dg) {
    return BigInt(dh1) * BigInt(dh2) * univar_bound(df, dg);
}

UPoly ar_gcd(const UPoly& f, const UPoly& g, long n, long m) {
    if (n < 1 || m < 1) throw std::invalid_argument("ar_gcd: exponents must be >= 1");
    if (f.is_constant() || g.is_constant())
        throw std::invalid_argument("ar_gcd: constant polynomials rejected");
    const UPoly one = UPoly::constant(Rat(1));
    return gcd_monic(f.pow(static_cast<unsigned long>(n)) - one,
                     g.pow(static_cast<unsigned long>(m)) - one);
}

GenAr1Result genar1_gcd(const UPoly& h1, const UPoly& h2, const UPoly& f, const UPoly& g,
                        long n, long m, bool precheck) {
    if (n < 1 || m < 1) throw std::invalid_argument("genar1_gcd: exponents must be >= 1");
    if (h1.is_constant() || h2.is_constant() || f.is_constant() || g.is_constant())
        throw std::invalid_argument("genar1_gcd: constant inputs rejected");
    if (precheck) require_independent<UPoly>({f, g}, IndependenceMode::ModConstants, "genar1");
    GenAr1Result out;
    out.gcd = gcd_monic(h1.compose(f.pow(static_cast<unsigned long>(n))),
                        h2.compose(g.pow(static_cast<unsigned long>(m))));
    out.bound = genar1_bound(h1.deg(), h2.deg(), f.deg(), g.deg());
    out.within_bound = BigInt(out.gcd.is_zero() ? 0 : out.gcd.deg()) <= out.bound;
    return out;
}

UPoly sunit_gcd(const SUnitFamily& fam, const std::vector<long>& exps, bool check_hypotheses) {
    if (check_hypotheses) check_family_hypotheses(fam);
    if (static_cast<int>(exps.size()) != fam.exponent_count())
        throw std::invalid_argument("sunit_gcd: exponent tuple length mismatch");
    const long* e = exps.data();
    const long* e_phis = e + fam.fs.size();
    const long* e_gs = e_phis + fam.phis.size();
    const long* e_psis = e_gs + fam.gs.size();
    if (all_zero(e, fam.fs.size()) && all_zero(e_phis, fam.phis.size()))
        throw HypothesisError("sunit_gcd: first side is identically zero (all exponents zero)");
    if (all_zero(e_gs, fam.gs.size()) && all_zero(e_psis, fam.psis.size()))
        throw HypothesisError("sunit_gcd: second side is identically zero (all exponents zero)");
    const UPoly side1 = power_product(fam.fs, e) - power_product(fam.phis, e_phis);
    const UPoly side2 = power_product(fam.gs, e_gs) - power_product(fam.psis, e_psis);
    if (side1.is_zero() || side2.is_zero())
        throw HypothesisError("sunit_gcd: a side vanished identically");
    if (side1.is_constant() && side2.is_constant())
        return UPoly::constant(Rat(1)); // nonzero constants share no zero
    return gcd_monic(side1, side2);
}

std::vector<std::vector<long>> sweep_grid(const SUnitFamily& fam, long bound) {
    if (bound < 1) throw std::invalid_argument("sweep_grid: bound must be >= 1");
    const int L = fam.exponent_count();
    double cells = 1;
    for (int i = 0; i < L; ++i) cells *= static_cast<double>(bound + 1);
    if (cells > static_cast<double>(kGridCellCap))
        throw DeskScaleError("sweep grid exceeds the desk-scale cell cap");
    std::vector<std::vector<long>> grid;
    std::vector<long> t(static_cast<std::size_t>(L), 0);
    const std::size_t nf = fam.fs.size(), np = fam.phis.size(), ng = fam.gs.size();
    while (true) {
        const long* e = t.data();
        const bool side1_zero = all_zero(e, nf) && all_zero(e + nf, np);
        const bool side2_zero = all_zero(e + nf + np, ng) && all_zero(e + nf + np + ng, fam.psis.size());
        if (!side1_zero && !side2_zero) grid.push_back(t);
        int pos = L - 1;
        while (pos >= 0 && t[static_cast<std::size_t>(pos)] == bound) {
            t[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++t[static_cast<std::size_t>(pos)];
    }
    return grid;
}

namespace gcdlab_detail {

std::vector<UPoly> sweep_cells_serial(const SUnitFamily& fam,
                                      const std::vector<std::vector<long>>& grid) {
    std::vector<UPoly> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = sunit_gcd(fam, grid[i], false);
    return out;
}

std::vector<UPoly> sweep_cells_parallel(const SUnitFamily& fam,
                                        const std::vector<std::vector<long>>& grid, int workers) {
    std::vector<UPoly> out(grid.size());
    const int n = static_cast<int>(grid.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, workers))
#endif
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = sunit_gcd(fam, grid[static_cast<std::size_t>(i)], false);
    }
    return out;
}

} // namespace gcdlab_detail

SweepReport stable_divisor_sweep(const SUnitFamily& fam, long grid_bound, int torsion_window,
                                 int workers) {
    check_family_hypotheses(fam);
    SweepReport rep;
    rep.family = fam;
    rep.grid_bound = grid_bound;
    rep.torsion_window = torsion_window;

    const auto grid = sweep_grid(fam, grid_bound);
    const auto cells = workers > 1 ? gcdlab_detail::sweep_cells_parallel(fam, grid, workers)
                                   : gcdlab_detail::sweep_cells_serial(fam, grid);

    std::optional<BigInt> ar_bound;
    if (fam.is_ar_case()) ar_bound = univar_bound(fam.fs[0].deg(), fam.gs[0].deg());

    // serial fold in grid order keeps the report deterministic
    rep.stable_divisor = UPoly::constant(Rat(1));
    std::size_t last_change = 0;
    bool changed_once = false;
    rep.records.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SweepRecord rec;
        rec.exps = grid[i];
        rec.gcd = cells[i];
        rec.bound = ar_bound;
        if (rec.bound) rec.within_bound = BigInt(rec.gcd.deg()) <= *rec.bound;
        const UPoly next = lcm_monic(rep.stable_divisor, rec.gcd);
        if (next != rep.stable_divisor) {
            rep.stable_divisor = next;
            last_change = i;
            changed_once = true;
        }
        rep.records.push_back(std::move(rec));
    }
    if (changed_once) rep.stabilized_at = grid[last_change];
    rep.stabilized_early = !changed_once || (last_change < grid.size() / 2);

    if (fam.is_ar_case() && torsion_window >= grid_bound) {
        const long d = std::min(fam.fs[0].deg(), fam.gs[0].deg());
        const UPoly zeros = common_torsion_zeros(fam.fs[0], fam.gs[0], torsion_window);
        rep.h_candidate = zeros.pow(static_cast<unsigned long>(d));
        rep.divides_candidate = divides(rep.stable_divisor, *rep.h_candidate);
    }
    return rep;
}

int max_multiplicity(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("max_multiplicity: zero polynomial");
    if (p.is_constant()) return 0;
    int m = 0;
    for (const auto& [part, mult] : squarefree_decompose(p)) {
        (void)part;
        m = std::max(m, mult);
    }
    return m;
}

AbcMultResult abc_mult_check(const std::vector<UPoly>& fs, const std::vector<UPoly>& gs,
                             const std::vector<long>& ns, const std::vector<long>& ms) {
    if (fs.size() != ns.size() || gs.size() != ms.size())
        throw std::invalid_argument("abc_mult_check: exponent tuple length mismatch");
    for (const UPoly& p : fs) {
        if (p.is_zero()) throw HypothesisError("abc_mult_check: zero polynomial");
    }
    for (const UPoly& p : gs) {
        if (p.is_zero()) throw HypothesisError("abc_mult_check: zero polynomial");
    }
    if (!gcd_monic(product(fs), product(gs)).is_constant())
        throw HypothesisError("abc_mult_check: zero sets of the two sides intersect");
    AbcMultResult out;
    out.difference = power_product(fs, ns.data()) - power_product(gs, ms.data());
    if (out.difference.is_zero())
        throw HypothesisError("abc_mult_check: the difference is identically zero");
    out.mult = max_multiplicity(out.difference);
    out.bound = 0;
    for (const UPoly& p : fs) out.bound += p.is_constant() ? 0 : p.deg();
    for (const UPoly& p : gs) out.bound += p.is_constant() ? 0 : p.deg();
    out.ok = out.mult <= out.bound;
    return out;
}

bool mason_stothers_check(const UPoly& A, const UPoly& B, const UPoly& C) {
    if (A + B != C) throw HypothesisError("mason_stothers: A + B != C");
    if (A.is_constant() && B.is_constant() && C.is_constant())
        throw HypothesisError("mason_stothers: all three polynomials are constant");
    if (A.is_zero() || B.is_zero() || C.is_zero())
        throw HypothesisError("mason_stothers: not pairwise coprime (zero member)");
    if (!gcd_monic(A, B).is_constant() || !gcd_monic(A, C).is_constant() ||
        !gcd_monic(B, C).is_constant())
        throw HypothesisError("mason_stothers: not pairwise coprime");
    const int maxdeg = std::max({A.deg(), B.deg(), C.deg()});
    return maxdeg <= radical(A * B * C).deg() - 1;
}

DensityReport coprimality_density(const SUnitFamily& fam, long grid_bound, std::uint64_t seed,
                                  int workers) {
    check_family_hypotheses(fam);
    if (!gcd_monic(product(fam.fs) - UPoly::constant(Rat(1)),
                   product(fam.gs) - UPoly::constant(Rat(1)))
             .is_constant())
        throw HypothesisError("density: gcd(prod fs - 1, prod gs - 1) != 1");

    const auto grid = sweep_grid(fam, grid_bound);
    const auto cells = workers > 1 ? gcdlab_detail::sweep_cells_parallel(fam, grid, workers)
                                   : gcdlab_detail::sweep_cells_serial(fam, grid);

    DensityReport rep;
    rep.total_cells = static_cast<long>(grid.size());
    std::vector<UPoly> distinct;
    for (const UPoly& g : cells) {
        if (g.is_constant()) {
            ++rep.coprime_cells;
        } else if (std::find(distinct.begin(), distinct.end(), g) == distinct.end()) {
            distinct.push_back(g);
        }
    }
    rep.density = rep.total_cells ? make_rat(rep.coprime_cells, rep.total_cells) : Rat(0);

    std::vector<UPoly> pieces;
    if (!distinct.empty()) {
        for (UPoly& b : gcd_free_basis<UPoly>(distinct).basis) pieces.push_back(std::move(b));
    }
    std::sort(pieces.begin(), pieces.end(), [](const UPoly& a, const UPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.coeffs() < b.coeffs();
    });

    std::mt19937_64 rng(seed);
    for (const UPoly& piece : pieces) {
        MonoidRecord mr;
        mr.factor = piece;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!cells[i].is_constant() && divides(piece, cells[i])) mr.members.push_back(grid[i]);
        }
        auto is_member = [&](const std::vector<long>& t) {
            return std::binary_search(mr.members.begin(), mr.members.end(), t);
        };
        const std::size_t n = mr.members.size();
        auto check_pair = [&](std::size_t i, std::size_t j) {
            std::vector<long> sum(mr.members[i].size());
            bool in_grid = true;
            for (std::size_t k = 0; k < sum.size(); ++k) {
                sum[k] = mr.members[i][k] + mr.members[j][k];
                if (sum[k] > grid_bound) in_grid = false;
            }
            if (!in_grid) return;
            ++mr.closure_pairs_checked;
            if (!is_member(sum)) mr.closure_holds = false;
        };
        if (n <= 64) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) check_pair(i, j);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            for (int s = 0; s < 400; ++s) check_pair(pick(rng), pick(rng));
        }
        rep.monoids.push_back(std::move(mr));
    }
    return rep;
}

} // namespace arlab
