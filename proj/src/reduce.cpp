#include "arlab/reduce.hpp"

#include "arlab/bareiss.hpp"
#include "arlab/cycfield.hpp"
#include "arlab/errors.hpp"
#include "arlab/linalg.hpp"
#include "arlab/mulind.hpp"

#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace arlab {

namespace {

unsigned long checked_pow_ul(long base, long exp, unsigned long cap) {
    unsigned long r = 1;
    for (long i = 0; i < exp; ++i) {
        r *= static_cast<unsigned long>(base);
        if (r > cap) throw DeskScaleError("kronecker: substitution exponent exceeds the cap");
    }
    return r;
}

} // namespace

MPoly kronecker_forward(const MPoly& F, long d) {
    if (d < 2) throw std::invalid_argument("kronecker_forward: d must be >= 2");
    MPoly r = F;
    const int ell = F.arity();
    for (int i = 2; i <= ell; ++i) {
        const unsigned long e = checked_pow_ul(d, i - 1, 1'000'000);
        MPoly x1_pow = MPoly::term(ell, Rat(1), [&] {
            ExpVec v(static_cast<std::size_t>(ell), 0);
            v[0] = static_cast<std::uint32_t>(e);
            return v;
        }());
        r = r.substitute(i, MPoly::var(ell, i) + x1_pow);
    }
    return r;
}

MPoly kronecker_backward(const MPoly& F, long d) {
    if (d < 2) throw std::invalid_argument("kronecker_backward: d must be >= 2");
    MPoly r = F;
    const int ell = F.arity();
    for (int i = 2; i <= ell; ++i) {
        const unsigned long e = checked_pow_ul(d, i - 1, 1'000'000);
        MPoly x1_pow = MPoly::term(ell, Rat(1), [&] {
            ExpVec v(static_cast<std::size_t>(ell), 0);
            v[0] = static_cast<std::uint32_t>(e);
            return v;
        }());
        r = r.substitute(i, MPoly::var(ell, i) - x1_pow);
    }
    return r;
}

std::vector<Rat> rationals_by_height(std::size_t count) {
    std::vector<Rat> out;
    out.reserve(count);
    out.emplace_back(0);
    for (long h = 1; out.size() < count; ++h) {
        for (long q = 1; q <= h && out.size() < count; ++q) {
            if (q < h) {
                if (std::gcd(h, q) != 1) continue;
                out.push_back(make_rat(h, q));
                if (out.size() < count) out.push_back(make_rat(-h, q));
            } else {
                // n = h survives only for h = 1 (gcd filter), giving 1 and -1
                for (long n = 1; n <= h && out.size() < count; ++n) {
                    if (std::gcd(n, h) != 1) continue;
                    out.push_back(make_rat(n, h));
                    if (out.size() < count) out.push_back(make_rat(-n, h));
                }
            }
        }
    }
    out.resize(count);
    return out;
}

namespace {

// Diagonal enumeration of index tuples by total sum, then lex.
std::vector<std::vector<std::size_t>> index_tuples(std::size_t slots, std::size_t budget) {
    std::vector<std::vector<std::size_t>> out;
    if (slots == 0) {
        out.push_back({});
        return out;
    }
    for (std::size_t total = 0; out.size() < budget; ++total) {
        std::vector<std::size_t> t(slots, 0);
        // enumerate compositions of `total` into `slots` parts, lex order
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
            if (out.size() >= budget) return;
            if (pos + 1 == slots) {
                t[pos] = left;
                out.push_back(t);
                return;
            }
            for (std::size_t v = 0; v <= left; ++v) {
                t[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, total);
    }
    out.resize(budget);
    return out;
}

bool specialization_works(const std::vector<MPoly>& Fs, const std::vector<Rat>& alphas,
                          std::vector<UPoly>& specialized) {
    specialized.clear();
    for (const MPoly& F : Fs) {
        UPoly s = F.specialize(alphas);
        if (s.is_zero()) return false;
        specialized.push_back(std::move(s));
    }
    return !find_dependence(specialized, IndependenceMode::ModConstants).has_value();
}

} // namespace

SpecializationResult find_independent_specialization(const std::vector<MPoly>& Fs, long budget,
                                                     int workers) {
    if (Fs.empty()) throw std::invalid_argument("specialization: empty family");
    const int ell = Fs[0].arity();
    for (const MPoly& F : Fs) {
        if (F.arity() != ell) throw std::invalid_argument("specialization: arity mismatch");
    }
    require_independent(Fs, IndependenceMode::ModConstants, "specialization");

    const std::size_t slots = static_cast<std::size_t>(ell - 1);
    const auto tuples = index_tuples(slots, static_cast<std::size_t>(std::max<long>(budget, 1)));
    const auto seq = rationals_by_height(static_cast<std::size_t>(std::max<long>(budget, 1)));

    SpecializationResult res;
    const int block = std::max(1, workers);
    for (std::size_t base = 0; base < tuples.size(); base += static_cast<std::size_t>(block)) {
        const std::size_t hi = std::min(tuples.size(), base + static_cast<std::size_t>(block));
        std::vector<char> ok(hi - base, 0);
        std::vector<std::vector<UPoly>> spec(hi - base);
        std::vector<std::vector<Rat>> alph(hi - base);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(block) if (block > 1)
#endif
        for (long off = 0; off < static_cast<long>(hi - base); ++off) {
            const auto& idx = tuples[base + static_cast<std::size_t>(off)];
            std::vector<Rat> alphas;
            alphas.reserve(slots);
            for (std::size_t k : idx) alphas.push_back(seq[k]);
            std::vector<UPoly> s;
            if (specialization_works(Fs, alphas, s)) {
                ok[static_cast<std::size_t>(off)] = 1;
                spec[static_cast<std::size_t>(off)] = std::move(s);
                alph[static_cast<std::size_t>(off)] = std::move(alphas);
            }
        }
        // ordered commit: first success in enumeration order wins
        for (std::size_t off = 0; off < hi - base; ++off) {
            ++res.candidates_tried;
            if (ok[off]) {
                res.alphas = std::move(alph[off]);
                res.specialized = std::move(spec[off]);
                return res;
            }
        }
    }
    throw HypothesisError("specialization: budget exhausted after " +
                          std::to_string(res.candidates_tried) + " candidates");
}

MultivarChainReport multivar_ar_check(const UPoly& h1, const UPoly& h2, const MPoly& F,
                                      const MPoly& G, long n, long m, long budget, int workers) {
    if (h1.is_constant() || h2.is_constant())
        throw std::invalid_argument("multivar_ar_check: constant h1/h2 rejected");
    if (n < 1 || m < 1) throw std::invalid_argument("multivar_ar_check: exponents must be >= 1");
    if (F.arity() != G.arity()) throw std::invalid_argument("multivar_ar_check: arity mismatch");
    if (F.arity() > 3) throw DeskScaleError("multivar_ar_check: arity > 3 exceeds the desk-scale limit");
    if (F.is_constant() || G.is_constant())
        throw HypothesisError("multivar_ar_check: constant F/G rejected");

    MultivarChainReport rep;
    rep.n = n;
    rep.m = m;
    rep.ell = F.arity();

    const UPoly t_minus_1 = UPoly::variable() - UPoly::constant(Rat(1));
    const IndependenceMode mode = (h1 == t_minus_1 && h2 == t_minus_1)
                                      ? IndependenceMode::Plain
                                      : IndependenceMode::ModConstants;
    require_independent<MPoly>({F, G}, mode, "multivar_ar_check");

    long D = 0;
    for (int i = 1; i <= F.arity(); ++i)
        D = std::max({D, static_cast<long>(F.degree_in(i)), static_cast<long>(G.degree_in(i))});
    rep.cap_d = D;
    rep.sub_d = D + 1;

    rep.direct_gcd = mgcd(compose_upoly(h1, F.pow(static_cast<unsigned long>(n))),
                          compose_upoly(h2, G.pow(static_cast<unsigned long>(m))));
    rep.deg_direct = rep.direct_gcd.total_degree().value_or(0);

    if (rep.ell >= 2) {
        rep.tilde_f = kronecker_forward(F, rep.sub_d);
        rep.tilde_g = kronecker_forward(G, rep.sub_d);
    } else {
        rep.tilde_f = F;
        rep.tilde_g = G;
    }
    const MPoly tilde_gcd =
        mgcd(compose_upoly(h1, rep.tilde_f.pow(static_cast<unsigned long>(n))),
             compose_upoly(h2, rep.tilde_g.pow(static_cast<unsigned long>(m))));
    rep.deg_tilde = tilde_gcd.total_degree().value_or(0);

    SpecializationResult spec =
        find_independent_specialization({rep.tilde_f, rep.tilde_g}, budget, workers);
    rep.alphas = spec.alphas;
    rep.spec_f = spec.specialized[0];
    rep.spec_g = spec.specialized[1];
    rep.candidates_tried = spec.candidates_tried;

    const UPoly univ = gcd_monic(h1.compose(rep.spec_f.pow(static_cast<unsigned long>(n))),
                                 h2.compose(rep.spec_g.pow(static_cast<unsigned long>(m))));
    rep.deg_univariate = univ.is_zero() ? 0 : univ.deg();

    const BigInt base = BigInt(44) * bigint_pow(BigInt(D + 1), static_cast<unsigned long>(2 * rep.ell));
    const BigInt expo = bigint_pow(BigInt(D + 1), static_cast<unsigned long>(rep.ell));
    if (!expo.fits_ulong_p()) throw DeskScaleError("multivar_ar_check: bound exponent overflow");
    rep.bound = BigInt(h1.deg()) * BigInt(h2.deg()) * bigint_pow(base, expo.get_ui());

    rep.chain_ok = rep.deg_direct <= rep.deg_tilde && rep.deg_tilde <= rep.deg_univariate &&
                   BigInt(rep.deg_univariate) <= rep.bound;
    return rep;
}

MPoly annihilator(const std::vector<MPoly>& Fs, long deg_cap) {
    if (Fs.empty()) throw std::invalid_argument("annihilator: empty family");
    const int ell = Fs[0].arity();
    for (const MPoly& F : Fs) {
        if (F.arity() != ell) throw std::invalid_argument("annihilator: arity mismatch");
    }
    const int s = static_cast<int>(Fs.size());
    if (s != ell + 1)
        throw std::invalid_argument("annihilator: need exactly arity+1 polynomials");
    if (deg_cap < 1) throw std::invalid_argument("annihilator: deg_cap must be >= 1");

    // Z-monomials of total degree <= deg_cap, ascending graded-lex.
    std::vector<ExpVec> zmonos;
    {
        ExpVec t(static_cast<std::size_t>(s), 0);
        std::function<void(int, long)> rec = [&](int pos, long left) {
            if (pos + 1 == s) {
                for (long v = 0; v <= left; ++v) {
                    t[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(v);
                    zmonos.push_back(t);
                }
                return;
            }
            for (long v = 0; v <= left; ++v) {
                t[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(v);
                rec(pos + 1, left - v);
            }
        };
        rec(0, deg_cap);
        std::sort(zmonos.begin(), zmonos.end(), GradedLex{});
    }
    if (zmonos.size() > 20000) throw DeskScaleError("annihilator: monomial basis too large");

    // power cache per input
    std::vector<std::vector<MPoly>> powers(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) powers[static_cast<std::size_t>(i)] = {MPoly::constant(ell, Rat(1))};
    auto power_of = [&](int i, std::uint32_t e) -> const MPoly& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        while (cache.size() <= e) cache.push_back(cache.back() * Fs[static_cast<std::size_t>(i)]);
        return cache[e];
    };

    // expansion matrix: rows = X-monomials, cols = Z-monomials
    std::map<ExpVec, std::size_t, GradedLex> xrows;
    std::vector<std::map<std::size_t, Rat>> cols(zmonos.size());
    for (std::size_t c = 0; c < zmonos.size(); ++c) {
        MPoly prod = MPoly::constant(ell, Rat(1));
        for (int i = 0; i < s; ++i) {
            const std::uint32_t e = zmonos[c][static_cast<std::size_t>(i)];
            if (e) prod *= power_of(i, e);
        }
        for (const auto& [xe, coeff] : prod.terms()) {
            auto [it, inserted] = xrows.emplace(xe, xrows.size());
            cols[c][it->second] = coeff;
        }
    }
    RatMatrix m(xrows.size(), std::vector<Rat>(zmonos.size(), Rat(0)));
    for (std::size_t c = 0; c < zmonos.size(); ++c)
        for (const auto& [r, v] : cols[c]) m[r][c] = v;

    auto kernel = kernel_basis(m, static_cast<int>(zmonos.size()));
    if (kernel.empty())
        throw HypothesisError("annihilator: no relation within deg_cap " + std::to_string(deg_cap));
    std::vector<BigInt> coeffs = to_coprime_integers(kernel.front());

    MPoly r(s);
    for (std::size_t c = 0; c < zmonos.size(); ++c) {
        if (coeffs[c] != 0) r.add_term(zmonos[c], Rat(coeffs[c]));
    }
    if (r.lead_coeff() < 0) r = -r;
    return r;
}

// --- bounds ---

BigInt gamma_ld(long D, long ell) {
    if (D < 1 || ell < 1) throw std::invalid_argument("gamma: D and ell must be >= 1");
    const BigInt dl = bigint_pow(BigInt(D), static_cast<unsigned long>(ell));
    const BigInt top = dl + ell + 1;
    if (!top.fits_ulong_p()) throw DeskScaleError("gamma: argument too large");
    return binomial(top.get_ui(), static_cast<unsigned long>(ell + 1));
}

BigInt n_bound_upper(unsigned long g) {
    mpfr_t x, l;
    mpfr_init2(x, 256);
    mpfr_init2(l, 256);
    mpfr_set_str(x, "0.792", 10, MPFR_RNDU);
    mpfr_mul_ui(x, x, g, MPFR_RNDU);
    mpfr_set_ui(l, g + 1, MPFR_RNDN); // exact
    mpfr_log(l, l, MPFR_RNDD);        // denominator rounded down
    mpfr_div(x, x, l, MPFR_RNDU);
    mpfr_pow_ui(x, x, g, MPFR_RNDU);
    BigInt out;
    mpfr_get_z(out.get_mpz_t(), x, MPFR_RNDU); // ceil
    mpfr_clear(x);
    mpfr_clear(l);
    return out;
}

BoundReport bound_genar1(long dh1, long dh2, long df, long dg) {
    if (dh1 < 1 || dh2 < 1 || df < 1 || dg < 1)
        throw std::invalid_argument("bound_genar1: positive degrees required");
    BoundReport rep;
    rep.theorem = "genar1";
    rep.inputs = {{"dh1", std::to_string(dh1)},
                  {"dh2", std::to_string(dh2)},
                  {"df", std::to_string(df)},
                  {"dg", std::to_string(dg)}};
    const BigInt base = BigInt(11) * (df + dg) * (df + dg);
    rep.intermediates.emplace_back("base_11(df+dg)^2", base.get_str());
    rep.value = BigInt(dh1) * BigInt(dh2) *
                bigint_pow(base, static_cast<unsigned long>(std::min(df, dg)));
    return rep;
}

BoundReport bound_multivar(long dh1, long dh2, long D, long ell) {
    if (dh1 < 1 || dh2 < 1 || D < 1 || ell < 1)
        throw std::invalid_argument("bound_multivar: positive parameters required");
    BoundReport rep;
    rep.theorem = "multivar";
    rep.inputs = {{"dh1", std::to_string(dh1)},
                  {"dh2", std::to_string(dh2)},
                  {"D", std::to_string(D)},
                  {"ell", std::to_string(ell)}};
    const BigInt base = BigInt(44) * bigint_pow(BigInt(D + 1), static_cast<unsigned long>(2 * ell));
    const BigInt expo = bigint_pow(BigInt(D + 1), static_cast<unsigned long>(ell));
    rep.intermediates.emplace_back("base_44(D+1)^2l", base.get_str());
    rep.intermediates.emplace_back("exponent_(D+1)^l", expo.get_str());
    if (!expo.fits_ulong_p()) throw DeskScaleError("bound_multivar: exponent too large");
    rep.value = BigInt(dh1) * BigInt(dh2) * bigint_pow(base, expo.get_ui());
    return rep;
}

BoundReport bound_gamma(long D, long ell) {
    BoundReport rep;
    rep.theorem = "gamma";
    rep.inputs = {{"D", std::to_string(D)}, {"ell", std::to_string(ell)}};
    rep.value = gamma_ld(D, ell);
    return rep;
}

BoundReport bound_coset(long D, long ell) {
    BoundReport rep;
    rep.theorem = "coset";
    rep.inputs = {{"D", std::to_string(D)}, {"ell", std::to_string(ell)}};
    const BigInt gamma = gamma_ld(D, ell);
    rep.intermediates.emplace_back("gamma", gamma.get_str());
    if (gamma > 1'000'000) {
        rep.warnings.push_back("gamma exceeds 10^6; primorial and N-bound omitted");
        rep.value = 0;
        rep.exact = false;
        return rep;
    }
    if (gamma > 10'000)
        rep.warnings.push_back("gamma is large; the N-bound has " + gamma.get_str() +
                               " exponentiations worth of digits");
    const unsigned long g = gamma.get_ui();
    const BigInt prim = primorial(g);
    rep.intermediates.emplace_back("primorial", prim.get_str());
    const BigInt degree_bound = BigInt(ell + 1) * bigint_pow(BigInt(D), static_cast<unsigned long>(ell)) * prim;
    rep.intermediates.emplace_back("degree_bound", degree_bound.get_str());
    // prime number theorem comparison: primorial(k) = exp(k + o(k))
    {
        mpfr_t e;
        mpfr_init2(e, 128);
        mpfr_set_ui(e, g, MPFR_RNDN);
        mpfr_exp(e, e, MPFR_RNDN);
        BigInt approx;
        mpfr_get_z(approx.get_mpz_t(), e, MPFR_RNDN);
        mpfr_clear(e);
        rep.intermediates.emplace_back("pnt_exp_gamma", approx.get_str());
    }
    rep.value = n_bound_upper(g);
    rep.intermediates.emplace_back("n_bound_upper", rep.value.get_str());
    rep.exact = false; // the N-bound is a directed upper rounding
    return rep;
}

// --- containment verifier ---

std::vector<std::vector<long>> relation_candidates(int slots, long cap) {
    // rank r in [0, 2cap]: value 0,1,...,cap,-1,...,-cap
    auto value_of = [cap](long r) { return r <= cap ? r : -(r - cap); };
    std::vector<std::vector<long>> out;
    for (long shell = 1; shell <= 2 * cap; ++shell) {
        std::vector<long> ranks(static_cast<std::size_t>(slots), 0);
        std::function<void(int, bool)> rec = [&](int pos, bool has_shell) {
            if (pos == slots) {
                if (!has_shell) return;
                std::vector<long> b(static_cast<std::size_t>(slots));
                for (int i = 0; i < slots; ++i) b[static_cast<std::size_t>(i)] = value_of(ranks[static_cast<std::size_t>(i)]);
                out.push_back(std::move(b));
                return;
            }
            for (long r = 0; r <= shell; ++r) {
                ranks[static_cast<std::size_t>(pos)] = r;
                rec(pos + 1, has_shell || r == shell);
            }
        };
        rec(0, false);
    }
    return out;
}

namespace {

// prod F^{b+} - prod F^{b-}: the relation polynomial cleared of negative powers
UPoly cleared_relation_upoly(const std::vector<UPoly>& Fs, const std::vector<long>& b) {
    UPoly pos = UPoly::constant(Rat(1));
    UPoly neg = UPoly::constant(Rat(1));
    for (std::size_t i = 0; i < Fs.size(); ++i) {
        if (b[i] > 0) pos *= Fs[i].pow(static_cast<unsigned long>(b[i]));
        if (b[i] < 0) neg *= Fs[i].pow(static_cast<unsigned long>(-b[i]));
    }
    return pos - neg;
}

} // namespace

CosetReportU coset_check_univariate(const std::vector<UPoly>& Fs, long n_cap, long b_cap) {
    if (Fs.size() != 2) throw std::invalid_argument("coset_check (l=1): exactly two polynomials");
    for (const UPoly& f : Fs) {
        if (f.is_constant()) throw HypothesisError("coset_check: constant input");
    }
    if (n_cap < 1 || b_cap < 1) throw std::invalid_argument("coset_check: positive caps required");
    require_independent(Fs, IndependenceMode::Plain, "coset_check");

    CosetReportU rep;
    rep.n_cap = n_cap;
    rep.b_cap = b_cap;

    const UPoly one = UPoly::constant(Rat(1));
    std::vector<UPoly> zero_sets;
    for (long n1 = 1; n1 <= n_cap; ++n1) {
        for (long n2 = 1; n2 <= n_cap; ++n2) {
            UPoly g = gcd_monic(Fs[0].pow(static_cast<unsigned long>(n1)) - one,
                                Fs[1].pow(static_cast<unsigned long>(n2)) - one);
            if (g.is_constant()) continue;
            rep.tuple_zeros.emplace_back(std::vector<long>{n1, n2}, g);
            zero_sets.push_back(std::move(g));
        }
    }

    std::vector<UPoly> pieces;
    if (!zero_sets.empty()) pieces = gcd_free_basis<UPoly>(zero_sets).basis;
    std::sort(pieces.begin(), pieces.end(), [](const UPoly& a, const UPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.coeffs() < b.coeffs();
    });

    const auto relations = relation_candidates(2, b_cap);
    for (const UPoly& piece : pieces) rep.pieces.push_back(CosetPiece{piece, {}});
    for (const auto& b : relations) {
        const UPoly rel = cleared_relation_upoly(Fs, b);
        if (rel.is_zero()) continue;
        bool covers_all = !rep.pieces.empty();
        for (CosetPiece& cp : rep.pieces) {
            if (divides(cp.piece, rel)) {
                if (cp.covering.size() < 16) cp.covering.push_back(b);
            } else {
                covers_all = false;
            }
        }
        if (covers_all && !rep.selected) rep.selected = b;
    }
    rep.covered = rep.pieces.empty() || rep.selected.has_value();
    return rep;
}

namespace {

using KPoly = DensePoly<CycElem>; // univariate over a cyclotomic field

struct SlotValue {
    int order;
    int index;
};

// F - v as a polynomial in X_outer with KPoly (in X_inner) coefficients.
std::vector<KPoly> bivariate_over_k(const MPoly& F, const CycElem& v,
                                    const std::shared_ptr<const CycField>& K, int outer) {
    const int inner = outer == 2 ? 1 : 2;
    std::vector<std::vector<CycElem>> rows(static_cast<std::size_t>(F.degree_in(outer)) + 1);
    for (auto& r : rows) r.assign(static_cast<std::size_t>(F.degree_in(inner)) + 1, CycElem(0));
    for (const auto& [e, c] : F.terms()) {
        rows[e[outer - 1]][e[inner - 1]] =
            rows[e[outer - 1]][e[inner - 1]] + CycElem::from_rat(K, c);
    }
    rows[0][0] = rows[0][0] - v;
    std::vector<KPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(KPoly::from_coeffs(std::move(r)));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

KPoly resultant_k(const std::vector<KPoly>& a, const std::vector<KPoly>& b) {
    const int da = static_cast<int>(a.size()) - 1;
    const int db = static_cast<int>(b.size()) - 1;
    const int n = da + db;
    std::vector<std::vector<KPoly>> m(static_cast<std::size_t>(n),
                                      std::vector<KPoly>(static_cast<std::size_t>(n), KPoly::zero()));
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= da; ++j) m[r][r + j] = a[static_cast<std::size_t>(da - j)];
    for (int r = 0; r < da; ++r)
        for (int j = 0; j <= db; ++j) m[db + r][r + j] = b[static_cast<std::size_t>(db - j)];
    auto exact_div = [](const KPoly& num, const KPoly& den) {
        auto [q, rem] = divrem(num, den);
        if (!rem.is_zero()) throw std::logic_error("resultant_k: non-exact division");
        return q;
    };
    return det_bareiss(std::move(m), KPoly::zero(), KPoly::constant(CycElem(1)), exact_div);
}

// Projection of the common zeros of {F_j - v_j} onto X_outer: gcd over K of
// the polynomials that only involve X_outer plus all pairwise resultants.
// Returns nullopt when a shared positive-dimensional component shows up
// (identically zero resultant).
std::optional<KPoly> fiber_projection(const std::vector<MPoly>& Fs,
                                      const std::vector<CycElem>& vals,
                                      const std::shared_ptr<const CycField>& K, int outer) {
    const int inner = outer == 2 ? 1 : 2;
    std::vector<std::vector<KPoly>> in_outer; // polynomials in X_inner, coeffs in X_outer
    std::vector<KPoly> direct;
    for (std::size_t j = 0; j < Fs.size(); ++j) {
        // view F_j - v_j as a polynomial in X_inner with coefficients in X_outer
        std::vector<KPoly> cs = bivariate_over_k(Fs[j], vals[j], K, inner);
        if (cs.size() <= 1) {
            direct.push_back(cs.empty() ? KPoly::zero() : cs[0]);
        } else {
            in_outer.push_back(std::move(cs));
        }
    }
    std::vector<KPoly> constraints = direct;
    for (std::size_t i = 0; i < in_outer.size(); ++i) {
        for (std::size_t j = i + 1; j < in_outer.size(); ++j) {
            KPoly r = resultant_k(in_outer[i], in_outer[j]);
            if (r.is_zero()) return std::nullopt; // shared component
            constraints.push_back(std::move(r));
        }
    }
    if (constraints.empty()) return KPoly::zero(); // nothing restricts this projection
    KPoly g = constraints[0];
    for (std::size_t i = 1; i < constraints.size(); ++i) g = gcd_field(g, constraints[i]);
    return g;
}

} // namespace

CosetReportM coset_check_multivariate(const std::vector<MPoly>& Fs, long n_cap, long b_cap) {
    if (Fs.size() != 3 || Fs[0].arity() != 2)
        throw std::invalid_argument("coset_check (l=2): exactly three arity-2 polynomials");
    for (const MPoly& F : Fs) {
        if (F.arity() != 2) throw std::invalid_argument("coset_check: arity mismatch");
        if (F.is_constant()) throw HypothesisError("coset_check: constant input");
    }
    if (n_cap < 1 || b_cap < 1) throw std::invalid_argument("coset_check: positive caps required");
    if (n_cap > 6) throw DeskScaleError("coset_check (l=2): n_cap > 6 exceeds the desk-scale limit");
    require_independent(Fs, IndependenceMode::Plain, "coset_check");

    CosetReportM rep;
    rep.n_cap = n_cap;
    rep.b_cap = b_cap;
    rep.ell = 2;

    // all root-of-unity values of order <= n_cap, as (order, index) pairs
    std::vector<SlotValue> values;
    for (int o = 1; o <= n_cap; ++o) {
        for (int i = 0; i < o; ++i) {
            if (o == 1 ? i == 0 : std::gcd(i, o) == 1) values.push_back(SlotValue{o, i});
        }
    }

    for (const SlotValue& v1 : values) {
        for (const SlotValue& v2 : values) {
            for (const SlotValue& v3 : values) {
                ++rep.tuples_scanned;
                const long N = std::lcm(std::lcm<long>(v1.order, v2.order), static_cast<long>(v3.order));
                auto K = cyc_field(static_cast<int>(N));
                std::vector<CycElem> vals = {
                    CycElem::zeta(K, v1.index * (N / v1.order)),
                    CycElem::zeta(K, v2.index * (N / v2.order)),
                    CycElem::zeta(K, v3.index * (N / v3.order)),
                };
                auto p1 = fiber_projection(Fs, vals, K, 1);
                auto p2 = fiber_projection(Fs, vals, K, 2);
                std::string status = "candidate";
                if (!p1 || !p2) {
                    status = "degenerate";
                    rep.warnings.push_back("positive-dimensional component at a value tuple; kept as a constraint");
                } else if ((!p1->is_zero() && p1->is_constant()) ||
                           (!p2->is_zero() && p2->is_constant())) {
                    ++rep.empty_fibers;
                    continue; // certified empty
                }
                rep.candidates.push_back(ValueTupleRec{
                    {v1.order, v2.order, v3.order}, {v1.index, v2.index, v3.index}, status});
            }
        }
    }

    // relation b covers a value tuple iff sum b_j * index_j * (N/order_j) = 0 mod N
    auto covers = [&](const std::vector<long>& b, const ValueTupleRec& t) {
        long N = 1;
        for (int o : t.orders) N = std::lcm(N, static_cast<long>(o));
        long acc = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            const long phase = (t.indices[j] * (N / t.orders[j])) % N;
            acc = ((acc + b[j] * phase) % N + N) % N;
        }
        return acc == 0;
    };
    for (const auto& b : relation_candidates(3, b_cap)) {
        bool all = true;
        for (const auto& t : rep.candidates) {
            if (!covers(b, t)) {
                all = false;
                break;
            }
        }
        if (all) {
            rep.selected = b;
            break;
        }
    }
    rep.covered = rep.candidates.empty() || rep.selected.has_value();
    return rep;
}

} // namespace arlab
