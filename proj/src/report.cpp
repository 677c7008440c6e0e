#include "arlab/report.hpp"

#include "arlab/errors.hpp"
#include "arlab/expr.hpp"
#include "arlab/gcdlab.hpp"
#include "arlab/mulind.hpp"
#include "arlab/reduce.hpp"
#include "arlab/torsion.hpp"

#include <algorithm>
#include <sstream>

namespace arlab {

namespace {

Json report_skeleton(const std::string& command) {
    Json r;
    r["schema"] = kSchemaVersion;
    r["command"] = command;
    r["inputs"] = Json::object();
    r["records"] = Json::array();
    r["summary"] = Json::object();
    r["summary"]["violations"] = Json::array();
    r["version"] = kToolVersion;
    return r;
}

UPoly parse_upoly_arg(const std::string& s) { return to_upoly(parse(s)); }

std::vector<UPoly> parse_upoly_list(const std::vector<std::string>& xs) {
    std::vector<UPoly> out;
    out.reserve(xs.size());
    for (const auto& s : xs) out.push_back(parse_upoly_arg(s));
    return out;
}

// Accepts either T-notation (arity 1) or X-notation; mixing is rejected.
std::pair<std::vector<MPoly>, int> parse_family_auto(const std::vector<std::string>& xs) {
    std::vector<ExprAst> asts;
    asts.reserve(xs.size());
    bool any_x = false, any_t = false;
    int arity = 1;
    for (const auto& s : xs) {
        asts.push_back(parse(s));
        const int mi = max_var_index(asts.back());
        arity = std::max(arity, mi);
        any_x = any_x || mi > 0;
        any_t = any_t || uses_t(asts.back());
    }
    if (any_x && any_t)
        throw std::invalid_argument("family mixes T-notation and X-notation");
    std::vector<MPoly> out;
    out.reserve(asts.size());
    for (const ExprAst& a : asts) {
        if (any_x) {
            out.push_back(to_mpoly(a, arity));
        } else {
            out.push_back(upoly_to_mpoly(to_upoly(a), 1, 1));
        }
    }
    return {out, any_x ? arity : 1};
}

Json canon_list(const std::vector<UPoly>& ps) {
    Json a = Json::array();
    for (const UPoly& p : ps) a.push_back(print_canonical(p));
    return a;
}

Json long_list(const std::vector<long>& xs) {
    Json a = Json::array();
    for (long x : xs) a.push_back(x);
    return a;
}

void add_violation(Json& report, const std::string& msg) {
    report["summary"]["violations"].push_back(msg);
}

SUnitFamily build_family(const std::vector<std::string>& fs, const std::vector<std::string>& phis,
                         const std::vector<std::string>& gs,
                         const std::vector<std::string>& psis) {
    SUnitFamily fam;
    fam.fs = parse_upoly_list(fs);
    fam.phis = parse_upoly_list(phis);
    fam.gs = parse_upoly_list(gs);
    fam.psis = parse_upoly_list(psis);
    return fam;
}

void echo_family(Json& report, const SUnitFamily& fam) {
    report["inputs"]["fs"] = canon_list(fam.fs);
    report["inputs"]["phis"] = canon_list(fam.phis);
    report["inputs"]["gs"] = canon_list(fam.gs);
    report["inputs"]["psis"] = canon_list(fam.psis);
}

} // namespace

Json report_gcd_sweep(const std::vector<std::string>& fs, const std::vector<std::string>& phis,
                      const std::vector<std::string>& gs, const std::vector<std::string>& psis,
                      long max_exp, int torsion_window, const RunConfig& cfg) {
    SUnitFamily fam = build_family(fs, phis, gs, psis);
    if (torsion_window <= 0) torsion_window = static_cast<int>(max_exp);
    Json r = report_skeleton("gcd-sweep");
    echo_family(r, fam);
    r["inputs"]["max"] = max_exp;
    r["inputs"]["torsion_window"] = torsion_window;
    r["inputs"]["seed"] = cfg.seed;

    SweepReport rep = stable_divisor_sweep(fam, max_exp, torsion_window, cfg.workers);
    for (SweepRecord& rec : rep.records) {
        Json jr;
        jr["exps"] = long_list(rec.exps);
        jr["gcd"] = print_canonical(rec.gcd);
        jr["degree"] = rec.gcd.deg();
        if (rec.bound) {
            BigInt b = cfg.corrupt_bounds ? BigInt(0) : *rec.bound;
            jr["bound"] = b.get_str();
            jr["within_bound"] = BigInt(rec.gcd.deg()) <= b;
            if (!(BigInt(rec.gcd.deg()) <= b))
                add_violation(r, "gcd degree exceeds the theorem bound at tuple " +
                                     Json(long_list(rec.exps)).dump());
        }
        r["records"].push_back(std::move(jr));
    }
    auto& s = r["summary"];
    s["stable_divisor"] = print_canonical(rep.stable_divisor);
    s["stabilized_at"] = rep.stabilized_at ? Json(long_list(*rep.stabilized_at)) : Json(nullptr);
    s["stabilized_early"] = rep.stabilized_early;
    s["stabilization_note"] =
        "stabilization is empirical evidence on this finite grid, not a proof";
    if (rep.h_candidate) {
        s["h_candidate"] = print_canonical(*rep.h_candidate);
        s["divides_candidate"] = *rep.divides_candidate;
        if (!*rep.divides_candidate)
            add_violation(r, "stable divisor does not divide the torsion-window candidate");
    }
    if (fam.is_ar_case()) {
        BigInt b = cfg.corrupt_bounds ? BigInt(0)
                                      : univar_bound(fam.fs[0].deg(), fam.gs[0].deg());
        s["bound"] = b.get_str();
    }
    return r;
}

Json report_genar1(const std::string& h1s, const std::string& h2s, const std::string& fsx,
                   const std::string& gsx, long n, long m, const RunConfig& cfg) {
    const UPoly h1 = parse_upoly_arg(h1s), h2 = parse_upoly_arg(h2s);
    const UPoly f = parse_upoly_arg(fsx), g = parse_upoly_arg(gsx);
    Json r = report_skeleton("genar1");
    r["inputs"]["h1"] = print_canonical(h1);
    r["inputs"]["h2"] = print_canonical(h2);
    r["inputs"]["f"] = print_canonical(f);
    r["inputs"]["g"] = print_canonical(g);
    r["inputs"]["n"] = n;
    r["inputs"]["m"] = m;

    GenAr1Result res = genar1_gcd(h1, h2, f, g, n, m);
    const BigInt bound = cfg.corrupt_bounds ? BigInt(0) : res.bound;
    auto& s = r["summary"];
    s["gcd"] = print_canonical(res.gcd);
    s["degree"] = res.gcd.deg();
    s["bound"] = bound.get_str();
    s["within_bound"] = BigInt(res.gcd.deg()) <= bound;
    if (!(BigInt(res.gcd.deg()) <= bound)) add_violation(r, "gcd degree exceeds the theorem bound");
    return r;
}

Json report_sunit_gcd(const std::vector<std::string>& fs, const std::vector<std::string>& phis,
                      const std::vector<std::string>& gs, const std::vector<std::string>& psis,
                      const std::vector<long>& exps, const RunConfig& cfg) {
    (void)cfg;
    SUnitFamily fam = build_family(fs, phis, gs, psis);
    Json r = report_skeleton("sunit-gcd");
    echo_family(r, fam);
    r["inputs"]["exps"] = long_list(exps);
    UPoly g = sunit_gcd(fam, exps);
    r["summary"]["gcd"] = print_canonical(g);
    r["summary"]["degree"] = g.deg();
    return r;
}

Json report_independence(const std::vector<std::string>& polys, const std::string& mode,
                         const RunConfig& cfg) {
    (void)cfg;
    if (mode != "plain" && mode != "mod-constants")
        throw std::invalid_argument("independence: mode must be plain or mod-constants");
    const IndependenceMode im =
        mode == "plain" ? IndependenceMode::Plain : IndependenceMode::ModConstants;

    Json r = report_skeleton("independence");
    r["inputs"]["mode"] = mode;
    auto& s = r["summary"];

    // univariate and multivariate families both come through here
    auto [family, arity] = parse_family_auto(polys);
    Json canon = Json::array();
    for (const MPoly& p : family)
        canon.push_back(arity == 1 ? print_canonical(mpoly_to_upoly(p, 1)) : print_canonical(p));
    r["inputs"]["polys"] = canon;

    auto cert = find_dependence(family, im);
    if (!cert) {
        s["verdict"] = "independent";
        s["certificate"] = nullptr;
    } else {
        s["verdict"] = "dependent";
        Json jc;
        Json rel = Json::array();
        for (const BigInt& e : cert->relation) rel.push_back(e.get_str());
        jc["relation"] = rel;
        jc["constant"] = rat_to_string(cert->constant);
        s["certificate"] = jc;
        const bool valid = certificate_valid(family, *cert);
        s["certificate_valid"] = valid;
        if (!valid) add_violation(r, "certificate failed re-multiplication");
    }
    return r;
}

Json report_torsion_count(const std::string& curve, int max_order, int prime_count,
                          long prime_floor, const RunConfig& cfg) {
    auto [fam, arity] = parse_family_auto({curve});
    if (arity > 2) throw std::invalid_argument("torsion-count: arity-2 curve required");
    MPoly H = arity == 2 ? fam[0] : upoly_to_mpoly(mpoly_to_upoly(fam[0], 1), 2, 1);

    TorsionScanConfig scfg;
    scfg.max_order = max_order;
    scfg.prime_count = prime_count;
    scfg.prime_floor = prime_floor;
    scfg.certify = cfg.certify;
    scfg.workers = cfg.workers;

    Json r = report_skeleton("torsion-count");
    r["inputs"]["curve"] = print_canonical(H);
    r["inputs"]["max_order"] = max_order;
    r["inputs"]["prime_count"] = prime_count;
    r["inputs"]["prime_floor"] = prime_floor;
    r["inputs"]["certify"] = cfg.certify;

    TorsionScan scan = count_torsion_points(H, scfg);
    auto& s = r["summary"];
    s["scan_bound"] = scan.scan_bound;
    s["order_note"] = "counts cover torsion points of order <= scan_bound only";
    if (scan.exceptional) {
        s["exceptional_factor"] = print_canonical(scan.exceptional->factor);
        s["exceptional_note"] = scan.exceptional->description;
        return r;
    }
    for (const TorsionPoint& pt : scan.points) {
        Json jp;
        jp["order_x"] = pt.order_x;
        jp["order_y"] = pt.order_y;
        jp["index_x"] = pt.index_x;
        jp["index_y"] = pt.index_y;
        r["records"].push_back(std::move(jp));
    }
    const int deg = H.total_degree().value_or(0);
    BigInt bound = BigInt(11) * deg * deg;
    if (cfg.corrupt_bounds) bound = 0;
    s["count"] = scan.points.size();
    s["bound_11_deg2"] = bound.get_str();
    s["within_bound"] = BigInt(static_cast<long>(scan.points.size())) <= bound;
    if (!(BigInt(static_cast<long>(scan.points.size())) <= bound))
        add_violation(r, "torsion point count exceeds 11*deg^2");
    Json primes = Json::array();
    for (long p : scan.primes_used) primes.push_back(p);
    s["primes_used"] = primes;
    s["certified"] = scan.certified;
    Json warn = Json::array();
    for (const auto& w : scan.warnings) warn.push_back(w);
    s["warnings"] = warn;
    return r;
}

Json report_torsion_zeros(const std::string& fs, const std::string& gs, int window,
                          const RunConfig& cfg) {
    (void)cfg;
    const UPoly f = parse_upoly_arg(fs), g = parse_upoly_arg(gs);
    Json r = report_skeleton("torsion-zeros");
    r["inputs"]["f"] = print_canonical(f);
    r["inputs"]["g"] = print_canonical(g);
    r["inputs"]["window"] = window;
    UPoly z = common_torsion_zeros(f, g, window);
    r["summary"]["zeros"] = print_canonical(z);
    r["summary"]["degree"] = z.is_zero() ? 0 : z.deg();
    return r;
}

Json report_abc_check(const std::vector<std::string>& fs, const std::vector<std::string>& gs,
                      const std::vector<long>& ns, const std::vector<long>& ms,
                      const RunConfig& cfg) {
    auto fls = parse_upoly_list(fs);
    auto gls = parse_upoly_list(gs);
    Json r = report_skeleton("abc-check");
    r["inputs"]["fs"] = canon_list(fls);
    r["inputs"]["gs"] = canon_list(gls);
    r["inputs"]["ns"] = long_list(ns);
    r["inputs"]["ms"] = long_list(ms);
    AbcMultResult res = abc_mult_check(fls, gls, ns, ms);
    const long bound = cfg.corrupt_bounds ? -1 : res.bound;
    auto& s = r["summary"];
    s["difference"] = print_canonical(res.difference);
    s["mult"] = res.mult;
    s["bound"] = bound;
    s["ok"] = res.mult <= bound;
    if (res.mult > bound) add_violation(r, "multiplicity exceeds the ABC bound");
    return r;
}

Json report_mason(const std::string& a, const std::string& b, const std::string& c,
                  const RunConfig& cfg) {
    (void)cfg;
    const UPoly A = parse_upoly_arg(a), B = parse_upoly_arg(b), C = parse_upoly_arg(c);
    Json r = report_skeleton("mason");
    r["inputs"]["A"] = print_canonical(A);
    r["inputs"]["B"] = print_canonical(B);
    r["inputs"]["C"] = print_canonical(C);
    const bool holds = mason_stothers_check(A, B, C);
    r["summary"]["holds"] = holds;
    r["summary"]["max_degree"] = std::max({A.deg(), B.deg(), C.deg()});
    r["summary"]["radical_degree"] = radical(A * B * C).deg();
    if (!holds) add_violation(r, "Mason-Stothers inequality failed");
    return r;
}

Json report_kronecker(const std::string& poly, long d, bool backward, const RunConfig& cfg) {
    (void)cfg;
    auto [fam, arity] = parse_family_auto({poly});
    const MPoly F = fam[0];
    Json r = report_skeleton("kronecker");
    r["inputs"]["poly"] = print_canonical(F);
    r["inputs"]["d"] = d;
    r["inputs"]["direction"] = backward ? "backward" : "forward";
    const MPoly out = backward ? kronecker_backward(F, d) : kronecker_forward(F, d);
    r["summary"]["result"] = print_canonical(out);
    r["summary"]["total_degree"] = out.total_degree().value_or(0);
    r["summary"]["arity"] = arity;
    return r;
}

Json report_specialize(const std::vector<std::string>& polys, long budget, const RunConfig& cfg) {
    auto [fam, arity] = parse_family_auto(polys);
    Json r = report_skeleton("specialize");
    Json canon = Json::array();
    for (const MPoly& p : fam) canon.push_back(print_canonical(p));
    r["inputs"]["polys"] = canon;
    r["inputs"]["budget"] = budget;
    r["inputs"]["arity"] = arity;
    SpecializationResult res = find_independent_specialization(fam, budget, cfg.workers);
    auto& s = r["summary"];
    Json alphas = Json::array();
    for (const Rat& a : res.alphas) alphas.push_back(rat_to_string(a));
    s["alphas"] = alphas;
    s["specialized"] = canon_list(res.specialized);
    s["candidates_tried"] = res.candidates_tried;
    return r;
}

Json report_multivar_check(const std::string& h1s, const std::string& h2s, const std::string& Fs,
                           const std::string& Gs, long n, long m, long budget,
                           const RunConfig& cfg) {
    const UPoly h1 = parse_upoly_arg(h1s), h2 = parse_upoly_arg(h2s);
    auto [fam, arity] = parse_family_auto({Fs, Gs});
    Json r = report_skeleton("multivar-check");
    r["inputs"]["h1"] = print_canonical(h1);
    r["inputs"]["h2"] = print_canonical(h2);
    r["inputs"]["F"] = print_canonical(fam[0]);
    r["inputs"]["G"] = print_canonical(fam[1]);
    r["inputs"]["n"] = n;
    r["inputs"]["m"] = m;
    r["inputs"]["budget"] = budget;

    MultivarChainReport rep = multivar_ar_check(h1, h2, fam[0], fam[1], n, m, budget, cfg.workers);
    auto& s = r["summary"];
    s["D"] = rep.cap_d;
    s["d"] = rep.sub_d;
    s["ell"] = rep.ell;
    s["direct_gcd"] = print_canonical(rep.direct_gcd);
    s["deg_direct"] = rep.deg_direct;
    s["deg_tilde"] = rep.deg_tilde;
    s["deg_univariate"] = rep.deg_univariate;
    s["tilde_F"] = print_canonical(rep.tilde_f);
    s["tilde_G"] = print_canonical(rep.tilde_g);
    Json alphas = Json::array();
    for (const Rat& a : rep.alphas) alphas.push_back(rat_to_string(a));
    s["alphas"] = alphas;
    s["spec_f"] = print_canonical(rep.spec_f);
    s["spec_g"] = print_canonical(rep.spec_g);
    s["candidates_tried"] = rep.candidates_tried;
    const BigInt bound = cfg.corrupt_bounds ? BigInt(0) : rep.bound;
    s["bound"] = bound.get_str();
    const bool chain_ok = rep.deg_direct <= rep.deg_tilde && rep.deg_tilde <= rep.deg_univariate &&
                          BigInt(rep.deg_univariate) <= bound;
    s["chain_ok"] = chain_ok;
    if (!chain_ok) add_violation(r, "degree chain inequality failed");
    return r;
}

Json report_annihilate(const std::vector<std::string>& polys, long deg_cap,
                       const RunConfig& cfg) {
    (void)cfg;
    auto [fam, arity] = parse_family_auto(polys);
    long D = 1;
    for (const MPoly& p : fam) D = std::max<long>(D, p.total_degree().value_or(0));
    if (deg_cap <= 0) {
        deg_cap = 1;
        for (int i = 0; i < arity; ++i) deg_cap *= D; // D^ell
    }
    Json r = report_skeleton("annihilate");
    Json canon = Json::array();
    for (const MPoly& p : fam) canon.push_back(print_canonical(p));
    r["inputs"]["polys"] = canon;
    r["inputs"]["deg_cap"] = deg_cap;
    r["inputs"]["arity"] = arity;
    MPoly R = annihilator(fam, deg_cap);
    auto& s = r["summary"];
    s["annihilator"] = print_canonical(R);
    s["variables_note"] = "X_i stands for the i-th input polynomial slot";
    s["degree"] = R.total_degree().value_or(0);
    return r;
}

Json report_coset_check(const std::vector<std::string>& polys, long n_cap, long b_cap,
                        const RunConfig& cfg) {
    (void)cfg;
    auto [fam, arity] = parse_family_auto(polys);
    Json r = report_skeleton("coset-check");
    r["inputs"]["n_cap"] = n_cap;
    r["inputs"]["b_cap"] = b_cap;
    auto& s = r["summary"];
    if (arity == 1) {
        std::vector<UPoly> fs;
        for (const MPoly& p : fam) fs.push_back(mpoly_to_upoly(p, 1));
        r["inputs"]["polys"] = canon_list(fs);
        r["inputs"]["ell"] = 1;
        CosetReportU rep = coset_check_univariate(fs, n_cap, b_cap);
        for (const auto& [exps, zeros] : rep.tuple_zeros) {
            Json jr;
            jr["exps"] = long_list(exps);
            jr["zeros"] = print_canonical(zeros);
            r["records"].push_back(std::move(jr));
        }
        Json pieces = Json::array();
        for (const CosetPiece& cp : rep.pieces) {
            Json jp;
            jp["piece"] = print_canonical(cp.piece);
            Json cov = Json::array();
            for (const auto& b : cp.covering) cov.push_back(long_list(b));
            jp["covering"] = cov;
            pieces.push_back(std::move(jp));
        }
        s["pieces"] = pieces;
        s["selected"] = rep.selected ? Json(long_list(*rep.selected)) : Json(nullptr);
        s["covered"] = rep.covered;
    } else if (arity == 2) {
        Json canon = Json::array();
        for (const MPoly& p : fam) canon.push_back(print_canonical(p));
        r["inputs"]["polys"] = canon;
        r["inputs"]["ell"] = 2;
        CosetReportM rep = coset_check_multivariate(fam, n_cap, b_cap);
        for (const ValueTupleRec& t : rep.candidates) {
            Json jt;
            jt["orders"] = Json::array();
            jt["indices"] = Json::array();
            for (int o : t.orders) jt["orders"].push_back(o);
            for (int i : t.indices) jt["indices"].push_back(i);
            jt["status"] = t.status;
            r["records"].push_back(std::move(jt));
        }
        s["tuples_scanned"] = rep.tuples_scanned;
        s["empty_fibers"] = rep.empty_fibers;
        s["selected"] = rep.selected ? Json(long_list(*rep.selected)) : Json(nullptr);
        s["covered"] = rep.covered;
        s["emptiness_note"] =
            "fiber emptiness is certified one-sidedly; uncovered tuples may still be empty";
        Json warn = Json::array();
        for (const auto& w : rep.warnings) warn.push_back(w);
        s["warnings"] = warn;
    } else {
        throw DeskScaleError("coset-check: ell > 2 exceeds the desk-scale limit");
    }
    return r;
}

Json report_bounds(const std::string& theorem, long dh1, long dh2, long df, long dg, long D,
                   long ell, const RunConfig& cfg) {
    Json r = report_skeleton("bounds");
    r["inputs"]["theorem"] = theorem;
    BoundReport rep;
    if (theorem == "genar1" || theorem == "ar") {
        rep = bound_genar1(dh1, dh2, df, dg);
    } else if (theorem == "multivar") {
        rep = bound_multivar(dh1, dh2, D, ell);
    } else if (theorem == "gamma") {
        rep = bound_gamma(D, ell);
    } else if (theorem == "coset") {
        rep = bound_coset(D, ell);
    } else {
        throw std::invalid_argument("bounds: theorem must be one of genar1|multivar|gamma|coset");
    }
    for (const auto& [k, v] : rep.inputs) r["inputs"][k] = v;
    auto& s = r["summary"];
    s["theorem"] = rep.theorem;
    Json inter = Json::object();
    for (const auto& [k, v] : rep.intermediates) inter[k] = v;
    s["intermediates"] = inter;
    const BigInt value = cfg.corrupt_bounds ? BigInt(0) : rep.value;
    s["value"] = value.get_str();
    s["exact"] = rep.exact;
    if (!rep.exact) s["rounding"] = "upper";
    Json warn = Json::array();
    for (const auto& w : rep.warnings) warn.push_back(w);
    s["warnings"] = warn;
    return r;
}

Json report_density(const std::vector<std::string>& fs, const std::vector<std::string>& phis,
                    const std::vector<std::string>& gs, const std::vector<std::string>& psis,
                    long max_exp, const RunConfig& cfg) {
    SUnitFamily fam = build_family(fs, phis, gs, psis);
    Json r = report_skeleton("density");
    echo_family(r, fam);
    r["inputs"]["max"] = max_exp;
    r["inputs"]["seed"] = cfg.seed;
    DensityReport rep = coprimality_density(fam, max_exp, cfg.seed, cfg.workers);
    for (const MonoidRecord& mr : rep.monoids) {
        Json jm;
        jm["factor"] = print_canonical(mr.factor);
        jm["member_count"] = mr.members.size();
        Json members = Json::array();
        for (std::size_t i = 0; i < mr.members.size() && i < 32; ++i)
            members.push_back(long_list(mr.members[i]));
        jm["members_sample"] = members;
        jm["closure_pairs_checked"] = mr.closure_pairs_checked;
        jm["closure_holds"] = mr.closure_holds;
        if (!mr.closure_holds) add_violation(r, "monoid closure failed for a factor");
        r["records"].push_back(std::move(jm));
    }
    auto& s = r["summary"];
    s["density"] = rat_to_string(rep.density);
    s["total_cells"] = rep.total_cells;
    s["coprime_cells"] = rep.coprime_cells;
    s["density_note"] = "box density on the finite grid, not an asymptotic limit";
    return r;
}

int exit_code_for(const Json& report) {
    const auto& v = report.at("summary").at("violations");
    return v.empty() ? 0 : 3;
}

namespace {

std::string csv_escape(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos &&
        s.find('\n') == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string render_report(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format != "csv") throw std::invalid_argument("format must be json or csv");
    std::ostringstream out;
    const auto& records = report.at("records");
    if (!records.empty()) {
        const auto& first = records.front();
        bool head = true;
        for (auto it = first.begin(); it != first.end(); ++it) {
            if (!head) out << ",";
            out << csv_escape(Json(it.key()));
            head = false;
        }
        out << "\n";
        for (const auto& rec : records) {
            bool lead = true;
            for (auto it = rec.begin(); it != rec.end(); ++it) {
                if (!lead) out << ",";
                out << csv_escape(it.value());
                lead = false;
            }
            out << "\n";
        }
        return out.str();
    }
    out << "key,value\n";
    for (auto it = report.at("summary").begin(); it != report.at("summary").end(); ++it) {
        out << csv_escape(Json(it.key())) << "," << csv_escape(it.value()) << "\n";
    }
    return out.str();
}

} // namespace arlab
