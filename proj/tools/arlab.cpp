// arlab: experiments around gcd(f^n - 1, g^m - 1) and its extensions --
// stable-divisor sweeps, torsion-point scans, multiplicative-independence
// certificates, Kronecker reductions, and exact bound calculators.

#include "arlab/errors.hpp"
#include "arlab/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

int default_workers() {
    if (const char* env = std::getenv("ARLAB_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

struct CommonOpts {
    int workers = default_workers();
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--workers", c.workers, "worker threads (env ARLAB_WORKERS overrides the default)");
    cmd->add_option("--seed", c.seed, "seed for sampled checks");
    cmd->add_option("--format", c.format, "report format: json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", c.output, "write the report to this path instead of stdout");
}

arlab::RunConfig run_config(const CommonOpts& c, bool certify = false) {
    arlab::RunConfig cfg;
    cfg.workers = c.workers;
    cfg.seed = c.seed;
    cfg.certify = certify;
    cfg.corrupt_bounds = std::getenv("ARLAB_CORRUPT_BOUNDS") != nullptr;
    return cfg;
}

int emit(const arlab::Json& report, const CommonOpts& c) {
    const std::string text = arlab::render_report(report, c.format);
    if (c.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(c.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file " << c.output << "\n";
            return 1;
        }
        out << text;
    }
    return arlab::exit_code_for(report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arlab: gcd dynamics, torsion scans and independence certificates"};
    app.require_subcommand(1);

    int exit_code = 0;
    auto run = [&](auto&& fn) {
        return [&, fn]() {
            try {
                exit_code = fn();
            } catch (const arlab::ParseError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                exit_code = 1;
            } catch (const arlab::HypothesisError& e) {
                std::cerr << "hypothesis error: " << e.what() << "\n";
                exit_code = 2;
            } catch (const arlab::DeskScaleError& e) {
                std::cerr << "desk-scale error: " << e.what() << "\n";
                exit_code = 2;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                exit_code = 1;
            }
        };
    };

    // gcd-sweep
    {
        auto* cmd = app.add_subcommand("gcd-sweep", "sweep gcd(prod fs^n - prod phis^nu, ...) and accumulate the stable divisor");
        auto c = std::make_shared<CommonOpts>();
        auto f = std::make_shared<std::string>();
        auto g = std::make_shared<std::string>();
        auto fs = std::make_shared<std::vector<std::string>>();
        auto phis = std::make_shared<std::vector<std::string>>();
        auto gs = std::make_shared<std::vector<std::string>>();
        auto psis = std::make_shared<std::vector<std::string>>();
        auto max = std::make_shared<long>(12);
        auto window = std::make_shared<int>(0);
        cmd->add_option("--f", *f, "left polynomial (AR case)");
        cmd->add_option("--g", *g, "right polynomial (AR case)");
        cmd->add_option("--fs", *fs, "left S-unit numerator polynomials")->expected(-1);
        cmd->add_option("--phis", *phis, "left S-unit subtrahend polynomials")->expected(-1);
        cmd->add_option("--gs", *gs, "right S-unit numerator polynomials")->expected(-1);
        cmd->add_option("--psis", *psis, "right S-unit subtrahend polynomials")->expected(-1);
        cmd->add_option("--max", *max, "exponent grid bound");
        cmd->add_option("--window", *window, "torsion window for the h-candidate (default: --max)");
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            auto F = *fs, G = *gs;
            if (!f->empty()) F = {*f};
            if (!g->empty()) G = {*g};
            arlab::Json rep = arlab::report_gcd_sweep(F, *phis, G, *psis, *max, *window, run_config(*c));
            return emit(rep, *c);
        }));
    }

    // genar1
    {
        auto* cmd = app.add_subcommand("genar1", "gcd(h1(f^n), h2(g^m)) with the Theorem bound");
        auto c = std::make_shared<CommonOpts>();
        auto h1 = std::make_shared<std::string>("T-1");
        auto h2 = std::make_shared<std::string>("T-1");
        auto f = std::make_shared<std::string>();
        auto g = std::make_shared<std::string>();
        auto n = std::make_shared<long>(1);
        auto m = std::make_shared<long>(1);
        cmd->add_option("--h1", *h1, "outer polynomial h1");
        cmd->add_option("--h2", *h2, "outer polynomial h2");
        cmd->add_option("--f", *f, "inner polynomial f")->required();
        cmd->add_option("--g", *g, "inner polynomial g")->required();
        cmd->add_option("--n", *n, "exponent of f");
        cmd->add_option("--m", *m, "exponent of g");
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_genar1(*h1, *h2, *f, *g, *n, *m, run_config(*c)), *c);
        }));
    }

    // sunit-gcd
    {
        auto* cmd = app.add_subcommand("sunit-gcd", "one S-unit gcd at a fixed exponent tuple");
        auto c = std::make_shared<CommonOpts>();
        auto fs = std::make_shared<std::vector<std::string>>();
        auto phis = std::make_shared<std::vector<std::string>>();
        auto gs = std::make_shared<std::vector<std::string>>();
        auto psis = std::make_shared<std::vector<std::string>>();
        auto exps = std::make_shared<std::vector<long>>();
        cmd->add_option("--fs", *fs)->expected(-1)->required();
        cmd->add_option("--phis", *phis)->expected(-1);
        cmd->add_option("--gs", *gs)->expected(-1)->required();
        cmd->add_option("--psis", *psis)->expected(-1);
        cmd->add_option("--exps", *exps, "exponents for fs, phis, gs, psis in order")->expected(-1)->required();
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_sunit_gcd(*fs, *phis, *gs, *psis, *exps, run_config(*c)), *c);
        }));
    }

    // independence
    {
        auto* cmd = app.add_subcommand("independence", "multiplicative independence verdict with certificate");
        auto c = std::make_shared<CommonOpts>();
        auto polys = std::make_shared<std::vector<std::string>>();
        auto mode = std::make_shared<std::string>("plain");
        cmd->add_option("--polys", *polys, "polynomials")->expected(-1)->required();
        cmd->add_option("--mode", *mode, "plain | mod-constants")->check(CLI::IsMember({"plain", "mod-constants"}));
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_independence(*polys, *mode, run_config(*c)), *c);
        }));
    }

    // torsion-count
    {
        auto* cmd = app.add_subcommand("torsion-count", "count torsion points on a plane curve within an order window");
        auto c = std::make_shared<CommonOpts>();
        auto curve = std::make_shared<std::string>();
        auto max_order = std::make_shared<int>(0);
        auto primes = std::make_shared<int>(3);
        auto floor = std::make_shared<long>(1000);
        auto certify = std::make_shared<bool>(false);
        cmd->add_option("--curve", *curve, "curve H(X1, X2)")->required();
        cmd->add_option("--max-order", *max_order, "scan bound B (0: default 6*(deg H + 1)^2)");
        cmd->add_option("--primes", *primes, "independent prime embeddings per point");
        cmd->add_option("--prime-floor", *floor, "smallest admissible prime");
        cmd->add_flag("--certify", *certify, "symbolically re-check each candidate point");
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_torsion_count(*curve, *max_order, *primes, *floor,
                                                    run_config(*c, *certify)),
                        *c);
        }));
    }

    // torsion-zeros
    {
        auto* cmd = app.add_subcommand("torsion-zeros", "t where f(t) and g(t) are both roots of unity of order <= window");
        auto c = std::make_shared<CommonOpts>();
        auto f = std::make_shared<std::string>();
        auto g = std::make_shared<std::string>();
        auto window = std::make_shared<int>(6);
        cmd->add_option("--f", *f)->required();
        cmd->add_option("--g", *g)->required();
        cmd->add_option("--window", *window, "maximal root-of-unity order");
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_torsion_zeros(*f, *g, *window, run_config(*c)), *c);
        }));
    }

    // abc-check
    {
        auto* cmd = app.add_subcommand("abc-check", "multiplicity of prod fs^ns - prod gs^ms against the ABC bound");
        auto c = std::make_shared<CommonOpts>();
        auto fs = std::make_shared<std::vector<std::string>>();
        auto gs = std::make_shared<std::vector<std::string>>();
        auto ns = std::make_shared<std::vector<long>>();
        auto ms = std::make_shared<std::vector<long>>();
        cmd->add_option("--fs", *fs)->expected(-1)->required();
        cmd->add_option("--gs", *gs)->expected(-1)->required();
        cmd->add_option("--ns", *ns)->expected(-1)->required();
        cmd->add_option("--ms", *ms)->expected(-1)->required();
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_abc_check(*fs, *gs, *ns, *ms, run_config(*c)), *c);
        }));
    }

    // mason
    {
        auto* cmd = app.add_subcommand("mason", "Mason-Stothers inequality for coprime A + B = C");
        auto c = std::make_shared<CommonOpts>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto cc = std::make_shared<std::string>();
        cmd->add_option("--a", *a)->required();
        cmd->add_option("--b", *b)->required();
        cmd->add_option("--c", *cc)->required();
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_mason(*a, *b, *cc, run_config(*c)), *c);
        }));
    }

    // kronecker
    {
        auto* cmd = app.add_subcommand("kronecker", "tilde transform X_i -> X_i +- X1^(d^(i-1))");
        auto c = std::make_shared<CommonOpts>();
        auto poly = std::make_shared<std::string>();
        auto d = std::make_shared<long>(2);
        auto backward = std::make_shared<bool>(false);
        cmd->add_option("--poly", *poly)->required();
        cmd->add_option("--d", *d, "substitution base d >= 2");
        cmd->add_flag("--backward", *backward, "apply the inverse automorphism");
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_kronecker(*poly, *d, *backward, run_config(*c)), *c);
        }));
    }

    // specialize
    {
        auto* cmd = app.add_subcommand("specialize", "find an independence-preserving specialization (X2..Xl) -> alphas");
        auto c = std::make_shared<CommonOpts>();
        auto polys = std::make_shared<std::vector<std::string>>();
        auto budget = std::make_shared<long>(1000);
        cmd->add_option("--polys", *polys)->expected(-1)->required();
        cmd->add_option("--budget", *budget, "candidate budget");
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_specialize(*polys, *budget, run_config(*c)), *c);
        }));
    }

    // multivar-check
    {
        auto* cmd = app.add_subcommand("multivar-check", "multivariate-to-univariate degree chain: direct mgcd vs tilde/specialized gcd");
        auto c = std::make_shared<CommonOpts>();
        auto h1 = std::make_shared<std::string>("T-1");
        auto h2 = std::make_shared<std::string>("T-1");
        auto F = std::make_shared<std::string>();
        auto G = std::make_shared<std::string>();
        auto n = std::make_shared<long>(1);
        auto m = std::make_shared<long>(1);
        auto budget = std::make_shared<long>(1000);
        cmd->add_option("--h1", *h1);
        cmd->add_option("--h2", *h2);
        cmd->add_option("--F", *F)->required();
        cmd->add_option("--G", *G)->required();
        cmd->add_option("--n", *n);
        cmd->add_option("--m", *m);
        cmd->add_option("--budget", *budget);
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_multivar_check(*h1, *h2, *F, *G, *n, *m, *budget, run_config(*c)), *c);
        }));
    }

    // annihilate
    {
        auto* cmd = app.add_subcommand("annihilate", "Perron annihilator of arity+1 polynomials");
        auto c = std::make_shared<CommonOpts>();
        auto polys = std::make_shared<std::vector<std::string>>();
        auto cap = std::make_shared<long>(0);
        cmd->add_option("--polys", *polys)->expected(-1)->required();
        cmd->add_option("--deg-cap", *cap, "annihilator degree cap (0: D^ell)");
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_annihilate(*polys, *cap, run_config(*c)), *c);
        }));
    }

    // coset-check
    {
        auto* cmd = app.add_subcommand("coset-check", "containment of common torsion zeros in monomial-relation varieties");
        auto c = std::make_shared<CommonOpts>();
        auto polys = std::make_shared<std::vector<std::string>>();
        auto n_cap = std::make_shared<long>(4);
        auto b_cap = std::make_shared<long>(4);
        cmd->add_option("--polys", *polys, "ell+1 polynomials (2 univariate or 3 arity-2)")->expected(-1)->required();
        cmd->add_option("--n-cap", *n_cap, "exponent cap for the solution sets");
        cmd->add_option("--b-cap", *b_cap, "relation vector cap");
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_coset_check(*polys, *n_cap, *b_cap, run_config(*c)), *c);
        }));
    }

    // bounds
    {
        auto* cmd = app.add_subcommand("bounds", "exact values of the degree and count bound formulas");
        auto c = std::make_shared<CommonOpts>();
        auto theorem = std::make_shared<std::string>();
        auto dh1 = std::make_shared<long>(1);
        auto dh2 = std::make_shared<long>(1);
        auto df = std::make_shared<long>(1);
        auto dg = std::make_shared<long>(1);
        auto D = std::make_shared<long>(1);
        auto ell = std::make_shared<long>(1);
        cmd->add_option("--theorem", *theorem, "genar1 | multivar | gamma | coset")->required();
        cmd->add_option("--dh1", *dh1);
        cmd->add_option("--dh2", *dh2);
        cmd->add_option("--df", *df);
        cmd->add_option("--dg", *dg);
        cmd->add_option("--D", *D);
        cmd->add_option("--ell", *ell);
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            return emit(arlab::report_bounds(*theorem, *dh1, *dh2, *df, *dg, *D, *ell, run_config(*c)), *c);
        }));
    }

    // density
    {
        auto* cmd = app.add_subcommand("density", "box density of coprime exponent tuples and monoid structure");
        auto c = std::make_shared<CommonOpts>();
        auto f = std::make_shared<std::string>();
        auto g = std::make_shared<std::string>();
        auto fs = std::make_shared<std::vector<std::string>>();
        auto phis = std::make_shared<std::vector<std::string>>();
        auto gs = std::make_shared<std::vector<std::string>>();
        auto psis = std::make_shared<std::vector<std::string>>();
        auto max = std::make_shared<long>(12);
        cmd->add_option("--f", *f, "left polynomial (AR case)");
        cmd->add_option("--g", *g, "right polynomial (AR case)");
        cmd->add_option("--fs", *fs)->expected(-1);
        cmd->add_option("--phis", *phis)->expected(-1);
        cmd->add_option("--gs", *gs)->expected(-1);
        cmd->add_option("--psis", *psis)->expected(-1);
        cmd->add_option("--max", *max, "grid bound");
        add_common(cmd, *c);
        cmd->callback(run([=]() {
            auto F = *fs, G = *gs;
            if (!f->empty()) F = {*f};
            if (!g->empty()) G = {*g};
            return emit(arlab::report_density(F, *phis, G, *psis, *max, run_config(*c)), *c);
        }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    return exit_code;
}
