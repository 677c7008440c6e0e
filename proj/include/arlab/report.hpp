#pragma once

#include "arlab/rat.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace arlab {

// Insertion-ordered JSON keeps reports byte-stable across runs.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "arlab 0.1.0";

/// Shared run options. Worker count affects scheduling only, never report
/// content, so it is not echoed into the report.
struct RunConfig {
    int workers = 1;
    std::uint64_t seed = 0;
    bool certify = false;
    // Test hook: zero out every bound so the violation/exit-3 path can be
    // exercised deliberately (enabled via ARLAB_CORRUPT_BOUNDS).
    bool corrupt_bounds = false;
};

Json report_gcd_sweep(const std::vector<std::string>& fs, const std::vector<std::string>& phis,
                      const std::vector<std::string>& gs, const std::vector<std::string>& psis,
                      long max_exp, int torsion_window, const RunConfig& cfg);
Json report_genar1(const std::string& h1, const std::string& h2, const std::string& f,
                   const std::string& g, long n, long m, const RunConfig& cfg);
Json report_sunit_gcd(const std::vector<std::string>& fs, const std::vector<std::string>& phis,
                      const std::vector<std::string>& gs, const std::vector<std::string>& psis,
                      const std::vector<long>& exps, const RunConfig& cfg);
Json report_independence(const std::vector<std::string>& polys, const std::string& mode,
                         const RunConfig& cfg);
Json report_torsion_count(const std::string& curve, int max_order, int prime_count,
                          long prime_floor, const RunConfig& cfg);
Json report_torsion_zeros(const std::string& f, const std::string& g, int window,
                          const RunConfig& cfg);
Json report_abc_check(const std::vector<std::string>& fs, const std::vector<std::string>& gs,
                      const std::vector<long>& ns, const std::vector<long>& ms,
                      const RunConfig& cfg);
Json report_mason(const std::string& a, const std::string& b, const std::string& c,
                  const RunConfig& cfg);
Json report_kronecker(const std::string& poly, long d, bool backward, const RunConfig& cfg);
Json report_specialize(const std::vector<std::string>& polys, long budget, const RunConfig& cfg);
Json report_multivar_check(const std::string& h1, const std::string& h2, const std::string& F,
                           const std::string& G, long n, long m, long budget,
                           const RunConfig& cfg);
Json report_annihilate(const std::vector<std::string>& polys, long deg_cap, const RunConfig& cfg);
Json report_coset_check(const std::vector<std::string>& polys, long n_cap, long b_cap,
                        const RunConfig& cfg);
Json report_bounds(const std::string& theorem, long dh1, long dh2, long df, long dg, long D,
                   long ell, const RunConfig& cfg);
Json report_density(const std::vector<std::string>& fs, const std::vector<std::string>& phis,
                    const std::vector<std::string>& gs, const std::vector<std::string>& psis,
                    long max_exp, const RunConfig& cfg);

/// 0 when summary.violations is empty, 3 otherwise.
int exit_code_for(const Json& report);

/// "json": pretty-printed; "csv": records table (or summary key/value rows
/// when a report has no records).
std::string render_report(const Json& report, const std::string& format);

} // namespace arlab
