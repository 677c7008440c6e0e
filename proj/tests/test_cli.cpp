#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

std::string binary_path() {
    const char* p = std::getenv("ARLAB_BIN");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string out_file = "cli_stdout.tmp";
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + binary_path() + "\" " + args +
                            " > " + out_file + " 2> cli_stderr.tmp";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

} // namespace

TEST_CASE("gcd-sweep end to end") {
    RunResult r = run_cli("gcd-sweep --f T --g \"T+1\" --max 8 --window 8");
    CHECK(r.exit_code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep["schema"] == 1);
    CHECK(rep["command"] == "gcd-sweep");
    CHECK(rep["summary"]["stable_divisor"] == "T^2 + T + 1");
    CHECK(rep["summary"]["violations"].empty());
    CHECK(rep["records"].size() == 64);
}

TEST_CASE("exit code contract") {
    // parse error -> 1, with a located message
    CHECK(run_cli("gcd-sweep --f \"T^(-1)\" --g T --max 2").exit_code == 1);
    // hypothesis failure -> 2
    CHECK(run_cli("gcd-sweep --f \"T^2\" --g \"T^4\" --max 2").exit_code == 2);
    // deliberately corrupted bound -> violation detected -> 3
    CHECK(run_cli("genar1 --f T --g \"T+1\" --n 3 --m 6", "ARLAB_CORRUPT_BOUNDS=1").exit_code == 3);
    // unknown flags -> CLI usage error -> 1
    CHECK(run_cli("gcd-sweep --nonsense 1").exit_code == 1);
}

TEST_CASE("independence certificate through the CLI") {
    RunResult r = run_cli("independence --polys \"T^2\" \"T^3\" --mode plain");
    CHECK(r.exit_code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep["summary"]["verdict"] == "dependent");
    CHECK(rep["summary"]["certificate"]["relation"] == Json::array({"3", "-2"}));
    CHECK(rep["summary"]["certificate"]["constant"] == "1");
    CHECK(rep["summary"]["certificate_valid"] == true);
}

TEST_CASE("bounds through the CLI") {
    RunResult r = run_cli("bounds --theorem genar1 --df 1 --dg 1 --dh1 1 --dh2 1");
    CHECK(r.exit_code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep["summary"]["value"] == "44");
}

TEST_CASE("reports are byte-identical across reruns and worker counts") {
    const std::string args = "gcd-sweep --f T --g \"T+1\" --max 10 --window 10 --seed 5";
    RunResult a = run_cli(args + " --workers 1");
    RunResult b = run_cli(args + " --workers 1");
    RunResult c = run_cli(args + " --workers 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);

    RunResult d1 = run_cli("density --f T --g \"T+1\" --max 9 --seed 11 --workers 1");
    RunResult d2 = run_cli("density --f T --g \"T+1\" --max 9 --seed 11 --workers 2");
    CHECK(d1.exit_code == 0);
    CHECK(d1.out == d2.out);
}

TEST_CASE("csv rendering and file output") {
    RunResult r = run_cli("gcd-sweep --f T --g \"T+1\" --max 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("exps,gcd,degree,bound,within_bound", 0) == 0);

    RunResult w = run_cli("bounds --theorem gamma --D 2 --ell 1 --output bounds_report.json");
    CHECK(w.exit_code == 0);
    std::ifstream in("bounds_report.json");
    Json rep = Json::parse(in);
    CHECK(rep["summary"]["value"] == "6");
    std::remove("bounds_report.json");
}

TEST_CASE("torsion-count CLI with certify") {
    RunResult r = run_cli("torsion-count --curve \"X1 + X2 - 1\" --max-order 12 --certify");
    CHECK(r.exit_code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep["summary"]["count"] == 2);
    CHECK(rep["summary"]["certified"] == true);
    CHECK(rep["records"].size() == 2);

    RunResult e = run_cli("torsion-count --curve \"X1 - X2\" --max-order 8");
    Json erep = Json::parse(e.out);
    CHECK(erep["summary"].contains("exceptional_factor"));
}

TEST_CASE("remaining subcommands run clean") {
    CHECK(run_cli("sunit-gcd --fs T --phis \"2-T\" --gs \"T+1\" --psis \"3*T-1\" --exps 1 1 1 1").exit_code == 0);
    CHECK(run_cli("torsion-zeros --f T --g \"T+1\" --window 6").exit_code == 0);
    CHECK(run_cli("abc-check --fs T --gs \"T+1\" --ns 2 --ms 1").exit_code == 0);
    CHECK(run_cli("mason --a \"T^2\" --b \"1-T^2\" --c 1").exit_code == 0);
    CHECK(run_cli("kronecker --poly X2 --d 2").exit_code == 0);
    CHECK(run_cli("specialize --polys X1 \"X2 + X1^2\" --budget 10").exit_code == 0);
    CHECK(run_cli("multivar-check --F X1 --G X2 --n 2 --m 2").exit_code == 0);
    CHECK(run_cli("annihilate --polys T \"T^2\"").exit_code == 0);
    CHECK(run_cli("coset-check --polys T \"T+1\" --n-cap 6 --b-cap 4").exit_code == 0);
}
