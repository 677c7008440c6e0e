#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arlab/cycfield.hpp"
#include "arlab/mulind.hpp"
#include "arlab/torsion.hpp"
#include "test_util.hpp"

using namespace arlab;
using namespace arlab::testutil;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == up("T-1"));
    CHECK(cyclotomic(2) == up("T+1"));
    CHECK(cyclotomic(6) == up("T^2-T+1"));
    CHECK(cyclotomic(8) == up("T^4+1"));
    CHECK(cyclotomic(12) == up("T^4-T^2+1"));

    for (int d = 1; d <= 30; ++d) {
        const CyclotomicIndex ci = cyclotomic_index(d);
        CHECK(ci.poly.deg() == ci.phi);
        // divides T^d - 1 and no smaller T^e - 1
        CHECK(divides(ci.poly, up("T").pow(d) - up("1")));
        for (int e = 1; e < d; ++e) CHECK(!divides(ci.poly, up("T").pow(e) - up("1")));
    }
}

TEST_CASE("is_cyclotomic_product") {
    CHECK(is_cyclotomic_product(up("T^2+T+1")));
    CHECK(!is_cyclotomic_product(up("T^2-2")));
    CHECK(is_cyclotomic_product(up("(T-1)^2*(T^2+1)")));
    CHECK(is_cyclotomic_product(up("3*T^2+3*T+3"))); // normalized first
    CHECK(!is_cyclotomic_product(up("T^2+T-1")));
    CHECK_THROWS_AS(is_cyclotomic_product(UPoly::zero()), std::invalid_argument);
}

TEST_CASE("torsion window") {
    CHECK(torsion_window(2) == up("T^2-1"));
    CHECK(torsion_window(3) == up("(T^2-1)*(T^2+T+1)"));
    int expect = 0;
    for (int d = 1; d <= 6; ++d) expect += euler_phi(d);
    CHECK(expect == 12);
    CHECK(torsion_window(6).deg() == 12);
    for (int B = 1; B <= 10; ++B) {
        int s = 0;
        for (int d = 1; d <= B; ++d) s += euler_phi(d);
        CHECK(torsion_window(B).deg() == s);
    }
}

TEST_CASE("common torsion zeros") {
    CHECK(common_torsion_zeros(up("T"), up("T+1"), 6) == up("T^2+T+1"));
    CHECK(common_torsion_zeros(up("T"), up("T+1"), 2) == up("1"));
    CHECK(common_torsion_zeros(up("T"), up("2*T"), 12) == up("1"));
    CHECK(common_torsion_zeros(up("T"), up("2*T+1"), 4) == up("T+1"));
    // monotone windows: result for B divides result for B' >= B
    for (int B = 1; B <= 8; ++B) {
        UPoly small = common_torsion_zeros(up("T"), up("T+1"), B);
        UPoly big = common_torsion_zeros(up("T"), up("T+1"), B + 2);
        CHECK(divides(small, big));
    }
}

TEST_CASE("exceptional factor detection") {
    auto flag = find_exceptional_factor(mp("X1 - X2", 2));
    REQUIRE(flag.has_value());
    CHECK(flag->factor == mp("X1 - X2", 2));

    CHECK(find_exceptional_factor(mp("X1 + X2 - 1", 2)) == std::nullopt);
    CHECK(find_exceptional_factor(mp("X1*X2 - 2", 2)) == std::nullopt);
    CHECK(find_exceptional_factor(mp("X1*X2 - 1", 2)).has_value());
    CHECK(find_exceptional_factor(mp("X1*X2 + 1", 2)).has_value());
    // norm of X - rho*Y with rho a primitive cube root: X^2 + X*Y + Y^2
    CHECK(find_exceptional_factor(mp("(X1^2 + X1*X2 + X2^2)*(X1 + X2 - 1)", 2)).has_value());
    // X^2 - Y is itself of the exceptional shape X^i - rho*Y^j
    CHECK(find_exceptional_factor(mp("X1^2 - X2", 2)).has_value());
    CHECK(find_exceptional_factor(mp("(X1^2 + X2^2 - 2)*(X1 + X2 - 3)", 2)) == std::nullopt);
}

TEST_CASE("count_torsion_points: X+Y-1 has exactly the two sixth-root points") {
    TorsionScanConfig cfg;
    cfg.max_order = 12;
    TorsionScan scan = count_torsion_points(mp("X1 + X2 - 1", 2), cfg);
    REQUIRE(!scan.exceptional.has_value());
    REQUIRE(scan.points.size() == 2);
    CHECK(scan.points[0] == TorsionPoint{6, 6, 1, 5});
    CHECK(scan.points[1] == TorsionPoint{6, 6, 5, 1});
    CHECK(scan.primes_used.size() >= 3);
    // Lemma bound: 2 <= 11 * deg^2 = 11
    CHECK(static_cast<int>(scan.points.size()) <= 11);
}

TEST_CASE("the reported points satisfy x + y = 1 exactly in Q(zeta_6)") {
    auto f6 = cyc_field(6);
    CycElem x = CycElem::zeta(f6, 1);
    CycElem y = CycElem::zeta(f6, 5);
    CHECK(x + y == CycElem(1L));
    CHECK(!(x + y == CycElem(0L)));
    // and the pair really has exact orders 6
    CycElem p = x;
    int order = 1;
    while (!(p == CycElem(1L))) {
        p = p * x;
        ++order;
    }
    CHECK(order == 6);
}

TEST_CASE("count_torsion_points: exceptional and empty cases") {
    TorsionScanConfig cfg;
    cfg.max_order = 8;
    TorsionScan diag = count_torsion_points(mp("X1 - X2", 2), cfg);
    CHECK(diag.exceptional.has_value());
    CHECK(diag.points.empty());

    TorsionScan none = count_torsion_points(mp("X1*X2 - 2", 2), cfg);
    CHECK(!none.exceptional.has_value());
    CHECK(none.points.empty());
}

TEST_CASE("certify mode keeps the true points") {
    TorsionScanConfig cfg;
    cfg.max_order = 12;
    cfg.certify = true;
    TorsionScan scan = count_torsion_points(mp("X1 + X2 - 1", 2), cfg);
    CHECK(scan.certified);
    CHECK(scan.points.size() == 2);
}

TEST_CASE("multi-prime agreement: reported points vanish under extra primes") {
    TorsionScanConfig cfg;
    cfg.max_order = 12;
    const MPoly H = mp("X1 + X2 - 1", 2);
    TorsionScan scan = count_torsion_points(H, cfg);
    for (const TorsionPoint& pt : scan.points) {
        const long l = std::lcm<long>(pt.order_x, pt.order_y);
        // two additional admissible primes beyond the ones the scan used
        auto extras = admissible_primes(H, l, scan.primes_used.back() + 1, 2);
        REQUIRE(extras.size() == 2);
        for (long p : extras)
            CHECK(zero_at_unity_pair_mod_p(H, p, pt.order_x, pt.index_x, pt.order_y, pt.index_y));
    }
}

TEST_CASE("parallel scan matches the serial reference") {
    const MPoly H = mp("X1^2 + X2^2 - 2", 2); // torsion points at (+-1, +-1)
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= 10; ++a)
        for (int b = 1; b <= 10; ++b) pairs.emplace_back(a, b);
    TorsionScanConfig cfg;
    cfg.workers = 4;
    std::vector<std::string> w1, w2;
    std::vector<long> p1, p2;
    auto serial = torsion_detail::scan_cells_serial(H, pairs, cfg, w1, p1);
    auto parallel = torsion_detail::scan_cells_parallel(H, pairs, cfg, w2, p2);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        REQUIRE(serial[i].size() == parallel[i].size());
        for (std::size_t j = 0; j < serial[i].size(); ++j) CHECK(serial[i][j] == parallel[i][j]);
    }
    CHECK(w1 == w2);
    CHECK(p1 == p2);
}

TEST_CASE("implicitized independent pairs respect the 11(df+dg)^2 bound") {
    struct Case {
        const char* f;
        const char* g;
    };
    for (const Case& c : {Case{"T", "T+1"}, Case{"T^2", "T+1"}, Case{"T^2+1", "T+2"}}) {
        const UPoly f = up(c.f), g = up(c.g);
        REQUIRE(!find_dependence<UPoly>({f, g}, IndependenceMode::ModConstants).has_value());
        const MPoly H = implicitize(f, g);
        TorsionScanConfig cfg;
        cfg.max_order = 12;
        TorsionScan scan = count_torsion_points(H, cfg);
        REQUIRE(!scan.exceptional.has_value());
        const long bound = 11L * (f.deg() + g.deg()) * (f.deg() + g.deg());
        CHECK(static_cast<long>(scan.points.size()) <= bound);
    }
    // the T^2 / T+1 curve carries exactly the two cube-root points
    TorsionScanConfig cfg;
    cfg.max_order = 12;
    TorsionScan scan = count_torsion_points(implicitize(up("T^2"), up("T+1")), cfg);
    REQUIRE(scan.points.size() == 2);
    CHECK(scan.points[0].order_x == 3);
    CHECK(scan.points[0].order_y == 6);
}

TEST_CASE("default scan bound") {
    CHECK(default_scan_bound(mp("X1 + X2 - 1", 2)) == 24);
    CHECK(default_scan_bound(mp("X1^2*X2^2 - 3", 2)) == 150);
}
