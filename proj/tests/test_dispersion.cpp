#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bisum/dispersion.hpp"
#include "bisum/print.hpp"
#include "testutil.hpp"

using namespace bisum;
using bisum::test::Rng;

namespace {

// independent membership check by exact substitution
bool member(const BPoly& f, const BPoly& g, const Int& m, const Int& n) {
    return f == shift(g, m, n);
}

// every point of the representation, plus sample points on each line
std::vector<std::pair<Int, Int>> sample_members(const DispSet& d) {
    std::vector<std::pair<Int, Int>> pts = d.points;
    for (const auto& L : d.lines)
        for (int t : {-2, -1, 0, 1, 2})
            pts.emplace_back(L.base.first + t * L.dir.first, L.base.second + t * L.dir.second);
    return pts;
}

}  // namespace

TEST_CASE("disp_uni examples") {
    // f = x^2+x, g = x^2-x: g(x+1) = x^2+x
    const auto s1 = disp_uni(parse_bpoly("x^2+x"), parse_bpoly("x^2-x"), Var::x);
    REQUIRE(s1.kind == ShiftSet1D::Kind::Finite);
    CHECK(s1.values == std::vector<Int>{Int(1)});

    const BPoly p = parse_bpoly("x^2+y");
    const auto s2 = disp_uni(p, p, Var::x);
    REQUIRE(s2.kind == ShiftSet1D::Kind::Finite);
    CHECK(s2.values == std::vector<Int>{Int(0)});

    const auto s3 = disp_uni(BPoly(Rat(3)), BPoly(Rat(5)), Var::x);
    CHECK(s3.kind == ShiftSet1D::Kind::Empty);

    const auto s4 = disp_uni(BPoly(Rat(3)), BPoly(Rat(3)), Var::y);
    CHECK(s4.kind == ShiftSet1D::Kind::All);
}

TEST_CASE("solve_diophantine") {
    const DioSol s1 = solve_diophantine(2, 1, -1);
    REQUIRE(s1.solvable);
    // verify parametrization: a(ut+v) + b(u't+v') = c for t in {-2..2}
    for (int t = -2; t <= 2; ++t) {
        CHECK(Int(2) * (s1.u * t + s1.v) + (s1.up * t + s1.vp) == Int(-1));
    }
    // direction matches (b/g, -a/g)
    CHECK(s1.u == Int(1));
    CHECK(s1.up == Int(-2));

    const DioSol s2 = solve_diophantine(2, 4, 3);
    CHECK(!s2.solvable);

    const DioSol s3 = solve_diophantine(1, 0, 5);
    REQUIRE(s3.solvable);
    CHECK(s3.v == Int(5));
    CHECK(s3.u == Int(0));
    CHECK(abs(s3.up) == Int(1));
    for (int t = -2; t <= 2; ++t)
        CHECK((s3.u * t + s3.v) == Int(5));

    CHECK_THROWS_AS(solve_diophantine(0, 0, 1), std::domain_error);
}

TEST_CASE("integer_roots examples") {
    const auto r1 = integer_roots(parse_upoly_x("x^2-1"));
    CHECK(!r1.all_integers);
    CHECK(r1.roots == std::vector<Int>{Int(-1), Int(1)});

    const auto r2 = integer_roots(UPoly());
    CHECK(r2.all_integers);

    // roots with multiplicity, zero root, rational coefficients
    const auto r3 = integer_roots(parse_upoly_x("x^3*(x-2)^2*(2*x-1)") * Rat(Int(1), Int(3)));
    CHECK(r3.roots == std::vector<Int>{Int(0), Int(2)});

    const auto r4 = integer_roots(parse_upoly_x("x^2+1"));
    CHECK(r4.roots.empty());
    CHECK(!r4.all_integers);
}

TEST_CASE("integer_roots of the Example 2.3 t-system") {
    const BPoly f = parse_bpoly("2*x^2+2*x*y+y^2+y+1");
    const BPoly g = parse_bpoly("2*x^2+2*x*y+y^2+2*x+y+1");
    // m = t, n = -2t-1
    const auto sys = tshift_system(f, g, 1, 0, -2, -1);
    REQUIRE(!sys.empty());
    UPoly gcd_all;
    for (const UPoly& p : sys) gcd_all = gcd_all.is_zero() ? p : gcd_poly(gcd_all, p);
    REQUIRE(!gcd_all.is_zero());
    const auto roots = integer_roots(gcd_all);
    CHECK(roots.roots == std::vector<Int>{Int(-1)});
}

TEST_CASE("disp_bi: paper shift-equivalence example") {
    const BPoly f = parse_bpoly("2*x^2+2*x*y+y^2+y+1");
    const BPoly g = parse_bpoly("2*x^2+2*x*y+y^2+2*x+y+1");
    const DispSet d = disp_bi(f, g);
    CHECK(!d.all_plane);
    CHECK(d.lines.empty());
    REQUIRE(d.points.size() == 1);
    CHECK(d.points[0] == std::pair<Int, Int>{Int(-1), Int(1)});
    CHECK(member(f, g, -1, 1));
}

TEST_CASE("disp_bi: self-dispersion of (x+y)^2-2 is a line") {
    const BPoly d = parse_bpoly("x^2+2*x*y+y^2-2");
    const DispSet D = disp_bi(d, d);
    CHECK(!D.all_plane);
    CHECK(D.points.empty());
    REQUIRE(D.lines.size() == 1);
    CHECK(D.lines[0].base == std::pair<Int, Int>{Int(0), Int(0)});
    CHECK(D.lines[0].dir == std::pair<Int, Int>{Int(1), Int(-1)});
}

TEST_CASE("disp_bi: empty for x^2+y^2 vs x^2+y^2+1") {
    const DispSet d = disp_bi(parse_bpoly("x^2+y^2"), parse_bpoly("x^2+y^2+1"));
    CHECK(d.empty());
}

TEST_CASE("disp_bi: y-free inputs give horizontal lines") {
    // f, g in Q[y]... here free of x: Disp = Z x Disp_y
    const BPoly f = parse_bpoly("y^2+y");
    const BPoly g = parse_bpoly("y^2-y");
    const DispSet d = disp_bi(f, g);
    REQUIRE(d.lines.size() == 1);
    CHECK(d.points.empty());
    CHECK(d.lines[0].dir == std::pair<Int, Int>{Int(1), Int(0)});
    CHECK(d.lines[0].base.second == Int(1));
    // x-free equal constants: the whole plane
    CHECK(disp_bi(BPoly(Rat(2)), BPoly(Rat(2))).all_plane);
    CHECK(disp_bi(BPoly(), BPoly()).all_plane);
    CHECK(disp_bi(BPoly(), BPoly(Rat(1))).empty());
    // x-only equal polynomials: vertical line of pure y-shifts
    const DispSet v = disp_bi(parse_bpoly("x^2"), parse_bpoly("x^2"));
    REQUIRE(v.lines.size() == 1);
    CHECK(v.lines[0].dir == std::pair<Int, Int>{Int(0), Int(1)});
    CHECK(v.lines[0].base == std::pair<Int, Int>{Int(0), Int(0)});
}

TEST_CASE("disp_bi soundness: every represented member verifies") {
    Rng rng(60);
    std::uniform_int_distribution<int> sh(-4, 4);
    const auto pool = bisum::test::denominator_pool();
    for (const BPoly& base : pool) {
        for (int it = 0; it < 6; ++it) {
            const int a = sh(rng), b = sh(rng);
            const BPoly f = shift(base, a, b);
            const DispSet d = disp_bi(f, base);
            CHECK(d.contains(a, b));
            for (const auto& [m, n] : sample_members(d)) CHECK(member(f, base, m, n));
        }
    }
}

TEST_CASE("disp_bi completeness at desk scale") {
    Rng rng(61);
    std::uniform_int_distribution<int> sh(-6, 6);
    const auto pool = bisum::test::denominator_pool();
    for (int it = 0; it < 20; ++it) {
        const BPoly base = pool[static_cast<size_t>(it) % pool.size()];
        const int a = sh(rng), b = sh(rng);
        const BPoly f = shift(base, a, b);
        const DispSet d = disp_bi(f, base);
        CHECK(d.contains(a, b));
        // exhaustive scan: no member outside the representation
        for (int m = -8; m <= 8; ++m)
            for (int n = -8; n <= 8; ++n)
                if (member(f, base, m, n)) CHECK(d.contains(m, n));
    }
    // random non-equivalent pairs stay empty or verified
    for (int it = 0; it < 10; ++it) {
        const BPoly f = bisum::test::random_nonzero_bpoly(rng, 2, 2, 4);
        const BPoly g = bisum::test::random_nonzero_bpoly(rng, 2, 2, 4);
        const DispSet d = disp_bi(f, g);
        for (int m = -8; m <= 8; ++m)
            for (int n = -8; n <= 8; ++n)
                CHECK(member(f, g, m, n) == d.contains(m, n));
    }
}

TEST_CASE("disp_bi group structure on disp(f,f)") {
    const auto pool = bisum::test::denominator_pool();
    for (const BPoly& f : pool) {
        const DispSet d = disp_bi(f, f);
        CHECK(d.contains(0, 0));
        const auto pts = sample_members(d);
        for (const auto& [m1, n1] : pts)
            for (const auto& [m2, n2] : pts) CHECK(d.contains(m1 + m2, n1 + n2));
    }
}

TEST_CASE("stabilizer examples") {
    const Stabilizer s1 = stabilizer(parse_bpoly("x^2+2*x*y+y^2-2"));
    REQUIRE(!s1.trivial);
    CHECK(s1.t == Int(1));
    CHECK(s1.l == Int(1));
    // sigma_x^t d = sigma_y^l d
    const BPoly d1 = parse_bpoly("x^2+2*x*y+y^2-2");
    CHECK(shift(d1, s1.t, 0) == shift(d1, 0, s1.l));

    const Stabilizer s2 = stabilizer(parse_bpoly("x^2+y^2"));
    CHECK(s2.trivial);

    const Stabilizer s3 = stabilizer(parse_bpoly("y-2*x"));
    REQUIRE(!s3.trivial);
    CHECK(s3.t == Int(1));
    CHECK(s3.l == Int(-2));
    const BPoly d3 = parse_bpoly("y-2*x");
    CHECK(shift(d3, s3.t, 0) == shift(d3, 0, s3.l));

    CHECK_THROWS_AS(stabilizer(BPoly(Rat(3))), std::domain_error);
    CHECK_THROWS_AS(stabilizer(parse_bpoly("x^2-2")), std::domain_error);
}

TEST_CASE("stabilizer of Example 4.4 cubic is trivial") {
    CHECK(stabilizer(parse_bpoly("x^3+2*x*y+x*y^2+y^3")).trivial);
}

TEST_CASE("disp_uni specialization matches Theorem 2.2 reduction") {
    // y-free in the sense of the theorem: deg_x = 0, so Disp = Z x Disp_y
    const BPoly f = parse_bpoly("y^3-2*y");
    const DispSet d = disp_bi(f, f);
    REQUIRE(d.lines.size() == 1);
    CHECK(d.lines[0].dir == std::pair<Int, Int>{Int(1), Int(0)});
    const ShiftSet1D s = disp_uni(f, f, Var::y);
    REQUIRE(s.kind == ShiftSet1D::Kind::Finite);
    CHECK(s.values == std::vector<Int>{Int(0)});
}
