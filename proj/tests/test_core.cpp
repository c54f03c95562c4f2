#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bisum/print.hpp"
#include "testutil.hpp"

using namespace bisum;
using bisum::test::Rng;

TEST_CASE("Rat canonical form") {
    CHECK(Rat(Int(2), Int(4)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(3), Int(-6)) == Rat(Int(-1), Int(2)));
    CHECK(Rat(Int(3), Int(-6)).den() == 2);
    CHECK(Rat(0).den() == 1);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
    CHECK(to_string(Rat(Int(-7), Int(3))) == "-7/3");
    CHECK((Rat(Int(1), Int(2)) + Rat(Int(1), Int(3))) == Rat(Int(5), Int(6)));
    CHECK(Rat(Int(-7), Int(2)).floor() == Int(-4));
}

TEST_CASE("UPoly arithmetic and division") {
    const UPoly p = parse_upoly_x("x^3-2*x+1");
    const UPoly q = parse_upoly_x("x-1");
    UPoly quo, rem;
    UPoly::divmod(p, q, quo, rem);
    CHECK(rem.is_zero());
    CHECK(quo == parse_upoly_x("x^2+x-1"));
    CHECK(p.deg() == 3);
    CHECK(UPoly().degree() == std::nullopt);
    CHECK(gcd_poly(parse_upoly_x("x^2-1"), parse_upoly_x("x^2-2*x+1")) == parse_upoly_x("x-1"));
}

TEST_CASE("shift: paper reverse example") {
    // g(x-1, y+1) for g = 2x^2+2xy+y^2+2x+y+1 gives f of the dispersion example
    const BPoly g = parse_bpoly("2*x^2+2*x*y+y^2+2*x+y+1");
    const BPoly f = parse_bpoly("2*x^2+2*x*y+y^2+y+1");
    CHECK(shift(g, -1, 1) == f);
}

TEST_CASE("shift: identity and x+y invariance") {
    Rng rng(41);
    const BPoly p = bisum::test::random_nonzero_bpoly(rng, 3, 3);
    CHECK(shift(p, 0, 0) == p);
    CHECK(shift(parse_bpoly("x+y"), 3, -3) == parse_bpoly("x+y"));
}

TEST_CASE("shift composition and degree preservation") {
    Rng rng(42);
    std::uniform_int_distribution<int> s(-5, 5);
    for (int it = 0; it < 30; ++it) {
        const BPoly p = bisum::test::random_nonzero_bpoly(rng, 3, 3);
        const int m1 = s(rng), n1 = s(rng), m2 = s(rng), n2 = s(rng);
        CHECK(shift(shift(p, m1, n1), m2, n2) == shift(p, m1 + m2, n1 + n2));
        CHECK(shift(p, m1, n1).deg_x() == p.deg_x());
        CHECK(shift(p, m1, n1).deg_y() == p.deg_y());
    }
}

TEST_CASE("BPoly ring axioms on random triples") {
    Rng rng(43);
    for (int it = 0; it < 25; ++it) {
        const BPoly a = bisum::test::random_bpoly(rng, 2, 2);
        const BPoly b = bisum::test::random_bpoly(rng, 2, 2);
        const BPoly c = bisum::test::random_bpoly(rng, 2, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("gcd_bpoly examples") {
    CHECK(gcd_bpoly(parse_bpoly("x^2-y^2"), parse_bpoly("x^2+2*x*y+y^2")) == parse_bpoly("x+y"));
    CHECK(gcd_bpoly(parse_bpoly("x+y"), parse_bpoly("x-y")) == BPoly(Rat(1)));
    const BPoly a = parse_bpoly("(x^2+y^2)*(x-2)");
    const BPoly b = parse_bpoly("(x^2+y^2)*x^3");
    const BPoly g = gcd_bpoly(a, b);
    CHECK(g == parse_bpoly("x^2+y^2"));
    CHECK(try_divide(a, g).has_value());
    CHECK(try_divide(b, g).has_value());
    CHECK_THROWS(gcd_bpoly(BPoly(), BPoly()));
}

TEST_CASE("gcd_bpoly associate property") {
    Rng rng(44);
    for (int it = 0; it < 15; ++it) {
        const BPoly a = bisum::test::random_nonzero_bpoly(rng, 2, 1, 3);
        const BPoly b = bisum::test::random_nonzero_bpoly(rng, 1, 2, 3);
        const BPoly c = bisum::test::random_nonzero_bpoly(rng, 1, 1, 3);
        const BPoly lhs = gcd_bpoly(a * c, b * c);
        const BPoly rhs = int_primitive(gcd_bpoly(a, b) * c).prim;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rf_normalize examples") {
    const RatFunc f = rf_normalize(parse_bpoly("x^2-y^2"), parse_bpoly("x+y"));
    CHECK(f.num() == parse_bpoly("x-y"));
    CHECK(f.den() == BPoly(Rat(1)));

    const RatFunc z = rf_normalize(BPoly(), parse_bpoly("x+y"));
    CHECK(z.num() == BPoly());
    CHECK(z.den() == BPoly(Rat(1)));

    const RatFunc h = rf_normalize(parse_bpoly("2*x+2*y"), BPoly(Rat(4)));
    CHECK(h.num() == parse_bpoly("x+y"));
    CHECK(h.den() == BPoly(Rat(2)));

    CHECK_THROWS_AS(rf_normalize(parse_bpoly("x"), BPoly()), std::domain_error);

    // idempotence
    const RatFunc g = rf_normalize(h.num(), h.den());
    CHECK(g == h);
}

TEST_CASE("RatFunc stays reduced under arithmetic") {
    Rng rng(45);
    for (int it = 0; it < 10; ++it) {
        const RatFunc f(bisum::test::random_nonzero_bpoly(rng, 2, 2, 4),
                        bisum::test::random_nonzero_bpoly(rng, 2, 2, 4));
        const RatFunc g(bisum::test::random_nonzero_bpoly(rng, 2, 2, 4),
                        bisum::test::random_nonzero_bpoly(rng, 2, 2, 4));
        const RatFunc s = f + g;
        if (!s.is_zero()) {
            CHECK(gcd_bpoly(s.num(), s.den()).is_constant());
            CHECK(s.den().lead_coeff().sign() > 0);
        }
        CHECK((f - f).is_zero());
        CHECK(f * g == g * f);
    }
}

TEST_CASE("dual views agree with the term map") {
    Rng rng(46);
    for (int it = 0; it < 20; ++it) {
        const BPoly p = bisum::test::random_bpoly(rng, 3, 3);
        CHECK(BPoly::from_x_view(p.x_view()) == p);
        CHECK(BPoly::from_y_view(p.y_view()) == p);
        auto [n, d] = clear_denominators(p.to_fpoly_y(), true);
        CHECK(d == UPoly(Rat(1)));
        CHECK(n == p);
    }
}

TEST_CASE("FPoly field tower sanity") {
    // (y^2 + (1/x)y) / (y + 1/x) = y in Q(x)[y]
    const PolyFrac invx(UPoly(Rat(1)), UPoly::var());
    const FPoly num = FPoly::from_coeffs({PolyFrac(Rat(0)), invx, PolyFrac(Rat(1))});
    const FPoly den = FPoly::from_coeffs({invx, PolyFrac(Rat(1))});
    FPoly q, r;
    FPoly::divmod(num, den, q, r);
    CHECK(r.is_zero());
    CHECK(q == FPoly::var());
}

TEST_CASE("printing canonical order") {
    CHECK(to_string(parse_bpoly("x^2+2*x*y+y^2-2")) == "y^2+2*x*y+x^2-2");
    CHECK(to_string(BPoly()) == "0");
    CHECK(to_string(RatFunc(parse_bpoly("x+y+1"), parse_bpoly("x^2+2*x*y+y^2-2"))) ==
          "(y+x+1)/(y^2+2*x*y+x^2-2)");
    CHECK(to_string(parse_upoly_x("x^2-1"), "x") == "x^2-1");
    CHECK(to_string(Rat(Int(1), Int(2))) == "1/2");
    CHECK(to_string(parse_bpoly("x*y/2-3*y+1")) == "1/2*x*y-3*y+1");
}
