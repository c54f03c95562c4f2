#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bisum/factor.hpp"
#include "bisum/print.hpp"
#include "testutil.hpp"

using namespace bisum;
using bisum::test::Rng;

namespace {

UPoly z(std::string_view s) { return parse_upoly_x(s); }

bool has_factor(const UFactorization& f, const UPoly& want, int mult) {
    for (const auto& [p, e] : f.factors)
        if (p == want && e == mult) return true;
    return false;
}

bool has_factor(const Factorization& f, const BPoly& want, int mult) {
    for (const auto& [p, e] : f.factors)
        if (p == want && e == mult) return true;
    return false;
}

// brute-force irreducibility check by inverting every proper factor subset of
// the Kronecker image of q
bool brute_force_irreducible(const BPoly& q) {
    const int n = 2 * q.deg_x_or0() + 1;
    UFactorization uf = factor_upoly(kronecker_image(q, n));
    std::vector<UPoly> pool;
    for (const auto& [f, e] : uf.factors)
        for (int k = 0; k < e; ++k) pool.push_back(f);
    const size_t total = pool.size();
    if (total <= 1) return true;
    for (size_t mask = 1; mask + 1 < (size_t(1) << total); ++mask) {
        UPoly c(Rat(1));
        for (size_t i = 0; i < total; ++i)
            if (mask & (size_t(1) << i)) c *= pool[i];
        const BPoly cand = kronecker_invert(c, n);
        if (cand.is_constant()) continue;
        const BPoly pp = int_primitive(cand).prim;
        if (pp == int_primitive(q).prim) continue;
        if (try_divide(q, pp)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("squarefree decomposition examples") {
    auto d1 = squarefree_decomp(z("x^3+x^2"));
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == std::pair<UPoly, int>{z("x+1"), 1});
    CHECK(d1[1] == std::pair<UPoly, int>{z("x"), 2});

    auto d2 = squarefree_decomp(z("x^2+1"));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0] == std::pair<UPoly, int>{z("x^2+1"), 1});

    auto d3 = squarefree_decomp(z("(x-1)^2*(x+2)^3"));
    REQUIRE(d3.size() == 2);
    CHECK(d3[0] == std::pair<UPoly, int>{z("x-1"), 2});
    CHECK(d3[1] == std::pair<UPoly, int>{z("x+2"), 3});
    // reconstruction
    UPoly prod(Rat(1));
    for (auto& [f, e] : d3) prod *= f.pow(static_cast<unsigned>(e));
    CHECK(prod == z("(x-1)^2*(x+2)^3"));

    CHECK_THROWS(squarefree_decomp(UPoly()));
}

TEST_CASE("factor_upoly examples") {
    auto f1 = factor_upoly(z("x^2-1"));
    CHECK(f1.unit == Rat(1));
    CHECK(has_factor(f1, z("x-1"), 1));
    CHECK(has_factor(f1, z("x+1"), 1));
    CHECK(f1.factors.size() == 2);

    auto f2 = factor_upoly(z("x^2+1"));
    CHECK(f2.factors.size() == 1);
    CHECK(has_factor(f2, z("x^2+1"), 1));

    auto f3 = factor_upoly(z("6*x^2+5*x+1"));
    CHECK(f3.unit == Rat(1));
    CHECK(has_factor(f3, z("2*x+1"), 1));
    CHECK(has_factor(f3, z("3*x+1"), 1));

    CHECK_THROWS(factor_upoly(UPoly()));
}

TEST_CASE("factor_upoly harder cases") {
    // rational content and repeated factors
    auto f = factor_upoly(z("(x^2-2)^2*(x^2+x+1)*(2*x-3)") * Rat(Int(3), Int(7)));
    CHECK(has_factor(f, z("x^2-2"), 2));
    CHECK(has_factor(f, z("x^2+x+1"), 1));
    CHECK(has_factor(f, z("2*x-3"), 1));
    CHECK(f.value() == z("(x^2-2)^2*(x^2+x+1)*(2*x-3)") * Rat(Int(3), Int(7)));

    // cyclotomic-ish splitting stress
    auto g = factor_upoly(z("x^12-1"));
    UPoly prod(g.unit);
    for (auto& [p, e] : g.factors) prod *= p.pow(static_cast<unsigned>(e));
    CHECK(prod == z("x^12-1"));
    CHECK(g.factors.size() == 6);  // cyclotomic polynomials d | 12
}

TEST_CASE("factor_bpoly examples") {
    auto f1 = factor_bpoly(parse_bpoly("x^2-y^2"));
    CHECK(f1.factors.size() == 2);
    // x-y normalizes to y-x (positive grlex leading coefficient), unit -1
    CHECK(has_factor(f1, parse_bpoly("y-x"), 1));
    CHECK(has_factor(f1, parse_bpoly("x+y"), 1));
    CHECK(f1.unit == Rat(-1));
    CHECK(f1.value() == parse_bpoly("x^2-y^2"));

    auto f2 = factor_bpoly(parse_bpoly("x^2+2*x*y+y^2-2"));
    CHECK(f2.factors.size() == 1);
    CHECK(has_factor(f2, parse_bpoly("x^2+2*x*y+y^2-2"), 1));

    auto f3 = factor_bpoly(parse_bpoly("(x^2+y^2)*(x^3+2*x*y+x*y^2+y^3)"));
    CHECK(f3.factors.size() == 2);
    CHECK(has_factor(f3, parse_bpoly("x^2+y^2"), 1));
    CHECK(has_factor(f3, parse_bpoly("x^3+2*x*y+x*y^2+y^3"), 1));

    CHECK_THROWS(factor_bpoly(BPoly()));
}

TEST_CASE("factor_bpoly sign normalization") {
    auto f = factor_bpoly(parse_bpoly("y^2-x^2"));
    // y^2-x^2 = (y-x)(y+x); both factors have positive grlex leading coefficient
    CHECK(f.unit == Rat(1));
    CHECK(has_factor(f, parse_bpoly("y-x"), 1));
    CHECK(has_factor(f, parse_bpoly("x+y"), 1));
}

TEST_CASE("factor_bpoly with content and multiplicities") {
    const BPoly p = parse_bpoly("(x^2-1)*(x+y)^2*(y-2*x)");
    auto f = factor_bpoly(p);
    CHECK(has_factor(f, parse_bpoly("x-1"), 1));
    CHECK(has_factor(f, parse_bpoly("x+1"), 1));
    CHECK(has_factor(f, parse_bpoly("x+y"), 2));
    CHECK(has_factor(f, parse_bpoly("y-2*x"), 1));
    CHECK(f.value() == p);

    // y-free and x-free inputs route through the univariate factorizer
    auto fx = factor_bpoly(parse_bpoly("x^2-1"));
    CHECK(fx.factors.size() == 2);
    auto fy = factor_bpoly(parse_bpoly("y^2-1"));
    CHECK(fy.factors.size() == 2);
}

TEST_CASE("reconstruction on random factor products") {
    Rng rng(50);
    const auto pool = bisum::test::denominator_pool();
    std::uniform_int_distribution<size_t> pi(0, pool.size() - 1);
    std::uniform_int_distribution<int> mult(1, 2), sh(-2, 2), extra(0, 3);
    for (int it = 0; it < 25; ++it) {
        BPoly p(Rat(1));
        const int k = 1 + static_cast<int>(it % 3);
        for (int i = 0; i < k; ++i)
            p *= shift(pool[pi(rng)], sh(rng), sh(rng)).pow(static_cast<unsigned>(mult(rng)));
        if (extra(rng) == 0) p *= parse_bpoly("x-3");  // occasional content factor
        auto f = factor_bpoly(p);
        CHECK(f.value() == p);
        for (const auto& [q, e] : f.factors) {
            CHECK(e >= 1);
            CHECK(q.lead_coeff().sign() > 0);
        }
    }
}

TEST_CASE("factorization commutes with shifts") {
    Rng rng(51);
    const auto pool = bisum::test::denominator_pool();
    std::uniform_int_distribution<size_t> pi(0, pool.size() - 1);
    std::uniform_int_distribution<int> sh(-3, 3);
    for (int it = 0; it < 10; ++it) {
        const BPoly p = pool[pi(rng)] * shift(pool[pi(rng)], sh(rng), sh(rng));
        const int m = sh(rng), n = sh(rng);
        auto fp = factor_bpoly(shift(p, m, n));
        auto f = factor_bpoly(p);
        REQUIRE(fp.factors.size() == f.factors.size());
        // shifted factor multisets agree up to ordering
        for (const auto& [q, e] : f.factors) {
            const BPoly qs = int_primitive(shift(q, m, n)).prim;
            CHECK(has_factor(fp, qs, e));
        }
    }
}

TEST_CASE("emitted bivariate factors are irreducible (brute force)") {
    const std::vector<BPoly> inputs = {
        parse_bpoly("(x+y)*(y-2*x)*(x^2+y^2)"),
        parse_bpoly("(x^2+2*x*y+y^2-2)*(x+y+1)"),
        parse_bpoly("(x^3+2*x*y+x*y^2+y^3)*(x+y)"),
    };
    for (const BPoly& p : inputs) {
        auto f = factor_bpoly(p);
        CHECK(f.value() == p);
        for (const auto& [q, e] : f.factors)
            if (q.deg_x_or0() <= 4 && q.deg_y_or0() <= 4) CHECK(brute_force_irreducible(q));
    }
}
