// Shared helpers for the test suites: deterministic random generators for
// rationals, polynomials, and rational functions.
#pragma once

#include <random>
#include <vector>

#include "bisum/bpoly.hpp"
#include "bisum/parse.hpp"

namespace bisum::test {

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, int num_abs = 9, int den_max = 4) {
    std::uniform_int_distribution<int> num(-num_abs, num_abs);
    std::uniform_int_distribution<int> den(1, den_max);
    return Rat(Int(num(rng)), Int(den(rng)));
}

inline Rat random_nonzero_rat(Rng& rng, int num_abs = 9, int den_max = 4) {
    Rat r = random_rat(rng, num_abs, den_max);
    while (r.is_zero()) r = random_rat(rng, num_abs, den_max);
    return r;
}

inline UPoly random_upoly(Rng& rng, int max_deg, int num_abs = 9, bool monic = false) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    const int d = dd(rng);
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (auto& k : c) k = random_rat(rng, num_abs, 1);
    if (monic)
        c.back() = Rat(1);
    else
        while (c.back().is_zero()) c.back() = random_rat(rng, num_abs, 1);
    return UPoly::from_coeffs(std::move(c));
}

inline BPoly random_bpoly(Rng& rng, int max_dx, int max_dy, int num_abs = 6, double density = 0.7) {
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    BPoly p;
    for (int i = 0; i <= max_dx; ++i)
        for (int j = 0; j <= max_dy; ++j)
            if (keep(rng) < density) p.add_term(i, j, random_rat(rng, num_abs, 1));
    return p;
}

inline BPoly random_nonzero_bpoly(Rng& rng, int max_dx, int max_dy, int num_abs = 6) {
    BPoly p = random_bpoly(rng, max_dx, max_dy, num_abs);
    while (p.is_zero()) p = random_bpoly(rng, max_dx, max_dy, num_abs);
    return p;
}

// small irreducible denominators with nontrivial orbits under shifts, plus
// shift-rigid ones; "shifts thereof" are produced by the callers
inline std::vector<BPoly> denominator_pool() {
    return {
        parse_bpoly("x+y"),
        parse_bpoly("y-2*x"),
        parse_bpoly("x^2+2*x*y+y^2-2"),
        parse_bpoly("x^2+y^2"),
    };
}

}  // namespace bisum::test
