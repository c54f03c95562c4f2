// Additive decomposition f = Delta_x(g) + Delta_y(h) + r with the residual r
// a sum of proper fractions over shift-inequivalent irreducible denominators:
// partial fractions in y over Q(x), disposal of the polynomial part, and
// orbit-merging telescopes.
#pragma once

#include <utility>
#include <vector>

#include "bisum/dispersion.hpp"
#include "bisum/factor.hpp"

namespace bisum {

struct PfdTerm {
    BPoly d;   // irreducible denominator factor, deg_y >= 1
    int j;     // multiplicity
    FPoly a;   // numerator in Q(x)[y], deg_y(a) < deg_y(d)
};

struct PFD {
    FPoly poly_part;  // element of Q(x)[y]
    std::vector<PfdTerm> terms;
};

// partial fraction decomposition of f in y over Q(x); den_factors must be the
// irreducible factorization of f's denominator. x-only factors are absorbed
// into the coefficient fractions.
PFD pfd_y(const RatFunc& f, const Factorization& den_factors);

// H with Delta_y(H) = P, via the binomial basis
FPoly poly_antidifference_y(const FPoly& P);

// generic partial fractions over a monic squarefree-power basis:
// num/(scalar * prod dm_i^{n_i}) = P + sum a_{i,j}/dm_i^j, deg(a) < deg(dm_i)
struct MonicPfdTerm {
    size_t factor;  // index into the monic factor list
    int j;
    FPoly a;
};
std::pair<FPoly, std::vector<MonicPfdTerm>> pfd_monic(
    const FPoly& num, const PolyFrac& scalar,
    const std::vector<std::pair<FPoly, int>>& monic_factors);

// a / d^j as a rational function (a in Q(x)[y])
RatFunc fraction_value(const FPoly& a, const BPoly& d, int j);

// telescope one fraction onto the orbit representative d_k, where the source
// denominator d_src equals d_k(x+m, y+n)
struct OrbitShifted {
    RatFunc g, h;
    FPoly a;  // relocated numerator sigma_x^{-m} sigma_y^{-n}(a)
};
OrbitShifted orbit_shift(const FPoly& a, const BPoly& d_src, const BPoly& d_k, int j,
                         const Int& m, const Int& n);

struct ResidualGroup {
    BPoly d;                                     // representative denominator
    std::vector<std::pair<int, FPoly>> fractions;  // (j, numerator), j ascending
};

struct ResidualForm {
    RatFunc g_acc, h_acc;
    std::vector<ResidualGroup> groups;  // representatives pairwise not shift equivalent
};

RatFunc residual_value(const ResidualForm& r);

ResidualForm reduce(const RatFunc& f);

}  // namespace bisum
