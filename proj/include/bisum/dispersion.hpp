// Dispersion sets and shift equivalence of polynomials: the exact set
// {(m,n) : f = sigma_x^m sigma_y^n g}, univariate and bivariate, plus the
// shift-stabilizer generator used by the summability criterion.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bisum/bpoly.hpp"

namespace bisum {

struct ShiftSet1D {
    enum class Kind { Empty, Finite, All };
    Kind kind = Kind::Empty;
    std::vector<Int> values;  // Finite: sorted, duplicate-free

    static ShiftSet1D empty() { return {}; }
    static ShiftSet1D all() { return {Kind::All, {}}; }
    static ShiftSet1D finite(std::vector<Int> v);
    bool contains(const Int& n) const;
};

// extract a rational scalar from a coefficient value when possible
bool scalar_of(const Rat& k, Rat& out);
bool scalar_of(const PolyFrac& k, Rat& out);

// {n : f = sigma^n g} where sigma shifts the main variable of Poly<K>
template <typename K>
ShiftSet1D disp_uni_poly(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero() || g.is_zero()) {
        if (f.is_zero() && g.is_zero()) return ShiftSet1D::all();
        return ShiftSet1D::empty();
    }
    if (f.deg() != g.deg()) return ShiftSet1D::empty();
    const int d = f.deg();
    if (d == 0) return f == g ? ShiftSet1D::all() : ShiftSet1D::empty();
    // match leading coefficients, then the unique candidate from z^(d-1)
    if (!(f.coeff(d) == g.coeff(d))) return ShiftSet1D::empty();
    // f = g(z+n): coeff_{d-1}(f) = coeff_{d-1}(g) + d*n*lc
    const K diff = f.coeff(d - 1) - g.coeff(d - 1);
    const K den = K(Rat(Int(d))) * g.coeff(d);
    const K q = diff / den;
    // the candidate must be an integer scalar
    Rat qr;
    if (!scalar_of(q, qr)) return ShiftSet1D::empty();
    if (!qr.is_integer()) return ShiftSet1D::empty();
    const Int n = qr.num();
    if (f == g.shift_int(n)) return ShiftSet1D::finite({n});
    return ShiftSet1D::empty();
}

enum class Var { x, y };

// dispersion in one variable of bivariate polynomials (coefficients in the
// polynomial ring of the other variable)
ShiftSet1D disp_uni(const BPoly& f, const BPoly& g, Var v);

struct DispLine {
    std::pair<Int, Int> base;  // (v, v')
    std::pair<Int, Int> dir;   // (u, u') != (0,0), primitive, lexicographically positive
    friend bool operator==(const DispLine& a, const DispLine& b) {
        return a.base == b.base && a.dir == b.dir;
    }
};

struct DispSet {
    bool all_plane = false;
    std::vector<std::pair<Int, Int>> points;  // sorted, not on any stored line
    std::vector<DispLine> lines;              // pairwise distinct

    bool empty() const { return !all_plane && points.empty() && lines.empty(); }
    bool contains(const Int& m, const Int& n) const;
    bool is_origin_only() const {
        return !all_plane && lines.empty() && points.size() == 1 &&
               points[0] == std::pair<Int, Int>{0, 0};
    }
};

// exact solution set of a*m + b*n = c over the integers
struct DioSol {
    bool solvable = false;
    Int v, vp;  // particular solution (m, n) = (v, v')
    Int u, up;  // direction: m = u t + v, n = u' t + v'
};
DioSol solve_diophantine(const Int& a, const Int& b, const Int& c);

struct IntegerRoots {
    bool all_integers = false;  // zero polynomial
    std::vector<Int> roots;     // sorted
};
IntegerRoots integer_roots(const UPoly& p);

// coefficient polynomials in t of f(x,y) - g(x + u t + v, y + u' t + v')
std::vector<UPoly> tshift_system(const BPoly& f, const BPoly& g, const Int& u, const Int& v,
                                 const Int& up, const Int& vp);

DispSet disp_bi(const BPoly& f, const BPoly& g);

// shift-stabilizer data of an irreducible d with deg_y(d) >= 1:
// sigma_x^t d = sigma_y^l d with t minimal positive, or trivial
struct Stabilizer {
    bool trivial = true;
    Int t, l;
};
Stabilizer stabilizer(const BPoly& d);

}  // namespace bisum
