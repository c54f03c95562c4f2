#include "bisum/dispersion.hpp"

#include <algorithm>

#include "bisum/factor.hpp"

namespace bisum {

ShiftSet1D ShiftSet1D::finite(std::vector<Int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return {Kind::Finite, std::move(v)};
}

bool ShiftSet1D::contains(const Int& n) const {
    switch (kind) {
        case Kind::Empty: return false;
        case Kind::All: return true;
        case Kind::Finite: return std::binary_search(values.begin(), values.end(), n);
    }
    return false;
}

bool scalar_of(const Rat& k, Rat& out) {
    out = k;
    return true;
}

bool scalar_of(const PolyFrac& k, Rat& out) {
    if (!k.is_constant()) return false;
    out = k.as_rat();
    return true;
}

ShiftSet1D disp_uni(const BPoly& f, const BPoly& g, Var v) {
    if (v == Var::y) return disp_uni_poly(f.to_fpoly_y(), g.to_fpoly_y());
    return disp_uni_poly(f.to_fpoly_x(), g.to_fpoly_x());
}

DioSol solve_diophantine(const Int& a, const Int& b, const Int& c) {
    if (sgn(a) == 0 && sgn(b) == 0) throw std::domain_error("degenerate equation");
    DioSol s;
    Int g, x0, y0;
    mpz_gcdext(g.get_mpz_t(), x0.get_mpz_t(), y0.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!mpz_divisible_p(c.get_mpz_t(), g.get_mpz_t())) return s;  // no solution
    const Int k = c / g;
    s.solvable = true;
    s.v = x0 * k;
    s.vp = y0 * k;
    s.u = b / g;
    s.up = -(a / g);
    return s;
}

IntegerRoots integer_roots(const UPoly& p) {
    IntegerRoots out;
    if (p.is_zero()) {
        out.all_integers = true;
        return out;
    }
    if (p.deg() == 0) return out;
    const UPoly prim = int_primitive(p).prim;
    // strip t^k
    int low = 0;
    while (prim.coeff(low).is_zero()) ++low;
    std::vector<Int> roots;
    if (low > 0) roots.emplace_back(0);
    std::vector<Rat> cs;
    for (int i = low; i <= prim.deg(); ++i) cs.push_back(prim.coeff(i));
    const UPoly q = UPoly::from_coeffs(std::move(cs));
    if (q.deg() > 0) {
        const Int a0 = q.coeff(0).num();  // integer, nonzero
        // Cauchy-style bound: |root| <= 1 + max |a_i / a_d|
        Int bound(1);
        for (int i = 0; i < q.deg(); ++i) {
            const Int r = abs(q.coeff(i).num()) / abs(q.lc().num()) + 1;
            if (r > bound) bound = r;
        }
        bound += 1;
        const Int abs_a0 = abs(a0);
        std::vector<Int> cands;
        if (abs_a0 <= Int("1000000000000")) {
            Int d(1);
            for (; d * d <= abs_a0; ++d) {
                if (!mpz_divisible_p(abs_a0.get_mpz_t(), d.get_mpz_t())) continue;
                cands.push_back(d);
                cands.push_back(abs_a0 / d);
            }
        } else if (bound <= Int(2000000)) {
            for (Int t(1); t <= bound; ++t) cands.push_back(t);
        } else {
            // complete fallback: integer roots are the roots of linear factors
            for (const auto& [f, e] : factor_upoly(q).factors) {
                if (f.deg() != 1) continue;
                const Rat r = -f.coeff(0) / f.coeff(1);
                if (r.is_integer()) roots.push_back(r.num());
            }
            return IntegerRoots{false, [&] {
                std::sort(roots.begin(), roots.end());
                roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
                return roots;
            }()};
        }
        for (const Int& c : cands) {
            if (c > bound) continue;
            if (eval_int(q, c).is_zero()) roots.push_back(c);
            if (eval_int(q, -c).is_zero()) roots.push_back(-c);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    out.roots = std::move(roots);
    return out;
}

std::vector<UPoly> tshift_system(const BPoly& f, const BPoly& g, const Int& u, const Int& v,
                                 const Int& up, const Int& vp) {
    // E(x,y,t) = f(x,y) - g(x + ut + v, y + u't + v'), coefficients in Q[t]
    const UPoly sx = UPoly::from_coeffs({Rat(v), Rat(u)});    // u t + v
    const UPoly sy = UPoly::from_coeffs({Rat(vp), Rat(up)});  // u' t + v'
    const int dx = g.deg_x_or0(), dy = g.deg_y_or0();
    // powers of the shift amounts
    std::vector<UPoly> px(static_cast<size_t>(dx) + 1), py(static_cast<size_t>(dy) + 1);
    px[0] = UPoly(Rat(1));
    for (int i = 1; i <= dx; ++i) px[static_cast<size_t>(i)] = px[static_cast<size_t>(i - 1)] * sx;
    py[0] = UPoly(Rat(1));
    for (int j = 1; j <= dy; ++j) py[static_cast<size_t>(j)] = py[static_cast<size_t>(j - 1)] * sy;

    std::map<std::pair<int, int>, UPoly> acc;
    auto add = [&acc](int i, int j, const UPoly& c) {
        auto it = acc.find({i, j});
        if (it == acc.end())
            acc[{i, j}] = c;
        else
            it->second += c;
    };
    for (const auto& [m, c] : f.terms()) add(m.first, m.second, UPoly(c));
    // binomial expansion of g(x + sx, y + sy)
    std::vector<std::vector<Int>> binom(static_cast<size_t>(std::max(dx, dy)) + 1);
    for (size_t n = 0; n < binom.size(); ++n) {
        binom[n].resize(n + 1);
        for (size_t k = 0; k <= n; ++k)
            mpz_bin_uiui(binom[n][k].get_mpz_t(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(k));
    }
    for (const auto& [m, c] : g.terms()) {
        const int a = m.first, b = m.second;
        for (int i = 0; i <= a; ++i) {
            const UPoly fx = px[static_cast<size_t>(a - i)] * Rat(binom[static_cast<size_t>(a)][static_cast<size_t>(i)]);
            for (int j = 0; j <= b; ++j) {
                const UPoly fy = py[static_cast<size_t>(b - j)] * Rat(binom[static_cast<size_t>(b)][static_cast<size_t>(j)]);
                add(i, j, fx * fy * -c);
            }
        }
    }
    std::vector<UPoly> sys;
    for (auto& [m, p] : acc)
        if (!p.is_zero()) sys.push_back(std::move(p));
    return sys;
}

namespace {

// canonical form for a line: primitive direction with positive first nonzero
// component, base reduced along the direction
DispLine canonical_line(Int v, Int vp, Int u, Int up) {
    const Int g = gcd_int(u, up);  // gcd(0,0) handled by caller (dir != 0)
    u /= g;
    up /= g;
    if (sgn(u) < 0 || (sgn(u) == 0 && sgn(up) < 0)) {
        u = -u;
        up = -up;
    }
    Int t;
    if (sgn(u) != 0)
        t = floor_div(v, u);
    else
        t = floor_div(vp, up);
    v -= t * u;
    vp -= t * up;
    return {{v, vp}, {u, up}};
}

bool line_contains(const DispLine& L, const Int& m, const Int& n) {
    const Int dm = m - L.base.first, dn = n - L.base.second;
    if (sgn(L.dir.first) != 0) {
        if (!mpz_divisible_p(dm.get_mpz_t(), L.dir.first.get_mpz_t())) return false;
        const Int t = dm / L.dir.first;
        return dn == t * L.dir.second;
    }
    if (sgn(dm) != 0) return false;
    if (!mpz_divisible_p(dn.get_mpz_t(), L.dir.second.get_mpz_t())) return false;
    return true;
}

void finalize(DispSet& d) {
    std::sort(d.lines.begin(), d.lines.end(), [](const DispLine& a, const DispLine& b) {
        if (a.base != b.base) return a.base < b.base;
        return a.dir < b.dir;
    });
    d.lines.erase(std::unique(d.lines.begin(), d.lines.end()), d.lines.end());
    std::vector<std::pair<Int, Int>> pts;
    for (const auto& p : d.points) {
        bool covered = false;
        for (const auto& L : d.lines)
            if (line_contains(L, p.first, p.second)) {
                covered = true;
                break;
            }
        if (!covered) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    d.points = std::move(pts);
}

// leading coefficient in x (as a polynomial in y) and the one below it
UPoly xcoeff(const BPoly& p, int i) {
    auto v = p.x_view();
    if (i < 0 || i >= static_cast<int>(v.size())) return UPoly();
    return v[static_cast<size_t>(i)];
}

}  // namespace

bool DispSet::contains(const Int& m, const Int& n) const {
    if (all_plane) return true;
    for (const auto& p : points)
        if (p.first == m && p.second == n) return true;
    for (const auto& L : lines)
        if (line_contains(L, m, n)) return true;
    return false;
}

DispSet disp_bi(const BPoly& f, const BPoly& g) {
    DispSet out;
    // shifts preserve degrees in both variables
    if (f.is_zero() || g.is_zero()) {
        out.all_plane = f.is_zero() && g.is_zero();
        return out;
    }
    if (f.deg_x() != g.deg_x() || f.deg_y() != g.deg_y()) return out;
    const int d = *f.deg_x();

    if (d == 0) {
        // both free of x: Disp(f,g) = Z x Disp_y(f,g)
        const ShiftSet1D sy = disp_uni(f, g, Var::y);
        switch (sy.kind) {
            case ShiftSet1D::Kind::Empty: return out;
            case ShiftSet1D::Kind::All: out.all_plane = true; return out;
            case ShiftSet1D::Kind::Finite:
                for (const Int& n : sy.values) out.lines.push_back(canonical_line(0, n, 1, 0));
                finalize(out);
                return out;
        }
    }

    const UPoly ad = xcoeff(f, d), bd = xcoeff(g, d);
    if (!ad.is_zero() && ad.deg() > 0) {
        // leading x-coefficient depends on y: finitely many candidate n
        const ShiftSet1D cn = disp_uni_poly(ad, bd);
        if (cn.kind != ShiftSet1D::Kind::Finite) return out;  // empty (All impossible here)
        for (const Int& n0 : cn.values) {
            const BPoly gshift = shift(g, 0, n0);
            const ShiftSet1D sm = disp_uni(f, gshift, Var::x);
            if (sm.kind == ShiftSet1D::Kind::Finite)
                for (const Int& m : sm.values) out.points.emplace_back(m, n0);
        }
        finalize(out);
        return out;
    }

    // constant leading coefficient c
    if (bd.is_zero() || bd.deg() != 0 || !(ad.coeff(0) == bd.coeff(0))) return out;
    const Rat c = ad.coeff(0);
    const UPoly am1 = xcoeff(f, d - 1), bm1 = xcoeff(g, d - 1);
    const int deg_am1 = am1.is_zero() ? 0 : am1.deg();
    const int deg_bm1 = bm1.is_zero() ? 0 : bm1.deg();

    if (deg_am1 > 1) {
        // case 1: n uniquely determined from the second leading coefficient
        if (deg_bm1 != deg_am1) return out;
        const int h = deg_am1;
        if (!(am1.coeff(h) == bm1.coeff(h))) return out;
        const Rat n0r = (am1.coeff(h - 1) - bm1.coeff(h - 1)) / (Rat(h) * bm1.coeff(h));
        if (!n0r.is_integer()) return out;
        const Int n0 = n0r.num();
        const ShiftSet1D sm = disp_uni(f, shift(g, 0, n0), Var::x);
        if (sm.kind == ShiftSet1D::Kind::Finite)
            for (const Int& m : sm.values) out.points.emplace_back(m, n0);
        finalize(out);
        return out;
    }

    if (deg_am1 == 1) {
        // case 2: linear Diophantine equation (d c) m + p1 n = p0 - q0
        if (deg_bm1 != 1 || !(am1.coeff(1) == bm1.coeff(1))) return out;
        const Rat dc = Rat(d) * c, p1 = am1.coeff(1), rhs = am1.coeff(0) - bm1.coeff(0);
        // clear denominators to integers
        const Int den = lcm_int(lcm_int(dc.den(), p1.den()), rhs.den());
        const DioSol sol =
            solve_diophantine(dc.num() * (den / dc.den()), p1.num() * (den / p1.den()),
                              rhs.num() * (den / rhs.den()));
        if (!sol.solvable) return out;
        const auto sys = tshift_system(f, g, sol.u, sol.v, sol.up, sol.vp);
        UPoly gcd_all;
        for (const UPoly& p : sys) gcd_all = gcd_all.is_zero() ? p : gcd_poly(gcd_all, p);
        if (gcd_all.is_zero()) {
            out.lines.push_back(canonical_line(sol.v, sol.vp, sol.u, sol.up));
        } else {
            const IntegerRoots rs = integer_roots(gcd_all);
            if (rs.all_integers) {
                out.lines.push_back(canonical_line(sol.v, sol.vp, sol.u, sol.up));
            } else {
                for (const Int& t : rs.roots)
                    out.points.emplace_back(sol.u * t + sol.v, sol.up * t + sol.vp);
            }
        }
        finalize(out);
        return out;
    }

    // case 3: second leading coefficient constant (or zero)
    if (deg_bm1 > 0) return out;
    // a_{d-1} = d*c*m + b_{d-1}
    const Rat m0r = (am1.coeff(0) - bm1.coeff(0)) / (Rat(d) * c);
    if (!m0r.is_integer()) return out;
    const Int m0 = m0r.num();
    const ShiftSet1D sn = disp_uni(f, shift(g, m0, 0), Var::y);
    switch (sn.kind) {
        case ShiftSet1D::Kind::Empty: break;
        case ShiftSet1D::Kind::All:
            out.lines.push_back(canonical_line(m0, 0, 0, 1));
            break;
        case ShiftSet1D::Kind::Finite:
            for (const Int& n : sn.values) out.points.emplace_back(m0, n);
            break;
    }
    finalize(out);
    return out;
}

Stabilizer stabilizer(const BPoly& d) {
    if (d.is_constant()) throw std::domain_error("stabilizer of a constant");
    if (d.deg_y_or0() < 1) throw std::domain_error("stabilizer requires deg_y >= 1");
    const DispSet D = disp_bi(d, d);
    if (D.all_plane) throw std::logic_error("stabilizer: dispersion claims all of Z^2");
    if (D.lines.empty()) {
        if (!D.is_origin_only())
            throw std::logic_error("stabilizer: finite dispersion set is not {(0,0)}");
        return {};
    }
    if (D.lines.size() > 1 || !D.points.empty())
        throw std::logic_error("stabilizer: unexpected dispersion structure");
    const DispLine& L = D.lines[0];
    if (sgn(L.dir.first) == 0)
        throw std::logic_error("stabilizer: invariance under a pure y-shift");
    if (!(L.base.first == 0 && L.base.second == 0))
        throw std::logic_error("stabilizer: dispersion line misses the origin");
    Stabilizer s;
    s.trivial = false;
    s.t = L.dir.first;   // already normalized positive
    s.l = -L.dir.second;  // (m,n) in Disp(d,d) means sigma_x^m d = sigma_y^{-n} d
    return s;
}

}  // namespace bisum
