#include "bisum/bpoly.hpp"

#include <algorithm>

namespace bisum {

std::pair<int, int> BPoly::lead_monomial() const {
    if (t_.empty()) throw std::domain_error("lead_monomial of zero polynomial");
    auto best = t_.begin()->first;
    for (const auto& [m, c] : t_)
        if (grlex_cmp(m, best) > 0) best = m;
    return best;
}

std::vector<UPoly> BPoly::x_view() const {
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(deg_x_or0()) + 1);
    for (const auto& [m, c] : t_) {
        auto& row = rows[static_cast<size_t>(m.first)];
        if (static_cast<int>(row.size()) <= m.second) row.resize(static_cast<size_t>(m.second) + 1, Rat(0));
        row[static_cast<size_t>(m.second)] = c;
    }
    std::vector<UPoly> v;
    v.reserve(rows.size());
    for (auto& r : rows) v.push_back(UPoly::from_coeffs(std::move(r)));
    if (is_zero()) v.assign(1, UPoly());
    return v;
}

std::vector<UPoly> BPoly::y_view() const {
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(deg_y_or0()) + 1);
    for (const auto& [m, c] : t_) {
        auto& row = rows[static_cast<size_t>(m.second)];
        if (static_cast<int>(row.size()) <= m.first) row.resize(static_cast<size_t>(m.first) + 1, Rat(0));
        row[static_cast<size_t>(m.first)] = c;
    }
    std::vector<UPoly> v;
    v.reserve(rows.size());
    for (auto& r : rows) v.push_back(UPoly::from_coeffs(std::move(r)));
    if (is_zero()) v.assign(1, UPoly());
    return v;
}

BPoly BPoly::from_x_view(const std::vector<UPoly>& v) {
    BPoly p;
    for (size_t i = 0; i < v.size(); ++i) {
        const UPoly& u = v[i];
        if (u.is_zero()) continue;
        for (int j = 0; j <= u.deg(); ++j) p.add_term(static_cast<int>(i), j, u.coeff(j));
    }
    return p;
}

BPoly BPoly::from_y_view(const std::vector<UPoly>& v) {
    BPoly p;
    for (size_t j = 0; j < v.size(); ++j) {
        const UPoly& u = v[j];
        if (u.is_zero()) continue;
        for (int i = 0; i <= u.deg(); ++i) p.add_term(i, static_cast<int>(j), u.coeff(i));
    }
    return p;
}

FPoly BPoly::to_fpoly_y() const {
    auto v = y_view();
    std::vector<PolyFrac> c;
    c.reserve(v.size());
    for (auto& u : v) c.emplace_back(u);
    return FPoly::from_coeffs(std::move(c));
}

FPoly BPoly::to_fpoly_x() const {
    auto v = x_view();
    std::vector<PolyFrac> c;
    c.reserve(v.size());
    for (auto& u : v) c.emplace_back(u);
    return FPoly::from_coeffs(std::move(c));
}

BPoly shift(const BPoly& p, const Int& m, const Int& n) {
    if (p.is_zero() || (sgn(m) == 0 && sgn(n) == 0)) return p;
    const int dx = p.deg_x_or0(), dy = p.deg_y_or0();
    // powers of (x+m) and (y+n) as univariate coefficient rows
    std::vector<UPoly> px(static_cast<size_t>(dx) + 1), py(static_cast<size_t>(dy) + 1);
    const UPoly xm = UPoly::from_coeffs({Rat(m), Rat(1)});
    const UPoly yn = UPoly::from_coeffs({Rat(n), Rat(1)});
    px[0] = UPoly(Rat(1));
    for (int i = 1; i <= dx; ++i) px[static_cast<size_t>(i)] = px[static_cast<size_t>(i - 1)] * xm;
    py[0] = UPoly(Rat(1));
    for (int j = 1; j <= dy; ++j) py[static_cast<size_t>(j)] = py[static_cast<size_t>(j - 1)] * yn;
    BPoly r;
    for (const auto& [mono, c] : p.terms()) {
        const UPoly& a = px[static_cast<size_t>(mono.first)];
        const UPoly& b = py[static_cast<size_t>(mono.second)];
        for (int i = 0; i <= a.deg(); ++i) {
            const Rat ai = a.coeff(i);
            if (ai.is_zero()) continue;
            for (int j = 0; j <= b.deg(); ++j) {
                const Rat bj = b.coeff(j);
                if (!bj.is_zero()) r.add_term(i, j, c * ai * bj);
            }
        }
    }
    return r;
}

BPoly derivative_x(const BPoly& p) {
    BPoly r;
    for (const auto& [m, c] : p.terms())
        if (m.first > 0) r.add_term(m.first - 1, m.second, c * Rat(m.first));
    return r;
}

BPoly derivative_y(const BPoly& p) {
    BPoly r;
    for (const auto& [m, c] : p.terms())
        if (m.second > 0) r.add_term(m.first, m.second - 1, c * Rat(m.second));
    return r;
}

BPoly upoly_to_bpoly_x(const UPoly& p) {
    BPoly r;
    if (p.is_zero()) return r;
    for (int i = 0; i <= p.deg(); ++i) r.add_term(i, 0, p.coeff(i));
    return r;
}

BPoly upoly_to_bpoly_y(const UPoly& p) {
    BPoly r;
    if (p.is_zero()) return r;
    for (int j = 0; j <= p.deg(); ++j) r.add_term(0, j, p.coeff(j));
    return r;
}

std::pair<BPoly, UPoly> clear_denominators(const FPoly& f, bool in_y) {
    UPoly den = common_denominator(f);
    BPoly num;
    if (!f.is_zero()) {
        for (int k = 0; k <= f.deg(); ++k) {
            const PolyFrac& c = f.coeff(k);
            if (c.is_zero()) continue;
            const UPoly u = c.num() * (den / c.den());
            for (int i = 0; i <= u.deg(); ++i) {
                if (u.coeff(i).is_zero()) continue;
                if (in_y)
                    num.add_term(i, k, u.coeff(i));
                else
                    num.add_term(k, i, u.coeff(i));
            }
        }
    }
    return {num, den};
}

UPoly content_x(const BPoly& p) {
    if (p.is_zero()) throw std::domain_error("content of zero polynomial");
    auto v = p.y_view();
    UPoly g;
    for (const auto& u : v) {
        if (u.is_zero()) continue;
        g = g.is_zero() ? u : gcd_poly(g, u);
        if (!g.is_zero() && g.deg() == 0) break;
    }
    return g.monic();
}

UIntPrim int_primitive(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("int_primitive of zero polynomial");
    Int l(1), g(0);
    for (int i = 0; i <= p.deg(); ++i)
        if (!p.coeff(i).is_zero()) l = lcm_int(l, p.coeff(i).den());
    for (int i = 0; i <= p.deg(); ++i)
        if (!p.coeff(i).is_zero()) g = gcd_int(g, p.coeff(i).num() * (l / p.coeff(i).den()));
    Rat scale(g, l);
    if (p.lc().sign() < 0) scale = -scale;
    UPoly prim = p * scale.inv();
    return {prim, scale};
}

Rat eval_int(const UPoly& p, const Int& v) {
    Rat r(0);
    const Rat rv((v));
    if (p.is_zero()) return r;
    for (int i = p.deg(); i >= 0; --i) r = r * rv + p.coeff(i);
    return r;
}

BIntPrim int_primitive(const BPoly& p) {
    if (p.is_zero()) throw std::domain_error("int_primitive of zero polynomial");
    Int l(1), g(0);
    for (const auto& [m, c] : p.terms()) l = lcm_int(l, c.den());
    for (const auto& [m, c] : p.terms()) g = gcd_int(g, c.num() * (l / c.den()));
    Rat scale(g, l);
    if (p.lead_coeff().sign() < 0) scale = -scale;
    BPoly prim = p * scale.inv();
    return {prim, scale};
}

namespace {

int degv_of(const std::vector<UPoly>& v) {
    for (size_t i = v.size(); i-- > 0;)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

// pseudo-remainder in the y-view over Q[x]: repeated a <- blc*a - alc*y^k*b
std::vector<UPoly> prem_y(std::vector<UPoly> a, const std::vector<UPoly>& b) {
    const int db = degv_of(b);
    const UPoly blc = b[static_cast<size_t>(db)];
    int da = degv_of(a);
    while (da >= db) {
        const UPoly alc = a[static_cast<size_t>(da)];
        const size_t k = static_cast<size_t>(da - db);
        std::vector<UPoly> res(static_cast<size_t>(da) + 1);
        for (size_t i = 0; i <= static_cast<size_t>(da); ++i) res[i] = a[i] * blc;
        for (size_t i = 0; i <= static_cast<size_t>(db); ++i) {
            if (b[i].is_zero()) continue;
            res[i + k] = res[i + k] - alc * b[i];
        }
        a = std::move(res);
        da = degv_of(a);
    }
    return a;
}

// content (monic gcd over Q[x]) of a y-view vector; zero for the zero vector
UPoly content_of(const std::vector<UPoly>& v) {
    UPoly g;
    for (const auto& u : v) {
        if (u.is_zero()) continue;
        g = g.is_zero() ? u : gcd_poly(g, u);
        if (!g.is_zero() && g.deg() == 0) return UPoly(Rat(1));
    }
    return g.is_zero() ? UPoly() : g.monic();
}

std::vector<UPoly> divide_by_content(const std::vector<UPoly>& v, const UPoly& c) {
    std::vector<UPoly> r = v;
    for (auto& u : r)
        if (!u.is_zero()) u = u / c;
    return r;
}

}  // namespace

BPoly gcd_bpoly(const BPoly& a, const BPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of zeros undefined");
    if (a.is_zero()) return int_primitive(b).prim;
    if (b.is_zero()) return int_primitive(a).prim;

    const int day = a.deg_y_or0(), dby = b.deg_y_or0();
    if (day == 0 && dby == 0) {
        // both live in Q[x]
        auto ax = a.y_view()[0], bx = b.y_view()[0];
        return int_primitive(upoly_to_bpoly_x(gcd_poly(ax, bx))).prim;
    }
    if (day == 0 || dby == 0) {
        const BPoly& yfree = (day == 0) ? a : b;
        const BPoly& other = (day == 0) ? b : a;
        UPoly g = gcd_poly(yfree.y_view()[0], content_x(other));
        return int_primitive(upoly_to_bpoly_x(g)).prim;
    }

    const UPoly ca = content_x(a), cb = content_x(b);
    const UPoly cg = gcd_poly(ca, cb);
    std::vector<UPoly> pa = divide_by_content(a.y_view(), ca);
    std::vector<UPoly> pb = divide_by_content(b.y_view(), cb);
    if (degv_of(pa) < degv_of(pb)) std::swap(pa, pb);

    // primitive PRS on the primitive parts
    while (true) {
        std::vector<UPoly> r = prem_y(pa, pb);
        if (degv_of(r) < 0) break;
        const UPoly cr = content_of(r);
        r = divide_by_content(r, cr);
        pa = std::move(pb);
        pb = std::move(r);
    }
    // primitive-part gcd times content gcd
    BPoly full = BPoly::from_y_view(pb);
    if (cg.deg() > 0) full = full * upoly_to_bpoly_x(cg);
    return int_primitive(full).prim;
}

std::optional<BPoly> try_divide(const BPoly& a, const BPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return BPoly();
    if (b.is_constant()) return a * b.coeff(0, 0).inv();
    if (b.deg_y_or0() == 0) {
        // divide every y-coefficient by b(x)
        const UPoly bx = b.y_view()[0];
        auto v = a.y_view();
        for (auto& u : v) {
            if (u.is_zero()) continue;
            auto q = UPoly::exact_div(u, bx);
            if (!q) return std::nullopt;
            u = *q;
        }
        return BPoly::from_y_view(v);
    }
    // divide in Q(x)[y]; exact over the ring iff the remainder vanishes and
    // the quotient coefficients have trivial denominators
    if (a.deg_y_or0() < b.deg_y_or0()) return std::nullopt;
    FPoly q, r;
    FPoly::divmod(a.to_fpoly_y(), b.to_fpoly_y(), q, r);
    if (!r.is_zero()) return std::nullopt;
    for (int k = 0; k <= q.deg(); ++k)
        if (q.coeff(k).den().deg() > 0) return std::nullopt;
    auto [num, den] = clear_denominators(q, true);
    return num;  // den == 1 since every coefficient denominator was trivial
}

int cmp(const BPoly& a, const BPoly& b) {
    // compare term sequences in graded-lex descending order
    std::vector<std::pair<std::pair<int, int>, Rat>> ta(a.terms().begin(), a.terms().end());
    std::vector<std::pair<std::pair<int, int>, Rat>> tb(b.terms().begin(), b.terms().end());
    auto desc = [](const auto& l, const auto& r) { return grlex_cmp(l.first, r.first) > 0; };
    std::sort(ta.begin(), ta.end(), desc);
    std::sort(tb.begin(), tb.end(), desc);
    const size_t n = std::min(ta.size(), tb.size());
    for (size_t k = 0; k < n; ++k) {
        const int cm = grlex_cmp(ta[k].first, tb[k].first);
        if (cm != 0) return cm;
        const int cc = cmp(ta[k].second, tb[k].second);
        if (cc != 0) return cc;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

RatFunc::RatFunc(BPoly num, BPoly den) {
    if (den.is_zero()) throw std::domain_error("division by zero");
    if (num.is_zero()) {
        num_ = BPoly();
        den_ = BPoly(Rat(1));
        return;
    }
    const BPoly g = gcd_bpoly(num, den);
    if (!g.is_constant()) {
        num = *try_divide(num, g);
        den = *try_divide(den, g);
    }
    const BIntPrim np = int_primitive(num), dp = int_primitive(den);
    const Rat q = np.scale / dp.scale;  // num/den = q * np.prim/dp.prim
    num_ = np.prim * Rat(q.num());
    den_ = dp.prim * Rat(q.den());
}

RatFunc shift(const RatFunc& f, const Int& m, const Int& n) {
    if (f.is_zero()) return f;
    return RatFunc(shift(f.num(), m, n), shift(f.den(), m, n));
}

std::pair<FPoly, FPoly> ratfunc_views(const RatFunc& f, bool in_y) {
    if (in_y) return {f.num().to_fpoly_y(), f.den().to_fpoly_y()};
    return {f.num().to_fpoly_x(), f.den().to_fpoly_x()};
}

RatFunc fpoly_to_ratfunc(const FPoly& p, bool in_y) {
    auto [num, den] = clear_denominators(p, in_y);
    const BPoly d = in_y ? upoly_to_bpoly_x(den) : upoly_to_bpoly_y(den);
    return RatFunc(num, d);
}

}  // namespace bisum
