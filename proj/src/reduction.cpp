#include "bisum/reduction.hpp"

#include <algorithm>
#include <map>

namespace bisum {

std::pair<FPoly, std::vector<MonicPfdTerm>> pfd_monic(
    const FPoly& num, const PolyFrac& scalar,
    const std::vector<std::pair<FPoly, int>>& monic_factors) {
    FPoly whole(PolyFrac(Rat(1)));
    for (const auto& [dm, n] : monic_factors) whole *= dm.pow(static_cast<unsigned>(n));
    const FPoly nprime = num * (PolyFrac(Rat(1)) / scalar);

    FPoly poly_part, rem;
    FPoly::divmod(nprime, whole, poly_part, rem);

    std::vector<MonicPfdTerm> terms;
    for (size_t i = 0; i < monic_factors.size(); ++i) {
        const auto& [dm, n] = monic_factors[i];
        const FPoly dmn = dm.pow(static_cast<unsigned>(n));
        FPoly cof(PolyFrac(Rat(1)));
        for (size_t k = 0; k < monic_factors.size(); ++k)
            if (k != i) cof *= monic_factors[k].first.pow(static_cast<unsigned>(monic_factors[k].second));
        // R_i = rem * cof^{-1} mod dm^n
        FPoly s, t;
        const FPoly g = xgcd_poly(cof % dmn, dmn, s, t);
        if (g != FPoly(PolyFrac(Rat(1))))
            throw std::logic_error("pfd: cofactor not invertible");
        FPoly ri = (rem % dmn) * s % dmn;
        // dm-adic expansion: R_i = sum c_k dm^k with deg c_k < deg dm
        for (int k = 0; k < n && !ri.is_zero(); ++k) {
            FPoly q, c;
            FPoly::divmod(ri, dm, q, c);
            if (!c.is_zero()) terms.push_back({i, n - k, c});
            ri = std::move(q);
        }
    }
    return {poly_part, std::move(terms)};
}

PFD pfd_y(const RatFunc& f, const Factorization& den_factors) {
    if (den_factors.value() != f.den()) throw std::domain_error("bad factorization");
    PFD out;
    if (f.is_zero()) return out;

    PolyFrac scalar(den_factors.unit);
    std::vector<std::pair<FPoly, int>> monic;  // y-factors, monic over Q(x)
    std::vector<const BPoly*> orig;
    std::vector<PolyFrac> lcs;
    std::vector<int> mults;
    for (const auto& [d, n] : den_factors.factors) {
        if (d.deg_y_or0() == 0) {
            PolyFrac c(d.y_view()[0]);
            for (int k = 0; k < n; ++k) scalar *= c;
        } else {
            const FPoly dy = d.to_fpoly_y();
            const PolyFrac lc = dy.lc();
            for (int k = 0; k < n; ++k) scalar *= lc;
            monic.emplace_back(dy.monic(), n);
            orig.push_back(&d);
            lcs.push_back(lc);
            mults.push_back(n);
        }
    }

    auto [poly_part, terms] = pfd_monic(f.num().to_fpoly_y(), scalar, monic);
    out.poly_part = std::move(poly_part);
    for (auto& t : terms) {
        // numerator relative to the original (non-monic) irreducible:
        // a/dm^j = a*lc^j / d^j
        FPoly a = t.a;
        for (int k = 0; k < t.j; ++k) a = a * lcs[t.factor];
        out.terms.push_back({*orig[t.factor], t.j, std::move(a)});
    }

    // exactness: poly_part + sum terms == f
    RatFunc check = fpoly_to_ratfunc(out.poly_part);
    for (const auto& t : out.terms) check += fraction_value(t.a, t.d, t.j);
    if (check != f) throw std::logic_error("pfd_y: decomposition does not reproduce the input");
    return out;
}

FPoly poly_antidifference_y(const FPoly& P) {
    FPoly H;
    FPoly q = P;
    FPoly basis = FPoly::var();  // C(y, k+1), starting at C(y,1) = y
    long k = 0;
    while (!q.is_zero()) {
        const PolyFrac ck = q.coeff(0);  // (Delta^k P)(0)
        if (!ck.is_zero()) H += basis * ck;
        q = q.shift_int(1) - q;
        ++k;
        // C(y, k+1) = C(y, k) * (y - k) / (k + 1)
        basis *= FPoly::from_coeffs({PolyFrac(Rat(-k)), PolyFrac(Rat(1))});
        basis = basis * PolyFrac(Rat(Int(1), Int(k + 1)));
    }
    if (H.shift_int(1) - H != P) throw std::logic_error("poly_antidifference_y: identity failed");
    return H;
}

RatFunc fraction_value(const FPoly& a, const BPoly& d, int j) {
    auto [num, den] = clear_denominators(a, true);
    return RatFunc(num, upoly_to_bpoly_x(den) * d.pow(static_cast<unsigned>(j)));
}

OrbitShifted orbit_shift(const FPoly& a, const BPoly& d_src, const BPoly& d_k, int j,
                         const Int& m, const Int& n) {
    if (shift(d_k, m, n) != d_src)
        throw std::domain_error("orbit_shift: denominators not related by the claimed shift");
    const long ml = static_cast<long>(to_ll(m)), nl = static_cast<long>(to_ll(n));
    const BPoly dkj = d_k.pow(static_cast<unsigned>(j));

    const auto sx = [](const FPoly& p, long s) { return coeff_shift(p, Int(s)); };
    const auto sy = [](const FPoly& p, long s) { return p.shift_int(Int(s)); };

    RatFunc g, h;
    if (ml >= 0) {
        for (long l = 0; l < ml; ++l) {
            auto [num, den] = clear_denominators(sx(a, l - ml), true);
            g += RatFunc(num, upoly_to_bpoly_x(den) * shift(dkj, l, n));
        }
    } else {
        for (long l = 0; l < -ml; ++l) {
            auto [num, den] = clear_denominators(sx(a, l), true);
            g -= RatFunc(num, upoly_to_bpoly_x(den) * shift(dkj, ml + l, n));
        }
    }
    const FPoly axm = sx(a, -ml);
    if (nl >= 0) {
        for (long l = 0; l < nl; ++l) {
            auto [num, den] = clear_denominators(sy(axm, l - nl), true);
            h += RatFunc(num, upoly_to_bpoly_x(den) * shift(dkj, 0, l));
        }
    } else {
        for (long l = 0; l < -nl; ++l) {
            auto [num, den] = clear_denominators(sy(axm, l), true);
            h -= RatFunc(num, upoly_to_bpoly_x(den) * shift(dkj, 0, nl + l));
        }
    }
    OrbitShifted out{std::move(g), std::move(h), sy(axm, -nl)};

    const RatFunc lhs = fraction_value(a, d_src, j);
    const RatFunc rhs = delta_x(out.g) + delta_y(out.h) + fraction_value(out.a, d_k, j);
    if (lhs != rhs) throw std::logic_error("orbit_shift: telescoping identity failed");
    return out;
}

RatFunc residual_value(const ResidualForm& r) {
    RatFunc v;
    for (const auto& grp : r.groups)
        for (const auto& [j, a] : grp.fractions) v += fraction_value(a, grp.d, j);
    return v;
}

namespace {

// deterministic member of a nonempty dispersion set
std::pair<Int, Int> pick_member(const DispSet& d) {
    if (d.all_plane) return {0, 0};
    std::vector<std::pair<Int, Int>> cands = d.points;
    for (const auto& L : d.lines) cands.push_back(L.base);
    if (cands.empty()) throw std::logic_error("pick_member: empty dispersion set");
    return *std::min_element(cands.begin(), cands.end());
}

}  // namespace

ResidualForm reduce(const RatFunc& f) {
    ResidualForm out;
    if (f.is_zero()) return out;

    const Factorization fact = factor_bpoly(f.den());
    const PFD pfd = pfd_y(f, fact);
    if (!pfd.poly_part.is_zero())
        out.h_acc += fpoly_to_ratfunc(poly_antidifference_y(pfd.poly_part));

    // partition denominators into shift-equivalence classes
    std::vector<BPoly> dens;
    for (const auto& t : pfd.terms)
        if (std::find(dens.begin(), dens.end(), t.d) == dens.end()) dens.push_back(t.d);
    std::vector<std::vector<BPoly>> classes;
    for (const BPoly& d : dens) {
        bool placed = false;
        for (auto& cls : classes) {
            if (!disp_bi(d, cls.front()).empty()) {
                cls.push_back(d);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({d});
    }
    // representative: least member under the canonical order
    std::vector<BPoly> reps;
    for (auto& cls : classes)
        reps.push_back(*std::min_element(cls.begin(), cls.end(),
                                         [](const BPoly& a, const BPoly& b) { return cmp(a, b) < 0; }));
    auto rep_of = [&](const BPoly& d) -> const BPoly& {
        for (size_t i = 0; i < classes.size(); ++i)
            for (const BPoly& m : classes[i])
                if (m == d) return reps[i];
        throw std::logic_error("reduce: denominator lost");
    };

    // merge fractions onto representatives
    std::map<std::pair<size_t, int>, FPoly> merged;  // (rep index, j) -> numerator
    auto rep_index = [&](const BPoly& r) {
        for (size_t i = 0; i < reps.size(); ++i)
            if (reps[i] == r) return i;
        throw std::logic_error("reduce: representative lost");
    };
    for (const auto& t : pfd.terms) {
        const BPoly& rep = rep_of(t.d);
        const size_t ri = rep_index(rep);
        FPoly add = t.a;
        if (t.d != rep) {
            const DispSet D = disp_bi(t.d, rep);
            if (D.empty()) throw std::logic_error("reduce: class member not equivalent");
            const auto [m, n] = pick_member(D);
            OrbitShifted os = orbit_shift(t.a, t.d, rep, t.j, m, n);
            out.g_acc += os.g;
            out.h_acc += os.h;
            add = std::move(os.a);
        }
        auto it = merged.find({ri, t.j});
        if (it == merged.end())
            merged[{ri, t.j}] = add;
        else
            it->second += add;
    }

    // assemble groups in canonical order, dropping zero numerators
    std::vector<size_t> order(reps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return cmp(reps[a], reps[b]) < 0; });
    for (size_t ri : order) {
        ResidualGroup grp;
        grp.d = reps[ri];
        for (auto& [key, a] : merged) {
            if (key.first != ri || a.is_zero()) continue;
            grp.fractions.emplace_back(key.second, a);
        }
        std::sort(grp.fractions.begin(), grp.fractions.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!grp.fractions.empty()) out.groups.push_back(std::move(grp));
    }

    // always-on exactness check
    const RatFunc rebuilt = delta_x(out.g_acc) + delta_y(out.h_acc) + residual_value(out);
    if (rebuilt != f) throw std::logic_error("reduce: decomposition does not reproduce the input");
    return out;
}

}  // namespace bisum
