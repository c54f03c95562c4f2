#include "bisum/factor.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace bisum {

std::vector<std::pair<UPoly, int>> squarefree_decomp(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    return squarefree_decomp_poly(p);
}

// ---------------------------------------------------------------------------
// arithmetic in F_p[z], p a small odd prime
// ---------------------------------------------------------------------------
namespace zp {

using Mod = std::uint64_t;
using ZPoly = std::vector<Mod>;  // c[i] mod p, trailing zeros trimmed

inline void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline Mod sub(Mod a, Mod b, Mod p) { return (a + p - b % p) % p; }
inline Mod mul(Mod a, Mod b, Mod p) { return (a * b) % p; }

inline Mod powmod(Mod a, Mod e, Mod p) {
    Mod r = 1;
    a %= p;
    while (e) {
        if (e & 1u) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1u;
    }
    return r;
}
inline Mod inv(Mod a, Mod p) { return powmod(a % p, p - 2, p); }

inline ZPoly psub(const ZPoly& a, const ZPoly& b, Mod p) {
    ZPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = sub(c[i], b[i], p);
    trim(c);
    return c;
}
inline ZPoly pmul(const ZPoly& a, const ZPoly& b, Mod p) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}
inline ZPoly pscale(const ZPoly& a, Mod s, Mod p) {
    ZPoly c = a;
    for (auto& x : c) x = mul(x, s, p);
    trim(c);
    return c;
}

inline void pdivmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r, Mod p) {
    q.clear();
    r = a;
    const int db = deg(b);
    const Mod bi = inv(b.back(), p);
    if (deg(r) >= db) q.assign(static_cast<size_t>(deg(r) - db) + 1, 0);
    while (deg(r) >= db) {
        const int k = deg(r) - db;
        const Mod c = mul(r.back(), bi, p);
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i)
            r[static_cast<size_t>(i + k)] =
                sub(r[static_cast<size_t>(i + k)], mul(b[static_cast<size_t>(i)], c, p), p);
        trim(r);
    }
}
inline ZPoly pmod(const ZPoly& a, const ZPoly& b, Mod p) {
    ZPoly q, r;
    pdivmod(a, b, q, r, p);
    return r;
}
inline ZPoly pgcd(ZPoly a, ZPoly b, Mod p) {
    while (!b.empty()) {
        ZPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = pscale(a, inv(a.back(), p), p);
    return a;
}
inline ZPoly pderiv(const ZPoly& a, Mod p) {
    if (a.size() <= 1) return {};
    ZPoly c(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) c[i - 1] = (a[i] * (i % p)) % p;
    trim(c);
    return c;
}
// x^e mod f
inline ZPoly xpow_mod(Mod e, const ZPoly& f, Mod p) {
    ZPoly r{1}, base{0, 1};
    base = pmod(base, f, p);
    while (e) {
        if (e & 1u) r = pmod(pmul(r, base, p), f, p);
        base = pmod(pmul(base, base, p), f, p);
        e >>= 1u;
    }
    return r;
}

// xgcd: s*a + t*b = g (monic)
inline ZPoly pxgcd(const ZPoly& a, const ZPoly& b, ZPoly& s, ZPoly& t, Mod p) {
    ZPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        ZPoly q, r2;
        pdivmod(r0, r1, q, r2, p);
        ZPoly s2 = psub(s0, pmul(q, s1, p), p);
        ZPoly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    const Mod u = inv(r0.back(), p);
    s = pscale(s0, u, p);
    t = pscale(t0, u, p);
    return pscale(r0, u, p);
}

// Berlekamp factorization of a monic squarefree f over F_p into monic
// irreducibles; deterministic (small p).
std::vector<ZPoly> berlekamp(const ZPoly& f, Mod p) {
    const int n = deg(f);
    if (n == 1) return {f};
    std::vector<ZPoly> rows(static_cast<size_t>(n));
    const ZPoly xp = xpow_mod(p, f, p);
    rows[0] = ZPoly{1};
    for (int i = 1; i < n; ++i)
        rows[static_cast<size_t>(i)] = pmod(pmul(rows[static_cast<size_t>(i - 1)], xp, p), f, p);
    // nullspace of (Q - I)^T where Q rows are x^(p*i) mod f
    std::vector<std::vector<Mod>> M(static_cast<size_t>(n), std::vector<Mod>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const ZPoly& row = rows[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            Mod v = j < static_cast<int>(row.size()) ? row[static_cast<size_t>(j)] : 0;
            if (i == j) v = sub(v, 1, p);
            M[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
        }
    }
    std::vector<int> pivot_col(static_cast<size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pr = -1;
        for (int r = rank; r < n; ++r)
            if (M[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(M[static_cast<size_t>(pr)], M[static_cast<size_t>(rank)]);
        const Mod iv = inv(M[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
        for (int j = 0; j < n; ++j)
            M[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                mul(M[static_cast<size_t>(rank)][static_cast<size_t>(j)], iv, p);
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            const Mod c = M[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                M[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    sub(M[static_cast<size_t>(r)][static_cast<size_t>(j)],
                        mul(c, M[static_cast<size_t>(rank)][static_cast<size_t>(j)], p), p);
        }
        pivot_col[static_cast<size_t>(rank)] = col;
        ++rank;
    }
    std::vector<ZPoly> basis;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int r = 0; r < rank; ++r) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[static_cast<size_t>(col)]) continue;
        ZPoly v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(col)] = 1;
        for (int r = 0; r < rank; ++r) {
            const Mod c = M[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (c != 0) v[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = sub(0, c, p);
        }
        trim(v);
        basis.push_back(std::move(v));
    }
    const size_t nfactors = basis.size();  // the constant vector is one basis element
    std::vector<ZPoly> factors{f};
    if (nfactors == 1) return factors;
    for (const ZPoly& v : basis) {
        if (factors.size() == nfactors) break;
        for (Mod c = 0; c < p && factors.size() < nfactors; ++c) {
            ZPoly vc = v;
            if (vc.empty()) vc.assign(1, 0);
            vc[0] = sub(vc[0], c, p);
            trim(vc);
            if (vc.empty()) continue;
            std::vector<ZPoly> next;
            for (const ZPoly& u : factors) {
                if (deg(u) <= 1) {
                    next.push_back(u);
                    continue;
                }
                ZPoly g = pgcd(u, pmod(vc, u, p), p);
                if (g.empty() || deg(g) == 0 || deg(g) == deg(u)) {
                    next.push_back(u);
                } else {
                    ZPoly q, r;
                    pdivmod(u, g, q, r, p);
                    next.push_back(g);
                    next.push_back(pscale(q, inv(q.back(), p), p));
                }
            }
            factors = std::move(next);
        }
    }
    if (factors.size() != nfactors) throw std::logic_error("berlekamp: splitting incomplete");
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace zp

// ---------------------------------------------------------------------------
// Zassenhaus over Z
// ---------------------------------------------------------------------------
namespace {

struct IPoly {
    std::vector<Int> c;
    int deg() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
};

IPoly to_ipoly(const UPoly& p) {
    IPoly r;
    if (p.is_zero()) return r;
    r.c.resize(static_cast<size_t>(p.deg()) + 1);
    for (int i = 0; i <= p.deg(); ++i) {
        const Rat q = p.coeff(i);
        if (!q.is_integer()) throw std::logic_error("to_ipoly: non-integer coefficient");
        r.c[static_cast<size_t>(i)] = q.num();
    }
    return r;
}

UPoly to_upoly(const IPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.c.size());
    for (const Int& z : p.c) c.emplace_back(z);
    return UPoly::from_coeffs(std::move(c));
}

zp::ZPoly reduce_mod(const IPoly& f, zp::Mod p) {
    zp::ZPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i)
        r[i] = mpz_fdiv_ui(f.c[i].get_mpz_t(), static_cast<unsigned long>(p));
    zp::trim(r);
    return r;
}

// symmetric representative of a mod q in (-q/2, q/2]
Int centered(const Int& a, const Int& q) {
    Int m = a % q;
    if (sgn(m) < 0) m += q;
    if (m * 2 > q) m -= q;
    return m;
}

// smallest prime >= 5 with p not dividing lc(f) and f squarefree mod p
zp::Mod choose_prime(const IPoly& f) {
    auto is_prime = [](unsigned long n) {
        for (unsigned long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return n >= 2;
    };
    for (unsigned long p = 5;; ++p) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(f.c.back().get_mpz_t(), p)) continue;
        zp::ZPoly fp = reduce_mod(f, p);
        if (zp::deg(fp) != f.deg()) continue;
        zp::ZPoly g = zp::pgcd(fp, zp::pderiv(fp, p), p);
        if (zp::deg(g) == 0) return p;
        if (p > 100000) throw std::logic_error("no suitable prime found");
    }
}

// Mignotte-style bound on coefficients of lc(f)-scaled factors
Int factor_coeff_bound(const IPoly& f) {
    Int s(0);
    for (const Int& c : f.c) s += c * c;
    Int n;
    mpz_sqrt(n.get_mpz_t(), s.get_mpz_t());
    n += 1;
    Int two_n(1);
    mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), static_cast<mp_bitcnt_t>(f.deg() + 1));
    return two_n * n * abs(f.c.back());
}

struct Lifted {
    std::vector<std::vector<Int>> factors;  // monic, coefficients in [0, p^k)
    Int pk;
};

// multifactor linear Hensel lifting of f = lc(f) * prod g_i (mod p)
Lifted hensel_lift(const IPoly& f, const std::vector<zp::ZPoly>& gs, zp::Mod p, const Int& bound) {
    const size_t r = gs.size();
    std::vector<zp::ZPoly> sigma(r);  // inverse of prod_{k!=i} g_k modulo g_i, mod p
    for (size_t i = 0; i < r; ++i) {
        zp::ZPoly prod{1};
        for (size_t k = 0; k < r; ++k)
            if (k != i) prod = zp::pmod(zp::pmul(prod, gs[k], p), gs[i], p);
        zp::ZPoly s, t;
        zp::ZPoly g = zp::pxgcd(prod, gs[i], s, t, p);
        if (zp::deg(g) != 0) throw std::logic_error("hensel: factors not coprime");
        sigma[i] = s;
    }

    std::vector<std::vector<Int>> G(r);
    for (size_t i = 0; i < r; ++i) {
        G[i].resize(gs[i].size());
        for (size_t j = 0; j < gs[i].size(); ++j) G[i][j] = Int(static_cast<unsigned long>(gs[i][j]));
    }
    const Int l = f.c.back();
    Int pk(static_cast<long>(p));
    const Int target = 2 * bound + 1;
    const zp::Mod linv = zp::inv(mpz_fdiv_ui(l.get_mpz_t(), static_cast<unsigned long>(p)), p);

    while (pk < target) {
        const Int pk1 = pk * static_cast<long>(p);
        // full product l * prod G_i mod p^{k+1}
        std::vector<Int> prod{l % pk1};
        for (size_t i = 0; i < r; ++i) {
            std::vector<Int> next(prod.size() + G[i].size() - 1, Int(0));
            for (size_t a = 0; a < prod.size(); ++a) {
                if (sgn(prod[a]) == 0) continue;
                for (size_t b = 0; b < G[i].size(); ++b) next[a + b] = (next[a + b] + prod[a] * G[i][b]) % pk1;
            }
            prod = std::move(next);
        }
        // E = (f - prod)/p^k mod p
        std::vector<Int> e(std::max(prod.size(), f.c.size()), Int(0));
        for (size_t i = 0; i < f.c.size(); ++i) e[i] = f.c[i];
        for (size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
        zp::ZPoly E(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            Int q = e[i] % pk1;
            if (sgn(q) < 0) q += pk1;
            if (!mpz_divisible_p(q.get_mpz_t(), pk.get_mpz_t()))
                throw std::logic_error("hensel: invariant broken");
            const Int d = q / pk;
            E[i] = mpz_fdiv_ui(d.get_mpz_t(), static_cast<unsigned long>(p));
        }
        zp::trim(E);
        const zp::ZPoly Ep = zp::pscale(E, linv, p);
        for (size_t i = 0; i < r; ++i) {
            zp::ZPoly gi(G[i].size());
            for (size_t j = 0; j < G[i].size(); ++j)
                gi[j] = mpz_fdiv_ui(G[i][j].get_mpz_t(), static_cast<unsigned long>(p));
            zp::trim(gi);
            zp::ZPoly di = zp::pmod(zp::pmul(Ep, sigma[i], p), gi, p);
            for (size_t j = 0; j < di.size(); ++j) {
                G[i][j] = (G[i][j] + pk * static_cast<long>(di[j])) % pk1;
                if (sgn(G[i][j]) < 0) G[i][j] += pk1;
            }
        }
        pk = pk1;
    }
    return {std::move(G), pk};
}

std::optional<IPoly> exact_div_int(const IPoly& a, const IPoly& b) {
    auto q = UPoly::exact_div(to_upoly(a), to_upoly(b));
    if (!q) return std::nullopt;
    for (int i = 0; i <= q->deg(); ++i)
        if (!q->coeff(i).is_integer()) return std::nullopt;
    return to_ipoly(*q);
}

// factor a squarefree integer-primitive polynomial with positive lc, deg >= 1
std::vector<UPoly> zassenhaus(const IPoly& f0) {
    if (f0.deg() == 1) return {to_upoly(f0)};
    const zp::Mod p = choose_prime(f0);
    zp::ZPoly fp = reduce_mod(f0, p);
    fp = zp::pscale(fp, zp::inv(fp.back(), p), p);
    std::vector<zp::ZPoly> gs = zp::berlekamp(fp, p);
    if (gs.size() == 1) return {to_upoly(f0)};
    const Int bound = factor_coeff_bound(f0);
    Lifted lifted = hensel_lift(f0, gs, p, bound);
    const Int& pk = lifted.pk;

    std::vector<UPoly> out;
    IPoly f = f0;
    std::vector<size_t> idx(gs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;

    auto build_candidate = [&](const std::vector<size_t>& subset) {
        std::vector<Int> prod{f.c.back() % pk};
        for (size_t id : subset) {
            const auto& g = lifted.factors[id];
            std::vector<Int> next(prod.size() + g.size() - 1, Int(0));
            for (size_t a = 0; a < prod.size(); ++a) {
                if (sgn(prod[a]) == 0) continue;
                for (size_t b = 0; b < g.size(); ++b) next[a + b] = (next[a + b] + prod[a] * g[b]) % pk;
            }
            prod = std::move(next);
        }
        IPoly c;
        c.c.resize(prod.size());
        for (size_t i = 0; i < prod.size(); ++i) c.c[i] = centered(prod[i], pk);
        c.trim();
        return c;
    };

    size_t s = 1;
    while (2 * s <= idx.size()) {
        std::vector<size_t> pick(s);
        for (size_t i = 0; i < s; ++i) pick[i] = i;
        bool removed = false;
        while (true) {
            std::vector<size_t> subset;
            subset.reserve(s);
            for (size_t i : pick) subset.push_back(idx[i]);
            IPoly cand = build_candidate(subset);
            if (cand.deg() >= 1) {
                const UIntPrim pp = int_primitive(to_upoly(cand));
                auto q = exact_div_int(f, to_ipoly(pp.prim));
                if (q) {
                    out.push_back(pp.prim);
                    f = *q;
                    std::vector<size_t> rest;
                    for (size_t i = 0, j = 0; i < idx.size(); ++i) {
                        if (j < pick.size() && pick[j] == i) { ++j; continue; }
                        rest.push_back(idx[i]);
                    }
                    idx = std::move(rest);
                    removed = true;
                    break;
                }
            }
            // next size-s combination
            bool advanced = false;
            for (size_t i = s; i-- > 0;) {
                if (pick[i] != i + idx.size() - s) {
                    ++pick[i];
                    for (size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        if (!removed) ++s;
    }
    if (f.deg() >= 1) out.push_back(int_primitive(to_upoly(f)).prim);
    return out;
}

}  // namespace

UFactorization factor_upoly(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("factorization of zero");
    UFactorization out;
    out.unit = Rat(1);
    if (p.deg() == 0) {
        out.unit = p.coeff(0);
        return out;
    }
    for (const auto& [part, mult] : squarefree_decomp(p)) {
        const UIntPrim prim = int_primitive(part);
        for (UPoly& f : zassenhaus(to_ipoly(prim.prim)))
            out.factors.emplace_back(std::move(f), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        const int c = cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    UPoly prod(Rat(1));
    for (const auto& [f, e] : out.factors) prod *= f.pow(static_cast<unsigned>(e));
    const auto q = UPoly::exact_div(p, prod);
    if (!q || q->is_zero() || q->deg() != 0)
        throw std::logic_error("factor_upoly: reconstruction failed");
    out.unit = q->coeff(0);
    return out;
}

UPoly kronecker_image(const BPoly& p, int n) {
    UPoly u;
    for (const auto& [m, c] : p.terms()) u += UPoly::monomial(c, m.first + n * m.second);
    return u;
}

BPoly kronecker_invert(const UPoly& u, int n) {
    BPoly p;
    if (u.is_zero()) return p;
    for (int e = 0; e <= u.deg(); ++e) {
        const Rat c = u.coeff(e);
        if (!c.is_zero()) p.add_term(e % n, e / n, c);
    }
    return p;
}

namespace {

// squarefree split w.r.t. y of a polynomial with trivial Q[x] content
std::vector<std::pair<BPoly, int>> squarefree_decomp_bpoly(const BPoly& p) {
    std::vector<std::pair<BPoly, int>> out;
    BPoly f = int_primitive(p).prim;
    if (f.deg_y_or0() == 0) {
        if (!f.is_constant()) out.emplace_back(f, 1);
        return out;
    }
    const BPoly fp = derivative_y(f);
    BPoly c = gcd_bpoly(f, fp);
    BPoly w = *try_divide(f, c);
    BPoly y = *try_divide(fp, c);
    BPoly z = y - derivative_y(w);
    int i = 1;
    while (!z.is_zero()) {
        BPoly g = gcd_bpoly(w, z);
        if (!g.is_constant()) out.emplace_back(g, i);
        w = *try_divide(w, g);
        y = *try_divide(z, g);
        z = y - derivative_y(w);
        ++i;
    }
    if (!w.is_constant()) out.emplace_back(int_primitive(w).prim, i);
    return out;
}

// factor a squarefree part with trivial Q[x] content and deg_y >= 1
std::vector<BPoly> factor_squarefree_bpoly(const BPoly& s0) {
    BPoly s = s0;
    const int n = 2 * s.deg_x_or0() + 1;
    UFactorization uf = factor_upoly(kronecker_image(s, n));
    std::vector<UPoly> pool;  // univariate irreducibles with repetition
    for (const auto& [f, e] : uf.factors)
        for (int k = 0; k < e; ++k) pool.push_back(f);
    std::sort(pool.begin(), pool.end(), [](const UPoly& a, const UPoly& b) { return cmp(a, b) < 0; });

    std::vector<BPoly> out;
    std::vector<size_t> idx(pool.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;

    size_t k = 1;
    while (2 * k <= idx.size()) {
        std::vector<size_t> pick(k);
        for (size_t i = 0; i < k; ++i) pick[i] = i;
        bool removed = false;
        while (true) {
            UPoly cand(Rat(1));
            for (size_t i : pick) cand *= pool[idx[i]];
            BPoly b = kronecker_invert(cand, n);
            if (b.deg_x_or0() <= s.deg_x_or0() && !b.is_constant() && b.deg_y_or0() >= 1) {
                const BPoly bp = int_primitive(b).prim;
                auto q = try_divide(s, bp);
                if (q) {
                    out.push_back(bp);
                    s = *q;
                    std::vector<size_t> rest;
                    for (size_t i = 0, j = 0; i < idx.size(); ++i) {
                        if (j < pick.size() && pick[j] == i) { ++j; continue; }
                        rest.push_back(idx[i]);
                    }
                    idx = std::move(rest);
                    removed = true;
                    break;
                }
            }
            bool advanced = false;
            for (size_t i = k; i-- > 0;) {
                if (pick[i] != i + idx.size() - k) {
                    ++pick[i];
                    for (size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        if (!removed) ++k;
    }
    if (!s.is_constant()) out.push_back(int_primitive(s).prim);
    return out;
}

}  // namespace

Factorization factor_bpoly(const BPoly& p) {
    if (p.is_zero()) throw std::domain_error("factorization of zero");
    Factorization out;
    out.unit = Rat(1);
    if (p.is_constant()) {
        out.unit = p.coeff(0, 0);
        return out;
    }
    if (p.deg_y_or0() == 0) {
        UFactorization uf = factor_upoly(p.y_view()[0]);
        out.unit = uf.unit;
        for (const auto& [f, e] : uf.factors) out.factors.emplace_back(upoly_to_bpoly_x(f), e);
    } else if (p.deg_x_or0() == 0) {
        UFactorization uf = factor_upoly(p.x_view()[0]);
        out.unit = uf.unit;
        for (const auto& [f, e] : uf.factors) out.factors.emplace_back(upoly_to_bpoly_y(f), e);
    } else {
        const UPoly cont = content_x(p);
        if (cont.deg() > 0) {
            UFactorization cf = factor_upoly(cont);
            for (const auto& [f, e] : cf.factors) out.factors.emplace_back(upoly_to_bpoly_x(f), e);
        }
        auto v = p.y_view();
        if (cont.deg() > 0)
            for (auto& u : v)
                if (!u.is_zero()) u = u / cont;
        const BPoly pp = BPoly::from_y_view(v);
        for (const auto& [part, mult] : squarefree_decomp_bpoly(pp))
            for (BPoly& f : factor_squarefree_bpoly(part))
                out.factors.emplace_back(std::move(f), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        const int c = cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    BPoly prod(Rat(1));
    for (const auto& [f, e] : out.factors) prod *= f.pow(static_cast<unsigned>(e));
    const auto q = try_divide(p, prod);
    if (!q || !q->is_constant() || q->is_zero())
        throw std::logic_error("factor_bpoly: reconstruction failed");
    out.unit = q->coeff(0, 0);
    return out;
}

}  // namespace bisum
