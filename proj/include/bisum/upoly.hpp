// Dense univariate polynomials over an exact field.
//
// Poly<K> is variable-agnostic; the variable name only matters when printing.
// UPoly = Poly<Rat> carries the univariate Q[x] layer of the tower.
#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bisum/rat.hpp"

namespace bisum {

template <typename K>
class Poly {
public:
    Poly() = default;
    Poly(const K& k) {  // NOLINT: implicit scalar embedding
        if (!(k == K(0))) c_.push_back(k);
    }
    Poly(long n) : Poly(K(n)) {}  // NOLINT

    static Poly var() { return from_coeffs({K(0), K(1)}); }
    static Poly from_coeffs(std::vector<K> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }
    // c * z^e
    static Poly monomial(const K& c, int e) {
        if (c == K(0)) return Poly();
        std::vector<K> v(static_cast<size_t>(e) + 1, K(0));
        v.back() = c;
        return from_coeffs(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is "none", never -1
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    int deg() const {
        if (c_.empty()) throw std::domain_error("deg of zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }
    const K& lc() const {
        if (c_.empty()) throw std::domain_error("lc of zero polynomial");
        return c_.back();
    }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    friend Poly operator-(const Poly& p) {
        Poly r = p;
        for (auto& k : r.c_) k = K(0) - k;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return from_coeffs(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == K(0)) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(c));
    }
    friend Poly operator*(const Poly& a, const K& s) {
        Poly r;
        if (s == K(0)) return r;
        r.c_ = a.c_;
        for (auto& k : r.c_) k = k * s;
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const {
        Poly r(K(1)), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base = (e >>= 1u) ? base * base : base;
        }
        return r;
    }

    // Euclidean division; requires b != 0.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("poly division by zero");
        q = Poly();
        r = a;
        const int db = b.deg();
        const K binv = K(1) / b.lc();
        while (!r.is_zero() && r.deg() >= db) {
            const int k = r.deg() - db;
            const K c = r.lc() * binv;
            q += monomial(c, k);
            r -= monomial(c, k) * b;
        }
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }
    static std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> c(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
        return from_coeffs(std::move(c));
    }

    K eval(const K& v) const {
        K r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
        return r;
    }

    // p(z + s) for an integer s, by exact expansion
    Poly shift_int(const Int& s) const {
        if (c_.empty() || sgn(s) == 0) return *this;
        const Poly zs = from_coeffs({K(Rat(s)), K(1)});  // z + s
        Poly r, pw(K(1));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (!(c_[i] == K(0))) r += pw * c_[i];
            if (i + 1 < c_.size()) pw *= zs;
        }
        return r;
    }

    Poly monic() const {
        if (is_zero()) throw std::domain_error("monic of zero polynomial");
        return *this * (K(1) / lc());
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;  // c_[i] is the coefficient of z^i; trailing zeros trimmed
};

using UPoly = Poly<Rat>;

// Euclidean gcd, monic-normalized; gcd(0,0) is an error.
template <typename K>
Poly<K> gcd_poly(Poly<K> a, Poly<K> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of zeros undefined");
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// g = gcd(a,b) monic with s*a + t*b = g.
template <typename K>
Poly<K> xgcd_poly(const Poly<K>& a, const Poly<K>& b, Poly<K>& s, Poly<K>& t) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0(K(1)), s1(K(0)), t0(K(0)), t1(K(1));
    while (!r1.is_zero()) {
        Poly<K> q, r2;
        Poly<K>::divmod(r0, r1, q, r2);
        Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) throw std::domain_error("xgcd of zeros undefined");
    const K inv = K(1) / r0.lc();
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
}

template <typename K>
Poly<K> lcm_poly(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    return ((a * b) / gcd_poly(a, b)).monic();
}

// Yun's squarefree decomposition over a field of characteristic zero.
// Returns [(part, multiplicity)], parts pairwise coprime and squarefree,
// with input = lc * prod part^mult (parts monic).
template <typename K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomp_poly(const Poly<K>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<Poly<K>, int>> out;
    Poly<K> f = p.monic();
    if (f.deg() == 0) return out;
    Poly<K> fp = f.derivative();
    Poly<K> c = gcd_poly(f, fp);
    Poly<K> w = f / c;
    Poly<K> y = fp / c;
    Poly<K> z = y - w.derivative();
    int i = 1;
    while (!z.is_zero()) {
        Poly<K> g = gcd_poly(w, z);
        if (g.deg() > 0) out.emplace_back(g, i);
        w = w / g;
        y = z / g;
        z = y - w.derivative();
        ++i;
    }
    if (w.deg() > 0) out.emplace_back(w, i);
    return out;
}

// Total order on polynomials: by degree, then coefficients from the top.
// Zero sorts before everything.
template <typename K>
int cmp(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) return 0;
        return a.is_zero() ? -1 : 1;
    }
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (int i = a.deg(); i >= 0; --i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

// --- Q-specific helpers on UPoly ---

struct UIntPrim {
    UPoly prim;  // integer coprime coefficients, positive leading coefficient
    Rat scale;   // input = scale * prim
};

// Integer-primitive representative of a nonzero rational polynomial.
UIntPrim int_primitive(const UPoly& p);

// p(v) for integer v, exact.
Rat eval_int(const UPoly& p, const Int& v);

}  // namespace bisum
