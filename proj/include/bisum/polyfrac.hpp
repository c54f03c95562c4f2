// The rational function field over Q in one variable: reduced fractions of
// UPoly with monic denominator. Serves as coefficient field for Q(x)[y]
// (and, with roles swapped, Q(y)[x]).
#pragma once

#include <stdexcept>
#include <utility>

#include "bisum/upoly.hpp"

namespace bisum {

class PolyFrac {
public:
    PolyFrac() : n_(), d_(UPoly(Rat(1))) {}
    PolyFrac(const Rat& r) : n_(UPoly(r)), d_(UPoly(Rat(1))) {}  // NOLINT
    PolyFrac(long n) : PolyFrac(Rat(n)) {}                       // NOLINT
    PolyFrac(const UPoly& p) : n_(p), d_(UPoly(Rat(1))) {}       // NOLINT
    PolyFrac(UPoly num, UPoly den) : n_(std::move(num)), d_(std::move(den)) { normalize(); }

    const UPoly& num() const { return n_; }
    const UPoly& den() const { return d_; }

    bool is_zero() const { return n_.is_zero(); }
    bool is_constant() const {
        return d_ == UPoly(Rat(1)) && (n_.is_zero() || n_.deg() == 0);
    }
    Rat as_rat() const {
        if (!is_constant()) throw std::domain_error("PolyFrac: not a constant");
        return n_.coeff(0);
    }

    PolyFrac operator-() const {
        PolyFrac r = *this;
        r.n_ = -r.n_;
        return r;
    }
    friend PolyFrac operator+(const PolyFrac& a, const PolyFrac& b) {
        return PolyFrac(a.n_ * b.d_ + b.n_ * a.d_, a.d_ * b.d_);
    }
    friend PolyFrac operator-(const PolyFrac& a, const PolyFrac& b) { return a + (-b); }
    friend PolyFrac operator*(const PolyFrac& a, const PolyFrac& b) {
        return PolyFrac(a.n_ * b.n_, a.d_ * b.d_);
    }
    friend PolyFrac operator/(const PolyFrac& a, const PolyFrac& b) {
        if (b.is_zero()) throw std::domain_error("PolyFrac: division by zero");
        return PolyFrac(a.n_ * b.d_, a.d_ * b.n_);
    }
    PolyFrac& operator+=(const PolyFrac& o) { *this = *this + o; return *this; }
    PolyFrac& operator-=(const PolyFrac& o) { *this = *this - o; return *this; }
    PolyFrac& operator*=(const PolyFrac& o) { *this = *this * o; return *this; }
    PolyFrac& operator/=(const PolyFrac& o) { *this = *this / o; return *this; }

    friend bool operator==(const PolyFrac& a, const PolyFrac& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend bool operator!=(const PolyFrac& a, const PolyFrac& b) { return !(a == b); }

    // substitute var -> var + s in numerator and denominator
    PolyFrac shift_int(const Int& s) const {
        PolyFrac r;
        r.n_ = n_.shift_int(s);
        r.d_ = d_.shift_int(s);
        return r;
    }

private:
    void normalize() {
        if (d_.is_zero()) throw std::domain_error("PolyFrac: zero denominator");
        if (n_.is_zero()) {
            d_ = UPoly(Rat(1));
            return;
        }
        UPoly g = gcd_poly(n_, d_);
        if (g.deg() > 0) {
            n_ = n_ / g;
            d_ = d_ / g;
        }
        const Rat inv = d_.lc().inv();
        n_ = n_ * inv;
        d_ = d_ * inv;  // monic denominator
    }

    UPoly n_, d_;
};

inline int cmp(const PolyFrac& a, const PolyFrac& b) {
    int c = cmp(a.num(), b.num());
    if (c != 0) return c;
    return cmp(a.den(), b.den());
}

// Polynomial in one variable over the rational-function field of another,
// e.g. elements of Q(x)[y].
using FPoly = Poly<PolyFrac>;

// shift the *coefficient* variable by s (e.g. sigma_x on Q(x)[y])
inline FPoly coeff_shift(const FPoly& p, const Int& s) {
    if (p.is_zero() || sgn(s) == 0) return p;
    std::vector<PolyFrac> c;
    c.reserve(static_cast<size_t>(p.deg()) + 1);
    for (int i = 0; i <= p.deg(); ++i) c.push_back(p.coeff(i).shift_int(s));
    return FPoly::from_coeffs(std::move(c));
}

// monic lcm of all coefficient denominators
inline UPoly common_denominator(const FPoly& p) {
    UPoly l(Rat(1));
    if (p.is_zero()) return l;
    for (int i = 0; i <= p.deg(); ++i) {
        const PolyFrac& c = p.coeff(i);
        if (!c.is_zero()) l = lcm_poly(l, c.den());
    }
    return l;
}

}  // namespace bisum
