// Sparse bivariate polynomials over Q and reduced rational functions in
// Q(x,y). Monomial normalization uses graded-lex order with y > x.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bisum/polyfrac.hpp"

namespace bisum {

// graded-lex with y > x on exponent pairs (i = x-exponent, j = y-exponent)
inline int grlex_cmp(std::pair<int, int> a, std::pair<int, int> b) {
    const int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db ? -1 : 1;
    if (a.second != b.second) return a.second < b.second ? -1 : 1;
    return 0;
}

class BPoly {
public:
    using TermMap = std::map<std::pair<int, int>, Rat>;

    BPoly() = default;
    BPoly(const Rat& r) {  // NOLINT
        if (!r.is_zero()) t_[{0, 0}] = r;
    }
    BPoly(long n) : BPoly(Rat(n)) {}  // NOLINT

    static BPoly var_x() { return monomial(Rat(1), 1, 0); }
    static BPoly var_y() { return monomial(Rat(1), 0, 1); }
    static BPoly monomial(const Rat& c, int i, int j) {
        BPoly p;
        if (!c.is_zero()) p.t_[{i, j}] = c;
        return p;
    }

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == std::pair<int, int>{0, 0});
    }
    Rat coeff(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? Rat(0) : it->second;
    }
    std::optional<int> deg_x() const {
        if (t_.empty()) return std::nullopt;
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.first);
        return d;
    }
    std::optional<int> deg_y() const {
        if (t_.empty()) return std::nullopt;
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.second);
        return d;
    }
    int deg_x_or0() const { return deg_x().value_or(0); }
    int deg_y_or0() const { return deg_y().value_or(0); }

    // leading term under graded-lex y > x; polynomial must be nonzero
    std::pair<int, int> lead_monomial() const;
    Rat lead_coeff() const { return t_.at(lead_monomial()); }

    void add_term(int i, int j, const Rat& c) {
        if (c.is_zero()) return;
        auto it = t_.find({i, j});
        if (it == t_.end()) {
            t_[{i, j}] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend BPoly operator-(const BPoly& p) {
        BPoly r = p;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend BPoly operator+(const BPoly& a, const BPoly& b) {
        BPoly r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m.first, m.second, c);
        return r;
    }
    friend BPoly operator-(const BPoly& a, const BPoly& b) { return a + (-b); }
    friend BPoly operator*(const BPoly& a, const BPoly& b) {
        BPoly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_)
                r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
        return r;
    }
    friend BPoly operator*(const BPoly& a, const Rat& s) {
        BPoly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.t_) r.t_[m] = c * s;
        return r;
    }
    BPoly& operator+=(const BPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m.first, m.second, c);
        return *this;
    }
    BPoly& operator-=(const BPoly& o) { return *this += -o; }
    BPoly& operator*=(const BPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const BPoly& a, const BPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BPoly& a, const BPoly& b) { return !(a == b); }

    BPoly pow(unsigned e) const {
        BPoly r(Rat(1)), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return r;
    }

    // x_view()[i] = coefficient of x^i as a polynomial in y (and vice versa)
    std::vector<UPoly> x_view() const;
    std::vector<UPoly> y_view() const;
    static BPoly from_x_view(const std::vector<UPoly>& v);
    static BPoly from_y_view(const std::vector<UPoly>& v);

    // polynomial in y over Q(x), and the transpose
    FPoly to_fpoly_y() const;
    FPoly to_fpoly_x() const;

private:
    TermMap t_;  // no zero coefficients stored
};

// p(x+m, y+n) by exact binomial expansion
BPoly shift(const BPoly& p, const Int& m, const Int& n);

BPoly derivative_x(const BPoly& p);
BPoly derivative_y(const BPoly& p);

// embed a univariate polynomial as a bivariate one
BPoly upoly_to_bpoly_x(const UPoly& p);
BPoly upoly_to_bpoly_y(const UPoly& p);

// clear coefficient denominators: f = (num in Q[x,y]) / (den in Q[x]), den monic.
// `in_y` selects whether f lives in Q(x)[y] (true) or Q(y)[x] (false).
std::pair<BPoly, UPoly> clear_denominators(const FPoly& f, bool in_y = true);

// content of p with respect to the y-view: monic gcd in Q[x] of all
// coefficients of powers of y (requires p != 0)
UPoly content_x(const BPoly& p);

struct BIntPrim {
    BPoly prim;  // integer coprime coefficients, positive graded-lex leading coefficient
    Rat scale;   // input = scale * prim
};
BIntPrim int_primitive(const BPoly& p);

// gcd in Q[x,y] via primitive PRS over Q[x][y]; canonical integer-primitive
// output with positive leading coefficient. Errors when both inputs are zero.
BPoly gcd_bpoly(const BPoly& a, const BPoly& b);

// exact division in Q[x,y]
std::optional<BPoly> try_divide(const BPoly& a, const BPoly& b);

// canonical total order (term sequences in graded-lex descending order)
int cmp(const BPoly& a, const BPoly& b);

// Reduced rational function in Q(x,y): gcd(num,den) = 1, denominator
// integer-primitive with positive leading coefficient, zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& r) : num_(r), den_(Rat(1)) {}  // NOLINT
    RatFunc(long n) : RatFunc(Rat(n)) {}              // NOLINT
    RatFunc(const BPoly& p) : num_(p), den_(Rat(1)) {}  // NOLINT
    RatFunc(BPoly num, BPoly den);

    const BPoly& num() const { return num_; }
    const BPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    BPoly num_, den_;
};

inline RatFunc rf_normalize(const BPoly& num, const BPoly& den) { return RatFunc(num, den); }

RatFunc shift(const RatFunc& f, const Int& m, const Int& n);
inline RatFunc delta_x(const RatFunc& g) { return shift(g, 1, 0) - g; }
inline RatFunc delta_y(const RatFunc& h) { return shift(h, 0, 1) - h; }

// f as an element of Q(x)(y) resp. Q(y)(x): numerator and denominator FPoly
std::pair<FPoly, FPoly> ratfunc_views(const RatFunc& f, bool in_y);

// FPoly (say in Q(x)[y]) as a rational function
RatFunc fpoly_to_ratfunc(const FPoly& p, bool in_y = true);

}  // namespace bisum
