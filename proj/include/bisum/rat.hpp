// Exact rational arithmetic over GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bisum {

using Int = mpz_class;

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// floor(a / b), b != 0
inline Int floor_div(const Int& a, const Int& b) {
    if (sgn(b) == 0) throw std::domain_error("floor_div: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline long long to_ll(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("integer out of machine range");
    return static_cast<long long>(a.get_si());
}

// Rational number in lowest terms, denominator > 0, zero is 0/1.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}        // NOLINT: implicit by design
    Rat(const Int& n) : q_(n) {}  // NOLINT
    Rat(const Int& num, const Int& den) : q_(num, den) {
        if (sgn(den) == 0) throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }

    static Rat from_mpq(mpq_class q) {
        Rat r;
        r.q_ = std::move(q);
        return r;
    }

    const mpq_class& raw() const { return q_; }
    Int num() const { return Int(q_.get_num()); }
    Int den() const { return Int(q_.get_den()); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Int floor() const { return floor_div(num(), den()); }

    Rat operator-() const { return from_mpq(mpq_class(-q_)); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return from_mpq(mpq_class(1 / q_));
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return from_mpq(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return from_mpq(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return from_mpq(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return from_mpq(mpq_class(a.q_ / b.q_));
    }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

    Rat pow(unsigned long e) const {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), e);
        return from_mpq(r);  // powers of coprime num/den stay coprime
    }

private:
    mpq_class q_;
};

inline int cmp(const Rat& a, const Rat& b) { return ::cmp(a.raw(), b.raw()); }

}  // namespace bisum
