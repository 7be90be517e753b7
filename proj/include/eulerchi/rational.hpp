// Exact rational scalars on top of GMP, plus the factorial/binomial helpers
// used by every EGF-coefficient extraction and binomial convolution.
//
// Invariants: values are always canonical (lowest terms, denominator > 0);
// mpq_class enforces this after an explicit canonicalize() in every
// constructor that takes separate numerator/denominator.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace eulerchi {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integers embed
    explicit Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }

    // Accepts "num" or "num/den", base 10.
    static Rational parse(const std::string& text);

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        return Rational(v_ / o.v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return cmp(v_, o.v_) == 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return cmp(v_, 1) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const {
        if (is_zero()) {
            throw std::domain_error("Rational: inverse of zero");
        }
        return Rational(mpq_class(1 / v_));
    }

    // Integer exponent; negative exponents require a nonzero value.
    Rational pow(long e) const;

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string to_string() const;  // "num/den", "/den" omitted when den == 1

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;  // canonical: gcd(|num|, den) == 1, den > 0
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.to_string();
}

Rational factorial(unsigned long n);
Rational binomial(unsigned long n, unsigned long k);

// base^e as an exact integer-valued rational.
Rational integer_pow(unsigned long base, unsigned long e);

}  // namespace eulerchi
