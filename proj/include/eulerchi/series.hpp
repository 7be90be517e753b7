// Truncated formal power series in t over an exact coefficient ring.
//
// Storage is ordinary coefficients c_0..c_N (the series is sum c_k t^k);
// EGF values are extracted at the boundary by multiplying with n!. Arithmetic
// carries the truncation min(N_a, N_b), and no coefficient beyond the
// truncation is ever read.
//
// The coefficient ring is generic: Rational, CycloElement, or a univariate
// polynomial over CycloElement (for the symbolic e^{xt}). The coeff_ops
// adapter supplies the handful of ring hooks the series engine needs; in
// particular inversion only demands a nonzero *rational* constant term,
// which is all the generating functions here require.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "eulerchi/rational.hpp"

namespace eulerchi {

template <typename C>
struct coeff_ops;  // specialized per coefficient ring

template <>
struct coeff_ops<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& c) { return c.is_zero(); }
    static std::optional<Rational> as_rational(const Rational& c) { return c; }
    static Rational from_rational_like(const Rational&, const Rational& q) { return q; }
    static Rational scale(const Rational& c, const Rational& q) { return c * q; }
};

template <typename C>
class TruncatedSeries {
public:
    // Truncation is coeffs.size() - 1; the vector must be nonempty.
    explicit TruncatedSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("TruncatedSeries: need at least the constant term");
        }
    }

    static TruncatedSeries constant(const C& value, unsigned truncation) {
        std::vector<C> c;
        c.reserve(truncation + 1);
        c.push_back(value);
        for (unsigned k = 1; k <= truncation; ++k) {
            c.push_back(coeff_ops<C>::zero_like(value));
        }
        return TruncatedSeries(std::move(c));
    }

    unsigned truncation() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    const C& coeff(unsigned k) const {
        if (k >= coeffs_.size()) {
            throw std::out_of_range("TruncatedSeries: coefficient beyond truncation");
        }
        return coeffs_[k];
    }

    const std::vector<C>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        const unsigned n = std::min(truncation(), o.truncation());
        std::vector<C> c;
        c.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) c.push_back(coeffs_[k] + o.coeffs_[k]);
        return TruncatedSeries(std::move(c));
    }

    TruncatedSeries operator-(const TruncatedSeries& o) const {
        const unsigned n = std::min(truncation(), o.truncation());
        std::vector<C> c;
        c.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) c.push_back(coeffs_[k] - o.coeffs_[k]);
        return TruncatedSeries(std::move(c));
    }

    // Cauchy product at truncation min(N_a, N_b).
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        const unsigned n = std::min(truncation(), o.truncation());
        std::vector<C> c;
        c.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            C acc = coeffs_[0] * o.coeffs_[k];
            for (unsigned i = 1; i <= k; ++i) {
                acc = acc + coeffs_[i] * o.coeffs_[k - i];
            }
            c.push_back(std::move(acc));
        }
        return TruncatedSeries(std::move(c));
    }

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<C> coeffs_;
};

template <typename C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
    return a * b;
}

// Multiplicative inverse through the truncation order. Requires a nonzero
// rational constant term; b_n = -(1/c_0) sum_{k=1..n} c_k b_{n-k}.
template <typename C>
TruncatedSeries<C> series_inverse(const TruncatedSeries<C>& a) {
    const C& c0 = a.coeff(0);
    const auto q0 = coeff_ops<C>::as_rational(c0);
    if (!q0) {
        throw std::domain_error("series_inverse: constant term is not rational");
    }
    if (q0->is_zero()) {
        throw std::domain_error("series_inverse: constant term is zero");
    }
    const Rational inv0 = q0->inverse();
    std::vector<C> b;
    b.reserve(a.truncation() + 1);
    b.push_back(coeff_ops<C>::from_rational_like(c0, inv0));
    for (unsigned n = 1; n <= a.truncation(); ++n) {
        C acc = a.coeff(1) * b[n - 1];
        for (unsigned k = 2; k <= n; ++k) {
            acc = acc + a.coeff(k) * b[n - k];
        }
        b.push_back(coeff_ops<C>::scale(acc, -inv0));
    }
    return TruncatedSeries<C>(std::move(b));
}

// a^m by binary powering, re-truncating at every multiply; a^0 = 1.
template <typename C>
TruncatedSeries<C> series_pow(const TruncatedSeries<C>& a, unsigned long m) {
    TruncatedSeries<C> result =
        TruncatedSeries<C>::constant(coeff_ops<C>::one_like(a.coeff(0)), a.truncation());
    TruncatedSeries<C> base = a;
    while (m > 0) {
        if (m & 1) result = result * base;
        base = base * base;
        m >>= 1;
    }
    return result;
}

// e^{ct} = sum_k c^k t^k / k!, truncated.
template <typename C>
TruncatedSeries<C> exp_series(const C& c, unsigned truncation) {
    std::vector<C> out;
    out.reserve(truncation + 1);
    out.push_back(coeff_ops<C>::one_like(c));
    for (unsigned k = 1; k <= truncation; ++k) {
        out.push_back(coeff_ops<C>::scale(out[k - 1] * c, Rational(1, static_cast<long>(k))));
    }
    return TruncatedSeries<C>(std::move(out));
}

// n! * c_n: the EGF coefficient at index n.
template <typename C>
C egf_coefficient(const TruncatedSeries<C>& a, unsigned n) {
    return coeff_ops<C>::scale(a.coeff(n), factorial(n));
}

}  // namespace eulerchi
