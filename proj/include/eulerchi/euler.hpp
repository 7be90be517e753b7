// Generalized higher-order Euler numbers and polynomials attached to a
// Dirichlet character chi of odd modulus d, alternating character power
// sums, and the associated generating-function identities.
//
// The order-m generating function is
//
//     ( 2 * sum_{a<d} (-1)^a chi(a) e^{at}  /  (e^{dt} + 1) )^m
//
// whose EGF coefficients are the numbers E^{(m)}_{n,chi}. Polynomials come
// from the binomial convolution with powers of x, or equivalently from
// multiplying the generating function by the symbolic e^{xt}; both
// constructions are exposed and must agree exactly.
//
// Number tables are cached per (chi, m) and extended transparently when a
// larger index is requested; the cache is idempotent and thread-safe.

#pragma once

#include "eulerchi/character.hpp"
#include "eulerchi/polynomial.hpp"
#include "eulerchi/series.hpp"

namespace eulerchi {

struct EulerTable {
    DirichletCharacter chi;
    unsigned long order;                 // m
    std::vector<CycloElement> numbers;   // E^{(m)}_{0,chi} .. E^{(m)}_{N,chi}
};

// 2 * sum_{a=0}^{d-1} (-1)^a chi(a) e^{at}, truncated at degree N.
TruncatedSeries<CycloElement> base_numerator_series(const DirichletCharacter& chi, unsigned max_n);

// EGF coefficients of the order-m generating function through index max_n.
EulerTable euler_numbers(const DirichletCharacter& chi, unsigned long order, unsigned max_n);

// Pre-populate the in-memory table cache, e.g. from a persisted copy.
// Ignored unless longer than what is already cached; values must live in
// chi's value field.
void seed_euler_table(const DirichletCharacter& chi, unsigned long order,
                      std::vector<CycloElement> numbers);

// E^{(m)}_{n,chi}(x) = sum_l binom(n,l) E^{(m)}_{l,chi} x^{n-l}.
UnivariatePolynomial euler_polynomial(const DirichletCharacter& chi, unsigned long order,
                                      unsigned n);

// Same polynomial, built instead as EGF coefficient n of the order-m series
// multiplied by the symbolic e^{xt}. Dual construction used as an oracle.
UnivariatePolynomial euler_polynomial_via_series(const DirichletCharacter& chi,
                                                 unsigned long order, unsigned n);

// T_{k,chi}(n) = sum_{l=0}^{n} (-1)^l chi(l) l^k, with 0^0 = 1.
CycloElement power_sum(const DirichletCharacter& chi, unsigned long k, unsigned long long n);

struct Eq4Report {
    unsigned long k;
    unsigned long long n;
    CycloElement lhs;  // E_{k,chi}(n*d) + E_{k,chi}
    CycloElement rhs;  // 2 * T_{k,chi}(n*d - 1)
    bool equal;
};

// Both sides of E_{k,chi}(n*d) + E_{k,chi} = 2 T_{k,chi}(n*d - 1), any n >= 1.
Eq4Report eq4_sides(const DirichletCharacter& chi, unsigned long k, unsigned long long n);

// The identity check proper; requires odd n (the generating-function
// derivation needs it and even n is not asserted).
Eq4Report check_eq4(const DirichletCharacter& chi, unsigned long k, unsigned long long n);

// sum_{i=0}^{w*d-1} chi(i) (-1)^i e^{it}, truncated; EGF coefficient k is
// T_{k,chi}(w*d - 1). Rejects even w.
TruncatedSeries<CycloElement> alternating_character_sum_series(const DirichletCharacter& chi,
                                                               unsigned long w, unsigned max_n);

// The same series assembled as the product
// (sum_{l<w} (-1)^l e^{ldt}) * (sum_{i<d} chi(i) (-1)^i e^{it});
// must agree with the direct form coefficient-wise.
TruncatedSeries<CycloElement> alternating_character_sum_series_product(
    const DirichletCharacter& chi, unsigned long w, unsigned max_n);

}  // namespace eulerchi
