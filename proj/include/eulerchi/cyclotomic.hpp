// Exact arithmetic in cyclotomic fields Q(zeta_e).
//
// Elements are canonical coefficient vectors of length phi(e) representing
// polynomials in zeta_e reduced mod the e-th cyclotomic polynomial Phi_e.
// Reduction mod Phi_e (rather than mod x^e - 1) keeps the representation a
// field with a unique normal form, so equality of character-valued
// expressions is a plain coefficient comparison.
//
// Fields are interned: CycloField::get(e) returns a shared immutable
// descriptor holding Phi_e and the reduction rows for x^k, degree <= k,
// computed once per process.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eulerchi/rational.hpp"

namespace eulerchi {

unsigned long euler_phi(unsigned long m);

// Phi_m, dense ascending integer coefficients, monic of degree phi(m).
// Computed by exact division of x^m - 1 by the Phi_k of proper divisors k.
std::vector<mpz_class> cyclotomic_polynomial(unsigned long m);

class CycloField;
using FieldPtr = std::shared_ptr<const CycloField>;

class CycloField {
public:
    // Process-wide interning cache; safe for concurrent use.
    static FieldPtr get(unsigned long order);

    unsigned long order() const { return order_; }
    unsigned long degree() const { return degree_; }  // phi(order)
    const std::vector<mpz_class>& modulus_poly() const { return modulus_; }

    // x^k mod Phi_e as a coefficient vector of length degree(),
    // valid for degree() <= k <= max_power().
    const std::vector<Rational>& reduced_power(unsigned long k) const;
    unsigned long max_power() const;

private:
    explicit CycloField(unsigned long order);

    unsigned long order_;
    unsigned long degree_;
    std::vector<mpz_class> modulus_;
    std::vector<std::vector<Rational>> reduced_;  // rows for exponents degree_..max
};

class CycloElement {
public:
    CycloElement(FieldPtr field, std::vector<Rational> coeffs);

    static CycloElement zero(const FieldPtr& field);
    static CycloElement one(const FieldPtr& field);
    static CycloElement from_rational(const FieldPtr& field, const Rational& value);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    CycloElement operator+(const CycloElement& o) const;
    CycloElement operator-(const CycloElement& o) const;
    CycloElement operator-() const;
    CycloElement operator*(const CycloElement& o) const;
    CycloElement operator*(const Rational& s) const;
    CycloElement& operator+=(const CycloElement& o);

    // Equality requires the same ambient field; comparing across fields throws.
    bool operator==(const CycloElement& o) const;

    bool is_zero() const;
    bool is_one() const;

    // True when all zeta-coefficients above the constant vanish.
    bool is_rational() const;
    Rational rational_value() const;  // throws when not rational

    CycloElement pow(unsigned long e) const;

    std::string to_string() const;  // "3/2", "-1 - zeta3", ...

private:
    void check_same_field(const CycloElement& o) const;

    FieldPtr field_;
    std::vector<Rational> coeffs_;  // length == field_->degree()
};

// Canonical representative of zeta_e^k; k may be any integer (reduced mod e).
CycloElement zeta_power(const FieldPtr& field, long long k);

inline std::ostream& operator<<(std::ostream& os, const CycloElement& z) {
    return os << z.to_string();
}

}  // namespace eulerchi
