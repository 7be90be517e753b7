// Polynomials over CycloElement: univariate (dense ascending, no trailing
// zeros) and bivariate (rectangular coefficient matrix indexed by x-degree
// then y-degree, trailing zero rows/columns trimmed). Equality is canonical
// coefficient-wise comparison; both sides of every verified identity live in
// these types.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerchi/cyclotomic.hpp"
#include "eulerchi/series.hpp"

namespace eulerchi {

class UnivariatePolynomial {
public:
    explicit UnivariatePolynomial(FieldPtr field) : field_(std::move(field)) {}
    UnivariatePolynomial(FieldPtr field, std::vector<CycloElement> coeffs);

    static UnivariatePolynomial constant(const CycloElement& c);
    static UnivariatePolynomial variable(const FieldPtr& field);  // x
    static UnivariatePolynomial monomial(const CycloElement& c, unsigned degree);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 when zero
    const std::vector<CycloElement>& coeffs() const { return coeffs_; }
    CycloElement coeff_or_zero(unsigned k) const;

    UnivariatePolynomial operator+(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator-(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator-() const;
    UnivariatePolynomial operator*(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator*(const CycloElement& s) const;
    UnivariatePolynomial operator*(const Rational& s) const;
    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);

    bool operator==(const UnivariatePolynomial& o) const;

    CycloElement evaluate(const Rational& x) const;

    // p(a + b*x), expanded exactly.
    UnivariatePolynomial compose_linear(const Rational& a, const Rational& b) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    void check_same_field(const UnivariatePolynomial& o) const;

    FieldPtr field_;
    std::vector<CycloElement> coeffs_;  // ascending, canonical
};

inline UnivariatePolynomial poly_compose_linear(const UnivariatePolynomial& p,
                                                const Rational& a, const Rational& b) {
    return p.compose_linear(a, b);
}

// Position and both values of a coefficient where two polynomials differ.
struct CoeffDiff {
    unsigned x_degree;
    unsigned y_degree;  // 0 for univariate comparisons
    CycloElement lhs;
    CycloElement rhs;
};

std::optional<CoeffDiff> first_difference(const UnivariatePolynomial& a,
                                          const UnivariatePolynomial& b);

class BivariatePolynomial {
public:
    explicit BivariatePolynomial(FieldPtr field) : field_(std::move(field)) {}

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return coeff_.empty(); }
    long x_degree() const { return static_cast<long>(coeff_.size()) - 1; }
    long y_degree() const {
        return coeff_.empty() ? -1 : static_cast<long>(coeff_[0].size()) - 1;
    }
    CycloElement coeff_or_zero(unsigned i, unsigned j) const;

    // Accumulate scalar * px(x) * py(y).
    void add_outer(const UnivariatePolynomial& px, const UnivariatePolynomial& py,
                   const Rational& scalar);

    bool operator==(const BivariatePolynomial& o) const;

    // First differing coefficient in (x-degree, y-degree) ascending order.
    friend std::optional<CoeffDiff> first_difference(const BivariatePolynomial& a,
                                                     const BivariatePolynomial& b);

    // Coefficients of y^0, i.e. the polynomial at y = 0 (with 0^0 = 1).
    UnivariatePolynomial y_constant_slice() const;

    CycloElement evaluate(const Rational& x, const Rational& y) const;

    std::string to_string() const;  // descending x-degree, then descending y-degree

private:
    void trim();

    FieldPtr field_;
    std::vector<std::vector<CycloElement>> coeff_;  // [x-degree][y-degree], rectangular
};

std::optional<CoeffDiff> first_difference(const BivariatePolynomial& a,
                                          const BivariatePolynomial& b);

// Series coefficient hooks, so generating functions can carry cyclotomic or
// symbolic-polynomial coefficients.

template <>
struct coeff_ops<CycloElement> {
    static CycloElement zero_like(const CycloElement& c) { return CycloElement::zero(c.field()); }
    static CycloElement one_like(const CycloElement& c) { return CycloElement::one(c.field()); }
    static bool is_zero(const CycloElement& c) { return c.is_zero(); }
    static std::optional<Rational> as_rational(const CycloElement& c) {
        if (!c.is_rational()) return std::nullopt;
        return c.rational_value();
    }
    static CycloElement from_rational_like(const CycloElement& c, const Rational& q) {
        return CycloElement::from_rational(c.field(), q);
    }
    static CycloElement scale(const CycloElement& c, const Rational& q) { return c * q; }
};

template <>
struct coeff_ops<UnivariatePolynomial> {
    static UnivariatePolynomial zero_like(const UnivariatePolynomial& p) {
        return UnivariatePolynomial(p.field());
    }
    static UnivariatePolynomial one_like(const UnivariatePolynomial& p) {
        return UnivariatePolynomial::constant(CycloElement::one(p.field()));
    }
    static bool is_zero(const UnivariatePolynomial& p) { return p.is_zero(); }
    static std::optional<Rational> as_rational(const UnivariatePolynomial& p) {
        if (p.degree() > 0) return std::nullopt;
        if (p.is_zero()) return Rational(0);
        return coeff_ops<CycloElement>::as_rational(p.coeffs()[0]);
    }
    static UnivariatePolynomial from_rational_like(const UnivariatePolynomial& p,
                                                   const Rational& q) {
        return UnivariatePolynomial::constant(CycloElement::from_rational(p.field(), q));
    }
    static UnivariatePolynomial scale(const UnivariatePolynomial& p, const Rational& q) {
        return p * q;
    }
};

}  // namespace eulerchi
