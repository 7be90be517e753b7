#include "eulerchi/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulerchi {

// ---------------------------------------------------------------------------
// UnivariatePolynomial
// ---------------------------------------------------------------------------

UnivariatePolynomial::UnivariatePolynomial(FieldPtr field, std::vector<CycloElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (c.field() != field_) {
            throw std::invalid_argument("UnivariatePolynomial: coefficient field mismatch");
        }
    }
    trim();
}

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UnivariatePolynomial::check_same_field(const UnivariatePolynomial& o) const {
    if (field_ != o.field_) {
        throw std::invalid_argument("UnivariatePolynomial: ambient fields differ");
    }
}

UnivariatePolynomial UnivariatePolynomial::constant(const CycloElement& c) {
    return UnivariatePolynomial(c.field(), {c});
}

UnivariatePolynomial UnivariatePolynomial::variable(const FieldPtr& field) {
    return monomial(CycloElement::one(field), 1);
}

UnivariatePolynomial UnivariatePolynomial::monomial(const CycloElement& c, unsigned degree) {
    std::vector<CycloElement> v(degree, CycloElement::zero(c.field()));
    v.push_back(c);
    return UnivariatePolynomial(c.field(), std::move(v));
}

CycloElement UnivariatePolynomial::coeff_or_zero(unsigned k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return CycloElement::zero(field_);
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& o) const {
    check_same_field(o);
    std::vector<CycloElement> c;
    const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.push_back(coeff_or_zero(static_cast<unsigned>(i)) +
                    o.coeff_or_zero(static_cast<unsigned>(i)));
    }
    return UnivariatePolynomial(field_, std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::operator-(const UnivariatePolynomial& o) const {
    return *this + (-o);
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
    std::vector<CycloElement> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return UnivariatePolynomial(field_, std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return UnivariatePolynomial(field_);
    std::vector<CycloElement> c(coeffs_.size() + o.coeffs_.size() - 1,
                                CycloElement::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return UnivariatePolynomial(field_, std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const CycloElement& s) const {
    std::vector<CycloElement> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x * s);
    return UnivariatePolynomial(field_, std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const Rational& s) const {
    std::vector<CycloElement> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x * s);
    return UnivariatePolynomial(field_, std::move(c));
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
    *this = *this + o;
    return *this;
}

bool UnivariatePolynomial::operator==(const UnivariatePolynomial& o) const {
    check_same_field(o);
    return coeffs_ == o.coeffs_;
}

CycloElement UnivariatePolynomial::evaluate(const Rational& x) const {
    CycloElement acc = CycloElement::zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::compose_linear(const Rational& a,
                                                          const Rational& b) const {
    // Horner in the linear factor: p(a + b*x).
    UnivariatePolynomial acc(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        std::vector<CycloElement> next(acc.coeffs_.size() + 1, CycloElement::zero(field_));
        for (std::size_t j = 0; j < acc.coeffs_.size(); ++j) {
            next[j] += acc.coeffs_[j] * a;
            next[j + 1] += acc.coeffs_[j] * b;
        }
        UnivariatePolynomial shifted(field_, std::move(next));
        acc = shifted + constant(coeffs_[i]);
    }
    return acc;
}

std::optional<CoeffDiff> first_difference(const UnivariatePolynomial& a,
                                          const UnivariatePolynomial& b) {
    const long top = std::max(a.degree(), b.degree());
    for (long k = 0; k <= top; ++k) {
        const CycloElement av = a.coeff_or_zero(static_cast<unsigned>(k));
        const CycloElement bv = b.coeff_or_zero(static_cast<unsigned>(k));
        if (!(av == bv)) {
            return CoeffDiff{static_cast<unsigned>(k), 0, av, bv};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// BivariatePolynomial
// ---------------------------------------------------------------------------

CycloElement BivariatePolynomial::coeff_or_zero(unsigned i, unsigned j) const {
    if (i < coeff_.size() && j < coeff_[i].size()) return coeff_[i][j];
    return CycloElement::zero(field_);
}

void BivariatePolynomial::add_outer(const UnivariatePolynomial& px,
                                    const UnivariatePolynomial& py, const Rational& scalar) {
    if (px.field() != field_ || py.field() != field_) {
        throw std::invalid_argument("BivariatePolynomial: ambient fields differ");
    }
    if (px.is_zero() || py.is_zero() || scalar.is_zero()) return;
    const std::size_t nx = px.coeffs().size();
    const std::size_t ny = py.coeffs().size();
    // Grow the rectangle as needed.
    const std::size_t rows = std::max(coeff_.size(), nx);
    const std::size_t cols = std::max(coeff_.empty() ? 0 : coeff_[0].size(), ny);
    coeff_.resize(rows);
    for (auto& row : coeff_) {
        row.resize(cols, CycloElement::zero(field_));
    }
    for (std::size_t i = 0; i < nx; ++i) {
        if (px.coeffs()[i].is_zero()) continue;
        const CycloElement xi = px.coeffs()[i] * scalar;
        for (std::size_t j = 0; j < ny; ++j) {
            coeff_[i][j] += xi * py.coeffs()[j];
        }
    }
    trim();
}

void BivariatePolynomial::trim() {
    // Drop all-zero trailing rows, then all-zero trailing columns.
    while (!coeff_.empty()) {
        bool all_zero = true;
        for (const auto& c : coeff_.back()) {
            if (!c.is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (!all_zero) break;
        coeff_.pop_back();
    }
    if (coeff_.empty()) return;
    std::size_t cols = coeff_[0].size();
    while (cols > 0) {
        bool all_zero = true;
        for (const auto& row : coeff_) {
            if (!row[cols - 1].is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (!all_zero) break;
        --cols;
    }
    if (cols == 0) {
        coeff_.clear();
        return;
    }
    for (auto& row : coeff_) row.resize(cols, CycloElement::zero(field_));
}

bool BivariatePolynomial::operator==(const BivariatePolynomial& o) const {
    if (field_ != o.field_) {
        throw std::invalid_argument("BivariatePolynomial: ambient fields differ");
    }
    return coeff_ == o.coeff_;
}

std::optional<CoeffDiff> first_difference(const BivariatePolynomial& a,
                                          const BivariatePolynomial& b) {
    const long xi = std::max(a.x_degree(), b.x_degree());
    const long yj = std::max(a.y_degree(), b.y_degree());
    for (long i = 0; i <= xi; ++i) {
        for (long j = 0; j <= yj; ++j) {
            const CycloElement av = a.coeff_or_zero(static_cast<unsigned>(i),
                                                    static_cast<unsigned>(j));
            const CycloElement bv = b.coeff_or_zero(static_cast<unsigned>(i),
                                                    static_cast<unsigned>(j));
            if (!(av == bv)) {
                return CoeffDiff{static_cast<unsigned>(i), static_cast<unsigned>(j), av, bv};
            }
        }
    }
    return std::nullopt;
}

UnivariatePolynomial BivariatePolynomial::y_constant_slice() const {
    std::vector<CycloElement> c;
    c.reserve(coeff_.size());
    for (const auto& row : coeff_) {
        c.push_back(row.empty() ? CycloElement::zero(field_) : row[0]);
    }
    return UnivariatePolynomial(field_, std::move(c));
}

CycloElement BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
    CycloElement acc = CycloElement::zero(field_);
    for (std::size_t i = coeff_.size(); i-- > 0;) {
        CycloElement row = CycloElement::zero(field_);
        for (std::size_t j = coeff_[i].size(); j-- > 0;) {
            row = row * y + coeff_[i][j];
        }
        acc = acc * x + row;
    }
    return acc;
}

namespace {

void append_term(std::string& out, const CycloElement& c, const std::string& monomial) {
    std::string cs = c.to_string();
    const bool composite = cs.find(' ') != std::string::npos;
    if (composite) cs = "(" + cs + ")";
    if (!out.empty()) {
        if (!composite && cs[0] == '-') {
            out += " - ";
            cs = cs.substr(1);
        } else {
            out += " + ";
        }
    }
    if (monomial.empty()) {
        out += cs;
    } else if (cs == "1") {
        out += monomial;
    } else if (cs == "-1") {
        out += "-" + monomial;
    } else {
        out += cs + "*" + monomial;
    }
}

std::string power_string(const std::string& var, unsigned k) {
    if (k == 0) return "";
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

}  // namespace

std::string UnivariatePolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        append_term(out, coeffs_[i], power_string(var, static_cast<unsigned>(i)));
    }
    return out;
}

std::string BivariatePolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeff_.size(); i-- > 0;) {
        for (std::size_t j = coeff_[i].size(); j-- > 0;) {
            if (coeff_[i][j].is_zero()) continue;
            std::string mono = power_string("x", static_cast<unsigned>(i));
            const std::string ym = power_string("y", static_cast<unsigned>(j));
            if (!mono.empty() && !ym.empty()) mono += "*";
            mono += ym;
            append_term(out, coeff_[i][j], mono);
        }
    }
    return out;
}

}  // namespace eulerchi
