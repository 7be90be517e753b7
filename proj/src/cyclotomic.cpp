#include "eulerchi/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace eulerchi {

// ---------------------------------------------------------------------------
// Integer polynomial helpers (dense ascending coefficients)
// ---------------------------------------------------------------------------

namespace {

// Exact division p / q for monic integer q; remainder must be zero.
std::vector<mpz_class> divide_exact(std::vector<mpz_class> p, const std::vector<mpz_class>& q) {
    const std::size_t dq = q.size() - 1;
    if (p.size() < q.size()) {
        throw std::logic_error("divide_exact: degree underflow");
    }
    std::vector<mpz_class> quot(p.size() - dq, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        // q is monic, so the leading coefficient of the remainder is the
        // quotient coefficient directly.
        mpz_class c = p[k + dq];
        if (c == 0) continue;
        quot[k] = c;
        for (std::size_t j = 0; j <= dq; ++j) {
            p[k + j] -= c * q[j];
        }
    }
    for (const auto& r : p) {
        if (r != 0) throw std::logic_error("divide_exact: nonzero remainder");
    }
    return quot;
}

std::mutex cyclo_mutex;
std::map<unsigned long, std::vector<mpz_class>> cyclo_cache;

// Assumes cyclo_mutex is held by the caller.
const std::vector<mpz_class>& cyclotomic_locked(unsigned long m) {
    auto it = cyclo_cache.find(m);
    if (it != cyclo_cache.end()) return it->second;

    // x^m - 1
    std::vector<mpz_class> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (unsigned long k = 1; k < m; ++k) {
        if (m % k == 0) {
            poly = divide_exact(std::move(poly), cyclotomic_locked(k));
        }
    }
    return cyclo_cache.emplace(m, std::move(poly)).first->second;
}

}  // namespace

unsigned long euler_phi(unsigned long m) {
    unsigned long phi = 1;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            phi *= p - 1;
            while (m % p == 0) {
                m /= p;
                phi *= p;
            }
        }
    }
    if (m > 1) phi *= m - 1;
    return phi;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned long m) {
    if (m == 0) {
        throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    }
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclotomic_locked(m);
}

// ---------------------------------------------------------------------------
// CycloField
// ---------------------------------------------------------------------------

CycloField::CycloField(unsigned long order)
    : order_(order), degree_(euler_phi(order)), modulus_(cyclotomic_polynomial(order)) {
    // Rows for x^k, k = degree_ .. max: enough for both products of two
    // reduced elements (2*degree - 2) and zeta powers (order - 1).
    const unsigned long top = std::max(order_ >= 1 ? order_ - 1 : 0, 2 * degree_ - 2);
    if (top < degree_) return;

    // x^degree == -(lower terms of Phi), then shift-and-reduce upward.
    std::vector<Rational> row(degree_);
    for (unsigned long i = 0; i < degree_; ++i) {
        row[i] = -Rational(modulus_[i]);
    }
    reduced_.push_back(row);
    for (unsigned long k = degree_ + 1; k <= top; ++k) {
        std::vector<Rational> next(degree_);
        const Rational lead = row[degree_ - 1];
        // x * row: shift, then fold the overflow through x^degree.
        for (unsigned long i = degree_ - 1; i >= 1; --i) {
            next[i] = row[i - 1] + lead * reduced_[0][i];
        }
        next[0] = lead * reduced_[0][0];
        reduced_.push_back(next);
        row = std::move(next);
    }
}

FieldPtr CycloField::get(unsigned long order) {
    if (order == 0) {
        throw std::invalid_argument("CycloField: order must be positive");
    }
    static std::mutex mu;
    static std::map<unsigned long, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    FieldPtr f(new CycloField(order));
    cache.emplace(order, f);
    return f;
}

const std::vector<Rational>& CycloField::reduced_power(unsigned long k) const {
    if (k < degree_ || k - degree_ >= reduced_.size()) {
        throw std::out_of_range("CycloField: reduced power out of range");
    }
    return reduced_[k - degree_];
}

unsigned long CycloField::max_power() const {
    return degree_ + reduced_.size() - 1;
}

// ---------------------------------------------------------------------------
// CycloElement
// ---------------------------------------------------------------------------

CycloElement::CycloElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) {
        throw std::invalid_argument("CycloElement: null field");
    }
    if (coeffs_.size() != field_->degree()) {
        throw std::invalid_argument("CycloElement: coefficient vector length must equal phi(e)");
    }
}

CycloElement CycloElement::zero(const FieldPtr& field) {
    return CycloElement(field, std::vector<Rational>(field->degree()));
}

CycloElement CycloElement::one(const FieldPtr& field) {
    return from_rational(field, Rational(1));
}

CycloElement CycloElement::from_rational(const FieldPtr& field, const Rational& value) {
    std::vector<Rational> c(field->degree());
    c[0] = value;
    return CycloElement(field, std::move(c));
}

void CycloElement::check_same_field(const CycloElement& o) const {
    if (field_ != o.field_) {
        throw std::invalid_argument("CycloElement: ambient fields differ");
    }
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
    check_same_field(o);
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + o.coeffs_[i];
    return CycloElement(field_, std::move(c));
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
    check_same_field(o);
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] - o.coeffs_[i];
    return CycloElement(field_, std::move(c));
}

CycloElement CycloElement::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return CycloElement(field_, std::move(c));
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
    check_same_field(o);
    const unsigned long deg = field_->degree();
    std::vector<Rational> conv(2 * deg - 1);
    for (unsigned long i = 0; i < deg; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (unsigned long j = 0; j < deg; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            conv[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    std::vector<Rational> c(conv.begin(), conv.begin() + deg);
    for (unsigned long k = deg; k < conv.size(); ++k) {
        if (conv[k].is_zero()) continue;
        const auto& row = field_->reduced_power(k);
        for (unsigned long i = 0; i < deg; ++i) {
            c[i] += conv[k] * row[i];
        }
    }
    return CycloElement(field_, std::move(c));
}

CycloElement CycloElement::operator*(const Rational& s) const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * s;
    return CycloElement(field_, std::move(c));
}

bool CycloElement::operator==(const CycloElement& o) const {
    check_same_field(o);
    return coeffs_ == o.coeffs_;
}

bool CycloElement::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool CycloElement::is_one() const {
    return is_rational() && coeffs_[0].is_one();
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

Rational CycloElement::rational_value() const {
    if (!is_rational()) {
        throw std::domain_error("CycloElement: not a rational element");
    }
    return coeffs_[0];
}

CycloElement CycloElement::pow(unsigned long e) const {
    CycloElement result = one(field_);
    CycloElement base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::string CycloElement::to_string() const {
    if (is_rational()) return coeffs_[0].to_string();
    const std::string zeta = "zeta" + std::to_string(field_->order());
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational a = c.abs();
        if (i == 0) {
            out += a.to_string();
        } else {
            if (!a.is_one()) out += a.to_string() + "*";
            out += zeta;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

CycloElement zeta_power(const FieldPtr& field, long long k) {
    const long long e = static_cast<long long>(field->order());
    unsigned long r = static_cast<unsigned long>(((k % e) + e) % e);
    const unsigned long deg = field->degree();
    if (r < deg) {
        std::vector<Rational> c(deg);
        c[r] = Rational(1);
        return CycloElement(field, std::move(c));
    }
    return CycloElement(field, field->reduced_power(r));
}

}  // namespace eulerchi
