#include "eulerchi/rational.hpp"

#include <cctype>

namespace eulerchi {

namespace {

bool valid_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!valid_integer_token(num)) {
        throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    }
    if (slash == std::string::npos) {
        return Rational(mpz_class(num), mpz_class(1));
    }
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(den)) {
        throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    }
    return Rational(mpz_class(num), mpz_class(den));
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(std::move(num), std::move(den));  // already canonical, ctor re-checks cheaply
}

std::string Rational::to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += "/" + v_.get_den().get_str();
    }
    return s;
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational integer_pow(unsigned long base, unsigned long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, e);
    return Rational(p);
}

}  // namespace eulerchi
