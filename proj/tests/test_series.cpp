#include <doctest.h>

#include <random>

#include "eulerchi/polynomial.hpp"
#include "eulerchi/series.hpp"
#include "test_helpers.hpp"

using namespace eulerchi;
using testutil::q;
using testutil::qvec;

namespace {

using QSeries = TruncatedSeries<Rational>;

QSeries exp_t(unsigned n) { return exp_series(Rational(1), n); }

QSeries random_series(std::mt19937& rng, unsigned n) {
    std::vector<Rational> c;
    c.reserve(n + 1);
    // nonzero rational constant term, as inversion requires
    Rational c0 = testutil::random_rational(rng);
    if (c0.is_zero()) c0 = q(1, 2);
    c.push_back(c0);
    for (unsigned k = 1; k <= n; ++k) c.push_back(testutil::random_rational(rng));
    return QSeries(std::move(c));
}

}  // namespace

TEST_CASE("series products") {
    const QSeries a(qvec({{1, 1}, {1, 1}, {0, 1}}));   // 1 + t
    const QSeries b(qvec({{1, 1}, {-1, 1}, {0, 1}}));  // 1 - t
    CHECK((a * b).coeffs() == qvec({{1, 1}, {0, 1}, {-1, 1}}));  // 1 - t^2

    CHECK((exp_t(3) * exp_t(3)).coeffs() == qvec({{1, 1}, {2, 1}, {2, 1}, {4, 3}}));  // e^{2t}

    const auto one = QSeries::constant(q(1), 2);
    CHECK(a * one == a);
}

TEST_CASE("truncation of mixed lengths is the minimum") {
    const QSeries a(qvec({{1, 1}, {1, 1}, {1, 1}, {1, 1}}));
    const QSeries b(qvec({{1, 1}, {2, 1}}));
    CHECK((a * b).truncation() == 1);
    CHECK((a + b).truncation() == 1);
    CHECK_THROWS_AS(a.coeff(4), std::out_of_range);
}

TEST_CASE("series inversion") {
    const QSeries two_plus_t(qvec({{2, 1}, {1, 1}, {0, 1}}));
    CHECK(series_inverse(two_plus_t).coeffs() == qvec({{1, 2}, {-1, 4}, {1, 8}}));

    CHECK(series_inverse(QSeries::constant(q(1), 3)) == QSeries::constant(q(1), 3));

    CHECK(series_inverse(exp_t(3)).coeffs() ==
          qvec({{1, 1}, {-1, 1}, {1, 2}, {-1, 6}}));  // e^{-t}

    CHECK_THROWS_AS(series_inverse(QSeries(qvec({{0, 1}, {1, 1}}))), std::domain_error);

    // cyclotomic constant term: not invertible through the series engine
    const auto f3 = CycloField::get(3);
    TruncatedSeries<CycloElement> zc({zeta_power(f3, 1), CycloElement::one(f3)});
    CHECK_THROWS_AS(series_inverse(zc), std::domain_error);

    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        const auto s = random_series(rng, 8);
        CHECK(s * series_inverse(s) == QSeries::constant(q(1), 8));
    }
}

TEST_CASE("series powers") {
    const QSeries a(qvec({{1, 1}, {1, 1}, {0, 1}}));  // 1 + t
    CHECK(series_pow(a, 0) == QSeries::constant(q(1), 2));
    CHECK(series_pow(a, 2).coeffs() == qvec({{1, 1}, {2, 1}, {1, 1}}));

    std::mt19937 rng(13);
    for (int i = 0; i < 10; ++i) {
        const auto s = random_series(rng, 6);
        auto expected = QSeries::constant(q(1), 6);
        for (unsigned long m = 1; m <= 5; ++m) {
            expected = expected * s;
            CHECK(series_pow(s, m) == expected);
        }
    }
}

TEST_CASE("exponential series") {
    CHECK(exp_series(q(0), 2) == QSeries::constant(q(1), 2));
    CHECK(exp_t(4).coeffs() == qvec({{1, 1}, {1, 1}, {1, 2}, {1, 6}, {1, 24}}));

    std::mt19937 rng(17);
    for (int i = 0; i < 15; ++i) {
        const auto c1 = testutil::random_rational(rng);
        const auto c2 = testutil::random_rational(rng);
        CHECK(exp_series(c1, 7) * exp_series(c2, 7) == exp_series(c1 + c2, 7));
    }
}

TEST_CASE("symbolic exponential with a polynomial coefficient") {
    const auto f1 = CycloField::get(1);
    const auto x = UnivariatePolynomial::variable(f1);
    const auto s = exp_series(x, 2);
    CHECK(s.coeff(0) == UnivariatePolynomial::constant(CycloElement::one(f1)));
    CHECK(s.coeff(1) == x);
    CHECK(s.coeff(2) == x * x * Rational(1, 2));
}

TEST_CASE("EGF coefficient extraction") {
    CHECK(egf_coefficient(exp_t(6), 5) == q(1));

    // 2 / (e^t + 1): classical Euler numbers at odd indices
    std::vector<Rational> den = exp_t(6).coeffs();
    den[0] += q(1);
    const auto euler_gf = QSeries::constant(q(2), 6) * series_inverse(QSeries(den));
    CHECK(egf_coefficient(euler_gf, 1) == q(-1, 2));
    CHECK(egf_coefficient(euler_gf, 3) == q(1, 4));

    CHECK_THROWS_AS(egf_coefficient(euler_gf, 7), std::out_of_range);
}
