#include <doctest.h>

#include <random>

#include "eulerchi/cyclotomic.hpp"
#include "test_helpers.hpp"

using namespace eulerchi;
using testutil::q;
using testutil::random_cyclo;

namespace {

std::vector<mpz_class> zs(std::initializer_list<long> items) {
    return std::vector<mpz_class>(items.begin(), items.end());
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == zs({-1, 1}));             // x - 1
    CHECK(cyclotomic_polynomial(3) == zs({1, 1, 1}));           // x^2 + x + 1
    CHECK(cyclotomic_polynomial(9) == zs({1, 0, 0, 1, 0, 0, 1}));  // x^6 + x^3 + 1
    CHECK(cyclotomic_polynomial(2) == zs({1, 1}));
    CHECK(cyclotomic_polynomial(4) == zs({1, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == zs({1, 0, -1, 0, 1}));
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);

    // Phi_p = 1 + x + ... + x^{p-1} for primes.
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul}) {
        const auto phi = cyclotomic_polynomial(p);
        REQUIRE(phi.size() == p);
        for (const auto& c : phi) CHECK(c == 1);
    }
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(23) == 22);
    for (unsigned long m : {1ul, 3ul, 5ul, 9ul, 12ul, 15ul, 45ul}) {
        CHECK(cyclotomic_polynomial(m).size() == euler_phi(m) + 1);
    }
}

TEST_CASE("zeta powers reduce canonically") {
    const auto f3 = CycloField::get(3);
    CHECK(zeta_power(f3, 0) == CycloElement::one(f3));
    CHECK(zeta_power(f3, 2).coeffs() == testutil::qvec({{-1, 1}, {-1, 1}}));
    CHECK(zeta_power(f3, 5) == zeta_power(f3, 2));
    CHECK(zeta_power(f3, -1) == zeta_power(f3, 2));

    const auto f4 = CycloField::get(4);
    CHECK(zeta_power(f4, 2) == CycloElement::from_rational(f4, q(-1)));

    // zeta^k * zeta^{e-k} == 1
    for (unsigned long e : {1ul, 2ul, 3ul, 4ul, 5ul, 6ul, 8ul, 12ul}) {
        const auto f = CycloField::get(e);
        for (unsigned long k = 0; k < e; ++k) {
            CHECK(zeta_power(f, static_cast<long long>(k)) *
                      zeta_power(f, static_cast<long long>(e - k)) ==
                  CycloElement::one(f));
        }
    }
}

TEST_CASE("cyclotomic multiplication") {
    const auto f3 = CycloField::get(3);
    const auto z3 = zeta_power(f3, 1);
    CHECK(z3 * z3 == zeta_power(f3, 2));
    CHECK((z3 * z3).coeffs() == testutil::qvec({{-1, 1}, {-1, 1}}));

    const auto f4 = CycloField::get(4);
    const auto z4 = zeta_power(f4, 1);
    CHECK(z4 * z4 == CycloElement::from_rational(f4, q(-1)));

    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        const auto a = random_cyclo(f3, rng);
        CHECK(CycloElement::one(f3) * a == a);
    }
}

TEST_CASE("field mismatch is an error") {
    const auto a = CycloElement::one(CycloField::get(3));
    const auto b = CycloElement::one(CycloField::get(4));
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS((void)(a == b), std::invalid_argument);
}

TEST_CASE("coefficient vectors have length phi(e) and equality is canonical") {
    const auto f9 = CycloField::get(9);
    CHECK(CycloElement::zero(f9).coeffs().size() == 6);
    CHECK_THROWS_AS(CycloElement(f9, testutil::qvec({{1, 1}})), std::invalid_argument);
    CHECK(zeta_power(f9, 9) == CycloElement::one(f9));
}

TEST_CASE("ring axioms hold exactly on random elements") {
    std::mt19937 rng(42);
    for (unsigned long e : {3ul, 4ul, 5ul, 12ul}) {
        const auto f = CycloField::get(e);
        for (int i = 0; i < 15; ++i) {
            const auto a = random_cyclo(f, rng);
            const auto b = random_cyclo(f, rng);
            const auto c = random_cyclo(f, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("rational embedding is a ring homomorphism") {
    std::mt19937 rng(9);
    const auto f = CycloField::get(5);
    for (int i = 0; i < 25; ++i) {
        const auto x = testutil::random_rational(rng);
        const auto y = testutil::random_rational(rng);
        CHECK(CycloElement::from_rational(f, x) + CycloElement::from_rational(f, y) ==
              CycloElement::from_rational(f, x + y));
        CHECK(CycloElement::from_rational(f, x) * CycloElement::from_rational(f, y) ==
              CycloElement::from_rational(f, x * y));
    }
    CHECK(CycloElement::from_rational(f, q(3, 2)).is_rational());
    CHECK(CycloElement::from_rational(f, q(3, 2)).rational_value() == q(3, 2));
    CHECK_FALSE(zeta_power(f, 1).is_rational());
    CHECK_THROWS_AS(zeta_power(f, 1).rational_value(), std::domain_error);
}

TEST_CASE("element powers and rendering") {
    const auto f3 = CycloField::get(3);
    CHECK(zeta_power(f3, 1).pow(3) == CycloElement::one(f3));
    CHECK(zeta_power(f3, 1).pow(0) == CycloElement::one(f3));
    CHECK(zeta_power(f3, 2).to_string() == "-1 - zeta3");
    CHECK(CycloElement::from_rational(f3, q(-3, 2)).to_string() == "-3/2");
}
