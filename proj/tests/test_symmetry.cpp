#include <doctest.h>

#include "eulerchi/symmetry.hpp"
#include "test_helpers.hpp"

using namespace eulerchi;
using testutil::q;

namespace {

// Largest i+j with a nonzero coefficient; -1 for the zero polynomial.
long total_degree(const BivariatePolynomial& p) {
    long best = -1;
    for (long i = 0; i <= p.x_degree(); ++i) {
        for (long j = 0; j <= p.y_degree(); ++j) {
            if (!p.coeff_or_zero(static_cast<unsigned>(i), static_cast<unsigned>(j)).is_zero()) {
                best = std::max(best, i + j);
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("two-weight side, hand-expanded case") {
    // d=1, m=1, n=1, (w1,w2)=(1,3): both orientations equal 3x + 3y - 1/2.
    const auto chi = character_at(1, 0);
    const auto f = chi.value_field();
    const SymmetryParams params{chi, 1, 3, 1, 1};

    BivariatePolynomial expected(f);
    const auto one = UnivariatePolynomial::constant(CycloElement::one(f));
    expected.add_outer(UnivariatePolynomial::variable(f), one, q(3));
    expected.add_outer(one, UnivariatePolynomial::variable(f), q(3));
    expected.add_outer(one, one, q(-1, 2));

    CHECK(theorem1_side(params, Orientation::left) == expected);
    CHECK(theorem1_side(params, Orientation::right) == expected);
}

TEST_CASE("index zero collapses to the constant term") {
    const auto quad = character_at(3, 1);
    const SymmetryParams params{quad, 3, 5, 2, 0};
    const auto f = quad.value_field();

    for (auto orientation : {Orientation::left, Orientation::right}) {
        const unsigned long u = orientation == Orientation::left ? 3 : 5;
        const auto side = theorem1_side(params, orientation);
        const auto expected = euler_numbers(quad, 2, 0).numbers[0] *
                              power_sum(quad, 0, u * 3 - 1) *
                              euler_numbers(quad, 1, 0).numbers[0];
        BivariatePolynomial want(f);
        want.add_outer(UnivariatePolynomial::constant(expected),
                       UnivariatePolynomial::constant(CycloElement::one(f)), q(1));
        CHECK(side == want);
    }

    // n = 0, m = 1, d = 1, w1 = 1: the power-sum expansion side is exactly 1.
    const auto chi1 = character_at(1, 0);
    BivariatePolynomial one_poly(chi1.value_field());
    one_poly.add_outer(UnivariatePolynomial::constant(CycloElement::one(chi1.value_field())),
                       UnivariatePolynomial::constant(CycloElement::one(chi1.value_field())),
                       q(1));
    CHECK(theorem3_side({chi1, 1, 3, 1, 0}, Orientation::left) == one_poly);

    CHECK(cross_theorem_check({quad, 3, 5, 2, 0}).equal);
}

TEST_CASE("equal weights make the sides syntactically identical") {
    const auto quad = character_at(3, 1);
    const SymmetryParams params{quad, 3, 3, 2, 3};
    CHECK(theorem1_side(params, Orientation::left) == theorem1_side(params, Orientation::right));
    CHECK(theorem3_side(params, Orientation::left) == theorem3_side(params, Orientation::right));
    CHECK(verify_theorem1(params).equal);
    CHECK(verify_theorem3(params).equal);
}

TEST_CASE("swapping weights swaps orientations") {
    const auto chi = character_at(5, 1);
    const SymmetryParams params{chi, 3, 7, 2, 4};
    const SymmetryParams swapped{chi, 7, 3, 2, 4};
    CHECK(theorem1_side(params, Orientation::left) ==
          theorem1_side(swapped, Orientation::right));
    CHECK(theorem3_side(params, Orientation::left) ==
          theorem3_side(swapped, Orientation::right));
}

TEST_CASE("degree bounds") {
    const auto chi = character_at(3, 1);
    for (unsigned n : {0u, 1u, 3u, 5u}) {
        const SymmetryParams params{chi, 3, 5, 2, n};
        for (auto orientation : {Orientation::left, Orientation::right}) {
            const auto t1 = theorem1_side(params, orientation);
            const auto t3 = theorem3_side(params, orientation);
            CHECK(t1.x_degree() <= static_cast<long>(n));
            CHECK(t1.y_degree() <= static_cast<long>(n));
            CHECK(total_degree(t1) <= static_cast<long>(n));
            CHECK(t3.x_degree() <= static_cast<long>(n));
            CHECK(t3.y_degree() <= static_cast<long>(n));
            CHECK(total_degree(t3) <= static_cast<long>(n));
        }
    }
}

TEST_CASE("two-weight symmetry holds on a sample grid") {
    const auto chi1 = character_at(1, 0);
    for (unsigned n = 0; n <= 8; ++n) {
        REQUIRE(verify_theorem1({chi1, 3, 5, 1, n}).equal);
    }
    for (const auto& chi : enumerate_characters(3)) {
        for (unsigned n = 0; n <= 6; ++n) {
            REQUIRE(verify_theorem1({chi, 3, 5, 2, n}).equal);
        }
    }
    // complex character values
    const auto chi5 = character_at(5, 1);
    for (unsigned n = 0; n <= 5; ++n) {
        REQUIRE(verify_theorem1({chi5, 3, 7, 2, n}).equal);
    }
}

TEST_CASE("m = 1 reduces the order-zero factor to plain powers") {
    const auto chi = character_at(1, 0);
    // At m = 1 the second factor of the power-sum side is (w1 y)^{n-k}.
    const auto side = theorem3_side({chi, 3, 5, 1, 2}, Orientation::left);
    // y^2 coefficient row comes only from k = 0: C(2,0) 3^0 5^2 * (3y)^2 * [E_0 summed]
    // with sum_{i<3} (-1)^i E_0 = 1, so coefficient of x^0 y^2 is 25 * 9 = 225.
    CHECK(side.coeff_or_zero(0, 2) ==
          CycloElement::from_rational(chi.value_field(), q(225)));
}

TEST_CASE("y = 0 collapse and its theorem-side specialization") {
    const auto chi1 = character_at(1, 0);
    CHECK(verify_corollary2(chi1, 1, 3, 0).equal);
    CHECK(verify_corollary2(chi1, 1, 3, 1).equal);
    for (unsigned n = 0; n <= 8; ++n) {
        REQUIRE(verify_corollary2(chi1, 3, 5, n).equal);
    }
    for (const auto& chi : enumerate_characters(5)) {
        for (unsigned n = 0; n <= 5; ++n) {
            REQUIRE(verify_corollary2(chi, 3, 7, n).equal);
        }
    }

    // the slice of the two-weight form reproduces the direct build
    const auto quad = character_at(3, 1);
    for (unsigned n = 0; n <= 5; ++n) {
        const SymmetryParams params{quad, 3, 5, 1, n};
        CHECK(theorem1_side(params, Orientation::left).y_constant_slice() ==
              corollary2_side(quad, 3, 5, n, Orientation::left));
        CHECK(theorem1_side(params, Orientation::right).y_constant_slice() ==
              corollary2_side(quad, 3, 5, n, Orientation::right));
    }
}

TEST_CASE("power-sum expansion symmetry holds on a sample grid") {
    const auto chi1 = character_at(1, 0);
    for (unsigned n = 0; n <= 6; ++n) {
        REQUIRE(verify_theorem3({chi1, 3, 5, 1, n}).equal);
    }
    const auto chi5 = character_at(5, 1);
    for (unsigned n = 0; n <= 4; ++n) {
        REQUIRE(verify_theorem3({chi5, 3, 7, 2, n}).equal);
    }
}

TEST_CASE("multiplication identity") {
    const auto chi1 = character_at(1, 0);
    // w1 = w2 = 1: both sides are E_n itself.
    for (unsigned n = 0; n <= 4; ++n) {
        CHECK(multiplication_side(chi1, 1, 1, n, Orientation::left) ==
              euler_polynomial(chi1, 1, n));
        REQUIRE(verify_multiplication_identity(chi1, 1, 1, n).equal);
    }
    for (unsigned n = 0; n <= 8; ++n) {
        REQUIRE(verify_multiplication_identity(chi1, 1, 3, n).equal);
    }
    const auto quad = character_at(3, 1);
    for (unsigned n = 0; n <= 6; ++n) {
        REQUIRE(verify_multiplication_identity(quad, 3, 5, n).equal);
    }
}

TEST_CASE("both expansions of the functional equation agree") {
    const auto chi1 = character_at(1, 0);
    for (unsigned n = 0; n <= 6; ++n) {
        REQUIRE(cross_theorem_check({chi1, 3, 5, 1, n}).equal);
    }
    for (const auto& chi : enumerate_characters(3)) {
        for (unsigned n = 0; n <= 4; ++n) {
            REQUIRE(cross_theorem_check({chi, 3, 9, 2, n}).equal);
        }
    }
}

TEST_CASE("parameter validation") {
    const auto chi = character_at(3, 1);
    CHECK_THROWS_AS(verify_theorem1({chi, 2, 5, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem3({chi, 3, 0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem1({chi, 3, 5, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(verify_corollary2(chi, 3, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_multiplication_identity(chi, 6, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_side({chi, 3, 5, 0, 3}, Orientation::left), std::invalid_argument);
}

TEST_CASE("perturbed builds are detected with a witness") {
    const auto chi1 = character_at(1, 0);

    const auto broken_sign =
        verify_theorem3({chi1, 1, 3, 1, 1}, {Perturbation::drop_alternating_sign, false});
    CHECK_FALSE(broken_sign.equal);
    REQUIRE(broken_sign.witness.has_value());
    CHECK_FALSE((broken_sign.witness->lhs - broken_sign.witness->rhs).is_zero());

    const auto broken_w = verify_theorem1({chi1, 3, 5, 1, 2}, {Perturbation::offset_w, false});
    CHECK_FALSE(broken_w.equal);
    CHECK(broken_w.witness.has_value());

    // note: for some (character, weights, n) a sign-dropped build can
    // coincidentally still balance; this tuple provably does not.
    const auto broken_mult = verify_multiplication_identity(
        chi1, 1, 3, 1, {Perturbation::drop_alternating_sign, false});
    CHECK_FALSE(broken_mult.equal);

    const auto broken_cross =
        cross_theorem_check({chi1, 3, 5, 1, 2}, {Perturbation::offset_w, false});
    CHECK_FALSE(broken_cross.equal);

    // the same tuples verify cleanly without the perturbation
    CHECK(verify_theorem3({chi1, 1, 3, 1, 1}).equal);
    CHECK(verify_theorem1({chi1, 3, 5, 1, 2}).equal);
    CHECK(cross_theorem_check({chi1, 3, 5, 1, 2}).equal);
}

TEST_CASE("point sampling is a preview, the symbolic verdict stands") {
    const auto chi = character_at(3, 1);
    const auto ok = verify_theorem1({chi, 3, 5, 2, 3}, {Perturbation::none, true});
    CHECK(ok.equal);
    REQUIRE(ok.sample_agree.has_value());
    CHECK(*ok.sample_agree);

    const auto bad = verify_theorem1({chi, 3, 5, 2, 3}, {Perturbation::offset_w, true});
    CHECK_FALSE(bad.equal);
    REQUIRE(bad.sample_agree.has_value());
    CHECK_FALSE(*bad.sample_agree);
}

TEST_CASE("report fields carry the parameters") {
    const auto chi = character_at(5, 2);
    const auto r = verify_theorem1({chi, 3, 5, 2, 3});
    CHECK(r.identity == "theorem1");
    CHECK(r.modulus == 5);
    CHECK(r.char_index == 2);
    CHECK(r.w1 == 3);
    CHECK(r.w2 == 5);
    CHECK(r.order == 2);
    CHECK(r.index == 3);
    CHECK(r.equal);
    CHECK_FALSE(r.witness.has_value());
    CHECK_FALSE(r.sample_agree.has_value());
}
