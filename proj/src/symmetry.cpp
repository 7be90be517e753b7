#include "eulerchi/symmetry.hpp"

#include <array>
#include <stdexcept>

namespace eulerchi {

namespace {

// Weights in build order: u is the side's own weight (first factor), v the
// opposite one. The right orientation swaps them.
std::pair<unsigned long, unsigned long> oriented(unsigned long w1, unsigned long w2,
                                                 Orientation orientation) {
    return orientation == Orientation::left ? std::pair{w1, w2} : std::pair{w2, w1};
}

Rational upow(unsigned long base, unsigned long e) { return integer_pow(base, e); }

Rational as_rational(unsigned long v) { return Rational(mpz_class(v)); }

// Fixed preview points for sample mode.
const std::array<Rational, 5>& sample_points() {
    static const std::array<Rational, 5> pts = {Rational(0), Rational(1), Rational(-1),
                                                Rational(1, 2), Rational(3, 7)};
    return pts;
}

bool samples_agree(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    for (const auto& x : sample_points()) {
        for (const auto& y : sample_points()) {
            if (!(a.evaluate(x, y) == b.evaluate(x, y))) return false;
        }
    }
    return true;
}

bool samples_agree(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    for (const auto& x : sample_points()) {
        if (!(a.evaluate(x) == b.evaluate(x))) return false;
    }
    return true;
}

VerificationReport make_report(std::string identity, const DirichletCharacter& chi,
                               unsigned long w1, unsigned long w2, unsigned long order,
                               unsigned index) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.modulus = chi.modulus();
    r.char_index = chi.index();
    r.w1 = w1;
    r.w2 = w2;
    r.order = order;
    r.index = index;
    r.equal = false;
    return r;
}

}  // namespace

void validate_symmetry_params(const SymmetryParams& params) {
    if (params.w1 == 0 || params.w1 % 2 == 0 || params.w2 == 0 || params.w2 % 2 == 0) {
        throw std::invalid_argument("symmetry: w1 and w2 must be odd positive integers");
    }
    if (params.order == 0) {
        throw std::invalid_argument("symmetry: order m must be >= 1");
    }
}

BivariatePolynomial theorem1_side(const SymmetryParams& params, Orientation orientation) {
    if (params.order == 0) {
        throw std::invalid_argument("theorem1_side: order m must be >= 1");
    }
    const auto [u, v] = oriented(params.w1, params.w2, orientation);
    const DirichletCharacter& chi = params.chi;
    const unsigned long d = chi.modulus();
    const unsigned n = params.index;
    const unsigned long m = params.order;

    BivariatePolynomial side(chi.value_field());
    for (unsigned j = 0; j <= n; ++j) {
        // E^{(m)}_{n-j}(v x)
        const auto px = euler_polynomial(chi, m, n - j).compose_linear(Rational(0), as_rational(v));

        // sum_k C(j,k) T_{k}(u d - 1) E^{(m-1)}_{j-k}(u y)
        UnivariatePolynomial inner(chi.value_field());
        for (unsigned k = 0; k <= j; ++k) {
            const auto t = power_sum(chi, k, static_cast<unsigned long long>(u) * d - 1);
            if (t.is_zero()) continue;
            const auto py =
                euler_polynomial(chi, m - 1, j - k).compose_linear(Rational(0), as_rational(u));
            inner += (py * t) * binomial(j, k);
        }

        side.add_outer(px, inner, binomial(n, j) * upow(v, j) * upow(u, n - j));
    }
    return side;
}

BivariatePolynomial theorem3_side(const SymmetryParams& params, Orientation orientation,
                                  Perturbation perturbation) {
    if (params.order == 0) {
        throw std::invalid_argument("theorem3_side: order m must be >= 1");
    }
    const auto [u, v] = oriented(params.w1, params.w2, orientation);
    const DirichletCharacter& chi = params.chi;
    const unsigned long d = chi.modulus();
    const unsigned n = params.index;
    const unsigned long m = params.order;
    const bool keep_sign = perturbation != Perturbation::drop_alternating_sign;

    BivariatePolynomial side(chi.value_field());
    for (unsigned k = 0; k <= n; ++k) {
        // E^{(m-1)}_{n-k}(u y)
        const auto py =
            euler_polynomial(chi, m - 1, n - k).compose_linear(Rational(0), as_rational(u));

        // sum_{i < u d} chi(i) (-1)^i E^{(m)}_k(v x + (v/u) i)
        UnivariatePolynomial inner(chi.value_field());
        const auto ek = euler_polynomial(chi, m, k);
        for (unsigned long long i = 0; i < static_cast<unsigned long long>(u) * d; ++i) {
            CycloElement factor = chi(i);
            if (factor.is_zero()) continue;
            if (keep_sign && i % 2 == 1) factor = -factor;
            const Rational shift(mpz_class(static_cast<unsigned long>(v)) *
                                     static_cast<unsigned long>(i),
                                 mpz_class(static_cast<unsigned long>(u)));
            inner += ek.compose_linear(shift, as_rational(v)) * factor;
        }

        side.add_outer(inner, py, binomial(n, k) * upow(u, k) * upow(v, n - k));
    }
    return side;
}

UnivariatePolynomial corollary2_side(const DirichletCharacter& chi, unsigned long w1,
                                     unsigned long w2, unsigned n, Orientation orientation) {
    const auto [u, v] = oriented(w1, w2, orientation);
    const unsigned long d = chi.modulus();

    UnivariatePolynomial side(chi.value_field());
    for (unsigned j = 0; j <= n; ++j) {
        const auto t = power_sum(chi, j, static_cast<unsigned long long>(u) * d - 1);
        if (t.is_zero()) continue;
        const auto px = euler_polynomial(chi, 1, n - j).compose_linear(Rational(0), as_rational(v));
        side += (px * t) * (binomial(n, j) * upow(v, j) * upow(u, n - j));
    }
    return side;
}

UnivariatePolynomial multiplication_side(const DirichletCharacter& chi, unsigned long w1,
                                         unsigned long w2, unsigned n, Orientation orientation,
                                         Perturbation perturbation) {
    const auto [u, v] = oriented(w1, w2, orientation);
    const unsigned long d = chi.modulus();
    const bool keep_sign = perturbation != Perturbation::drop_alternating_sign;

    UnivariatePolynomial side(chi.value_field());
    const auto en = euler_polynomial(chi, 1, n);
    for (unsigned long long i = 0; i < static_cast<unsigned long long>(u) * d; ++i) {
        CycloElement factor = chi(i);
        if (factor.is_zero()) continue;
        if (keep_sign && i % 2 == 1) factor = -factor;
        const Rational shift(mpz_class(static_cast<unsigned long>(v)) *
                                 static_cast<unsigned long>(i),
                             mpz_class(static_cast<unsigned long>(u)));
        side += en.compose_linear(shift, as_rational(v)) * factor;
    }
    return side * upow(u, n);
}

// ---------------------------------------------------------------------------
// Verification entry points
// ---------------------------------------------------------------------------

namespace {

SymmetryParams right_side_params(const SymmetryParams& params, Perturbation perturbation) {
    SymmetryParams p = params;
    if (perturbation == Perturbation::offset_w) {
        p.w1 += 1;  // deliberate off-by-one test hook; skips re-validation
    }
    return p;
}

template <typename Poly>
void finish_report(VerificationReport& report, const Poly& lhs, const Poly& rhs,
                   bool sample_requested) {
    if (sample_requested) {
        report.sample_agree = samples_agree(lhs, rhs);
    }
    const auto diff = first_difference(lhs, rhs);
    report.equal = !diff.has_value();
    report.witness = diff;
}

}  // namespace

VerificationReport verify_theorem1(const SymmetryParams& params, VerifyOptions options) {
    validate_symmetry_params(params);
    auto report = make_report("theorem1", params.chi, params.w1, params.w2, params.order,
                              params.index);
    const auto lhs = theorem1_side(params, Orientation::left);
    const auto rhs =
        theorem1_side(right_side_params(params, options.perturbation), Orientation::right);
    finish_report(report, lhs, rhs, options.sample_points);
    return report;
}

VerificationReport verify_corollary2(const DirichletCharacter& chi, unsigned long w1,
                                     unsigned long w2, unsigned n, VerifyOptions options) {
    const SymmetryParams params{chi, w1, w2, 1, n};
    validate_symmetry_params(params);
    auto report = make_report("corollary2", chi, w1, w2, 0, n);

    const auto lhs = corollary2_side(chi, w1, w2, n, Orientation::left);
    const auto rhs_params = right_side_params(params, options.perturbation);
    const auto rhs = corollary2_side(chi, rhs_params.w1, rhs_params.w2, n, Orientation::right);
    finish_report(report, lhs, rhs, options.sample_points);

    if (report.equal && options.perturbation == Perturbation::none) {
        // The y = 0 slice of the two-weight form at m = 1 must reproduce the
        // directly-built sides; this is what pins the 0^0 = 1 convention.
        const auto slice_left = theorem1_side(params, Orientation::left).y_constant_slice();
        const auto slice_right = theorem1_side(params, Orientation::right).y_constant_slice();
        auto diff = first_difference(slice_left, lhs);
        if (!diff) diff = first_difference(slice_right, rhs);
        if (diff) {
            report.equal = false;
            report.witness = diff;
        }
    }
    return report;
}

VerificationReport verify_theorem3(const SymmetryParams& params, VerifyOptions options) {
    validate_symmetry_params(params);
    auto report = make_report("theorem3", params.chi, params.w1, params.w2, params.order,
                              params.index);
    const auto lhs = theorem3_side(params, Orientation::left, options.perturbation);
    const auto rhs = theorem3_side(right_side_params(params, options.perturbation),
                                   Orientation::right, options.perturbation);
    finish_report(report, lhs, rhs, options.sample_points);
    return report;
}

VerificationReport verify_multiplication_identity(const DirichletCharacter& chi,
                                                  unsigned long w1, unsigned long w2, unsigned n,
                                                  VerifyOptions options) {
    const SymmetryParams params{chi, w1, w2, 1, n};
    validate_symmetry_params(params);
    auto report = make_report("multiplication", chi, w1, w2, 0, n);
    const auto lhs = multiplication_side(chi, w1, w2, n, Orientation::left, options.perturbation);
    const auto rhs_params = right_side_params(params, options.perturbation);
    const auto rhs = multiplication_side(chi, rhs_params.w1, rhs_params.w2, n, Orientation::right,
                                         options.perturbation);
    finish_report(report, lhs, rhs, options.sample_points);
    return report;
}

VerificationReport cross_theorem_check(const SymmetryParams& params, VerifyOptions options) {
    validate_symmetry_params(params);
    auto report =
        make_report("cross", params.chi, params.w1, params.w2, params.order, params.index);

    // Perturbations apply to the power-sum expansion only, so a broken build
    // cannot cancel out of both sides of the comparison.
    SymmetryParams t3_params = params;
    if (options.perturbation == Perturbation::offset_w) t3_params.w1 += 1;
    const auto t1_left = theorem1_side(params, Orientation::left);
    const auto t3_left = theorem3_side(t3_params, Orientation::left, options.perturbation);
    const auto t1_right = theorem1_side(params, Orientation::right);
    const auto t3_right = theorem3_side(t3_params, Orientation::right, options.perturbation);

    if (options.sample_points) {
        report.sample_agree =
            samples_agree(t1_left, t3_left) && samples_agree(t1_right, t3_right);
    }
    auto diff = first_difference(t1_left, t3_left);
    if (!diff) diff = first_difference(t1_right, t3_right);
    report.equal = !diff.has_value();
    report.witness = diff;
    return report;
}

}  // namespace eulerchi
