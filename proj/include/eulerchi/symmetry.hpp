// Symmetry identities between alternating power sums and the generalized
// higher-order Euler polynomials, verified symbolically.
//
// Both sides of every identity are assembled independently from the euler
// primitives as exact polynomials in x (and y), then compared coefficient
// by coefficient in Q(zeta_e)[x, y]; no point sampling decides a verdict
// and no shared simplification can mask a sign error. For odd w1, w2 and
// m >= 1 the identities are, writing T_k(u) for T_{k,chi}(u*d - 1):
//
//   two-weight (bivariate):
//     sum_j C(n,j) w2^j w1^{n-j} E^{(m)}_{n-j}(w2 x)
//                 sum_k C(j,k) T_k(w1) E^{(m-1)}_{j-k}(w1 y)
//       ==  the same expression with w1 and w2 exchanged
//
//   power-sum expansion (bivariate):
//     sum_k C(n,k) w1^k w2^{n-k} E^{(m-1)}_{n-k}(w1 y)
//                 sum_{i<w1 d} chi(i)(-1)^i E^{(m)}_k(w2 x + (w2/w1) i)
//       ==  the same expression with w1 and w2 exchanged
//
// plus the m = 1 specializations (y = 0 collapse, and the multiplication
// identity). Both bivariate forms expand one functional equation, so their
// matching orientations must also agree with each other (the cross check).
//
// Side builders accept an optional perturbation (drop the (-1)^i sign, or
// offset one weight) used to demonstrate that the checker detects broken
// identities; verification entry points default to the faithful build.

#pragma once

#include <optional>
#include <string>

#include "eulerchi/euler.hpp"

namespace eulerchi {

struct SymmetryParams {
    DirichletCharacter chi;
    unsigned long w1;
    unsigned long w2;
    unsigned long order;  // m >= 1
    unsigned index;       // n >= 0
};

// Throws std::invalid_argument unless w1, w2 are odd positive and order >= 1.
void validate_symmetry_params(const SymmetryParams& params);

enum class Orientation { left, right };

enum class Perturbation {
    none,
    drop_alternating_sign,  // omit (-1)^i in the character-sum factors
    offset_w,               // build the right side with w1 + 1
};

BivariatePolynomial theorem1_side(const SymmetryParams& params, Orientation orientation);

BivariatePolynomial theorem3_side(const SymmetryParams& params, Orientation orientation,
                                  Perturbation perturbation = Perturbation::none);

// One side of the y = 0, m = 1 collapse:
// sum_j C(n,j) w2^j w1^{n-j} E_{n-j,chi}(w2 x) T_{j,chi}(w1 d - 1).
UnivariatePolynomial corollary2_side(const DirichletCharacter& chi, unsigned long w1,
                                     unsigned long w2, unsigned n, Orientation orientation);

// One side of the multiplication identity:
// w1^n sum_{i<w1 d} chi(i)(-1)^i E_{n,chi}(w2 x + (w2/w1) i).
UnivariatePolynomial multiplication_side(const DirichletCharacter& chi, unsigned long w1,
                                         unsigned long w2, unsigned n, Orientation orientation,
                                         Perturbation perturbation = Perturbation::none);

struct VerificationReport {
    std::string identity;
    unsigned long modulus;
    unsigned long char_index;
    unsigned long w1;
    unsigned long w2;
    unsigned long order;  // 0 when not applicable
    unsigned index;       // n
    bool equal;
    std::optional<CoeffDiff> witness;        // set when unequal
    std::optional<bool> sample_agree;        // set when point sampling ran
};

struct VerifyOptions {
    Perturbation perturbation = Perturbation::none;
    bool sample_points = false;  // evaluate at the fixed preview grid first
};

VerificationReport verify_theorem1(const SymmetryParams& params, VerifyOptions options = {});

// Compares the directly-built sides, and additionally checks that the
// y = 0, m = 1 specialization of the two-weight form reproduces them.
VerificationReport verify_corollary2(const DirichletCharacter& chi, unsigned long w1,
                                     unsigned long w2, unsigned n, VerifyOptions options = {});

VerificationReport verify_theorem3(const SymmetryParams& params, VerifyOptions options = {});

VerificationReport verify_multiplication_identity(const DirichletCharacter& chi,
                                                  unsigned long w1, unsigned long w2, unsigned n,
                                                  VerifyOptions options = {});

// Matching orientations of the two bivariate forms must agree:
// left vs left and right vs right.
VerificationReport cross_theorem_check(const SymmetryParams& params, VerifyOptions options = {});

}  // namespace eulerchi
