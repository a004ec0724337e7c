#pragma once

#include "surfhom/algebra_object.hpp"

namespace surfhom {

namespace conv {
// Orientation of the shuffle crossing in the loop-pair multiplication: the
// outgoing strand of the first matrix coefficient passes under the incoming
// dual strand of the second. Fixed by the Yetter-Drinfeld equation for the
// canonical half-braiding together with the counit character battery.
inline constexpr int shuffle_sign = -1;
}  // namespace conv

// The reflection equation algebra F = sum_X Xbar x X with fibers
// F(U) = sum_X Hom(U, Xbar X). Fiber bases are the tree isometries
// b^U_X ordered by X; the distinguished ground vectors are
// R_X = sqrt(d_X) b^unit_X.
struct ReflectionAlgebra {
    const FusionData* fd = nullptr;
    AlgebraObject algebra;
    HalfBraiding half_braiding;
    std::vector<std::vector<int>> fiber_labels;  // per fiber U: the simples X
    std::vector<int> ground_basis;               // fiber_labels[unit]

    long ground_dim() const { return static_cast<long>(ground_basis.size()); }
    // Change of basis: R-basis coefficients -> isometry-basis coefficients.
    Vec r_to_fiber(const Vec& r_coeffs) const;
};

ReflectionAlgebra build_reflection_algebra(const FusionData& fd);

// Ground structure constants in the R-basis: table[Z](X, Y) with
// R_X R_Y = sum_Z table[Z](X,Y) R_Z.
std::vector<Mat> ground_multiplication_table(const ReflectionAlgebra& F);

// Star restricted to the ground fiber, in the R-basis (antilinear part
// implicit): R-basis matrix S with (sum v_X R_X)^* = sum (S conj(v))_Z R_Z.
Mat ground_star_r_basis(const ReflectionAlgebra& F);

// The counit as a functional on the ground fiber in the R-basis, together
// with its character battery: values, multiplicativity, star compatibility
// and the positivity identity eps(a* a) = |sum lambda|^2 on random samples.
Vec counit(const ReflectionAlgebra& F);
ValidationReport counit_state_check(const ReflectionAlgebra& F, int samples = 100,
                                    unsigned seed = 7);

// C*-norms of the R_X in the GNS representation of the ground algebra with
// respect to the canonical trace-like state (the unit-coefficient state,
// whose Gram weights the R-basis by quantum dimensions).
std::vector<double> r_norms(const ReflectionAlgebra& F);

// Candidate mapping-class actions for the annulus twist.
enum class TwistCandidate { ComponentTwist, PairTwist, Monodromy };
TwistCandidate parse_twist_candidate(const std::string& name);
std::string twist_candidate_name(TwistCandidate c);

// Fiberwise linear maps of the candidate on every fiber F(U).
std::vector<Mat> dehn_twist(const ReflectionAlgebra& F, TwistCandidate candidate);

struct McgCheck {
    TwistCandidate candidate;
    double fixes_ground_residual;    // | delta restricted to F(unit) - id |
    double counit_invariance;        // | eps o delta - eps | on the ground
    double automorphism_residual;    // | delta mu - mu (delta x delta) | and star
    bool fixes_ground() const { return fixes_ground_residual < kCheckTol; }
};

McgCheck verify_mcg(const ReflectionAlgebra& F, TwistCandidate candidate);

}  // namespace surfhom
