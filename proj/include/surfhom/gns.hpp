#pragma once

#include "surfhom/algebra_object.hpp"

namespace surfhom {

// A finite-dimensional associative unital *-algebra given by structure
// constants: e_x e_y = sum_z c[z](x,y) e_z, star (sum v e)^* = S conj(v).
struct GroundAlgebra {
    long dimension = 0;
    std::vector<std::string> basis_labels;
    std::vector<Mat> c;
    Mat star;
    Vec unit;

    // Left multiplication matrix of the element with coefficients v.
    Mat left_mult(const Vec& v) const {
        Mat L = Mat::Zero(dimension, dimension);
        for (long z = 0; z < dimension; ++z)
            for (long x = 0; x < dimension; ++x)
                for (long y = 0; y < dimension; ++y) L(z, y) += v(x) * c[z](x, y);
        return L;
    }
    Vec star_of(const Vec& v) const { return star * v.conjugate(); }
};

// Unit-fiber restriction of an algebra object.
GroundAlgebra ground_algebra(const AlgebraObject& A);

// The full matrix algebra M_n with its matrix-unit basis.
GroundAlgebra matrix_algebra(long n);

// Normalized trace on matrix_algebra(n); the coefficient functional for
// ground algebras of reflection type and explicit vectors otherwise.
Vec matrix_trace_state(long n);

struct gns_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GnsResult {
    Mat gram;          // G(x,y) = omega(e_x^* e_y)
    long kernel_dim = 0;
    Mat to_gns;        // rank x dim map onto orthonormal GNS coordinates
    Mat from_gns;      // dim x rank right inverse
    Vec cyclic;        // class of the unit
    std::vector<Mat> rep;  // representation of each basis element
    bool state_faithful = false;
    bool rep_injective = false;
};

// GNS construction for the state omega (omega(e_x) given componentwise).
// Requires positivity: min eigenvalue of the Gram above -1e-9.
GnsResult gns(const GroundAlgebra& B, const Vec& omega);

// Operator norm of the element in the GNS representation.
double gns_operator_norm(const GnsResult& g, const GroundAlgebra& B, const Vec& element);

// ---------------------------------------------------------------------------
// finite-dimensional realizations

// A concrete *-realization of the category: one block space per simple with
// multiplication, star and a faithful trace on the unit block. Stands in for
// the bounded-vectors functor at matrix scale.
struct RealizationDatum {
    const FusionData* fd = nullptr;
    std::vector<long> h_dims;
    std::map<std::tuple<int, int, int>, Mat> h_mult;  // (X,Y,Z): H_X x H_Y -> H_Z
    std::vector<Mat> h_star;                          // H_X -> H_{dual X}, antilinear
    Vec trace;                                        // functional on H(unit)

    ValidationReport check() const;
};

// Regular realization of a pointed category with symmetric braiding:
// H(g) = functions on the group, products twisted by translation.
RealizationDatum regular_pointed_realization(const FusionData& fd);
RealizationDatum trivial_realization(const FusionData& fd);

// An element of the realized algebra |A| = sum_X H(X) x A(X).
struct RealizedElement {
    std::vector<Mat> parts;  // parts[X]: h_dims[X] x A.fiber_dim(X)
};

RealizedElement realized_zero(const RealizationDatum& H, const AlgebraObject& A);
RealizedElement realized_mult(const RealizationDatum& H, const AlgebraObject& A,
                              const RealizedElement& a, const RealizedElement& b);
RealizedElement realized_star(const RealizationDatum& H, const AlgebraObject& A,
                              const RealizedElement& a);
// tau_omega = (trace x omega) on the unit component.
cplx tau_omega(const RealizationDatum& H, const AlgebraObject& A, const Vec& omega,
               const RealizedElement& a);

// The orthogonal direct sum of H(X) x A(X) with the X-summand inner product
// scaled by qdim(X)^{-1} against the R-normalized pairings.
struct WeightedHilbert {
    const RealizationDatum* H = nullptr;
    const AlgebraObject* A = nullptr;
    Vec omega;
    std::vector<Mat> h_form;      // Gram of <.,.> on H(X)
    std::vector<Mat> fiber_form;  // GNS form on A(X) from omega
    cplx inner(const RealizedElement& a, const RealizedElement& b) const;
};

WeightedHilbert weighted_hilbert(const RealizationDatum& H, const AlgebraObject& A,
                                 const Vec& omega);

// tau_omega(b* a) = <Lambda(b), Lambda(a)> on random elements.
ValidationReport weighted_inner_identity_check(const AlgebraObject& A, const Vec& omega,
                                               const RealizationDatum& H, int samples = 100,
                                               unsigned seed = 11);

// Finite-dimensional realization of the inclusion N in |A| with the
// compression conditional expectation onto the unit summand.
struct InclusionRealization {
    long ambient_dim = 0;          // dim of the GNS space of tau_omega
    long base_dim = 0;             // dim of the image of N
    std::vector<Mat> ambient_gens; // representation of a spanning family of |A|
    bool expectation_faithful = false;
    bool omega_faithful = false;
    long gram_nullity = 0;
    double idempotent_residual = 0.0;
    double bimodularity_residual = 0.0;
    double kadison_floor = 0.0;    // most negative eigenvalue of E(x*x) - E(x)*E(x)
    double unital_residual = 0.0;
};

InclusionRealization realize_inclusion(const AlgebraObject& A, const Vec& omega,
                                       const RealizationDatum& H, int samples = 40,
                                       unsigned seed = 13);

}  // namespace surfhom
