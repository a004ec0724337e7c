#pragma once

#include "surfhom/diagram.hpp"
#include "surfhom/report.hpp"
#include "surfhom/sum_basis.hpp"

namespace surfhom {

// An algebra object internal to Vect(C), stored skeletally: a multiplicity
// fiber V_i per simple, channel structure constants for the multiplication,
// a unit vector in the unit fiber and an antilinear star V_i -> V_{dual i}.
// Fiber bases are orthonormal by construction.
struct AlgebraObject {
    const FusionData* fd = nullptr;
    std::vector<long> fibers;
    ChannelMap mult;
    Vec unit;
    std::vector<Mat> star;  // star[i]: V_i -> V_{dual i}, acts as M * conj(v)

    long fiber_dim(int i) const { return fibers[i]; }
    long total_dim() const {
        long t = 0;
        for (long f : fibers) t += f;
        return t;
    }
    Obj object() const {
        Obj o;
        for (int i = 0; i < static_cast<int>(fibers.size()); ++i)
            if (fibers[i] > 0) o.mult[i] = fibers[i];
        return o;
    }
    Family mult_family() const;

    static AlgebraObject unit_algebra(const FusionData& fd);
};

// A unitary half-braiding on an algebra object: for each simple U the
// morphism A x U -> U x A as a Family with one block per root.
struct HalfBraiding {
    std::map<int, Family> comp;  // simple U -> family on (A, U) -> (U, A)
};

struct ModuleObject {
    const FusionData* fd = nullptr;
    const AlgebraObject* algebra = nullptr;
    bool left = false;          // left: action A x M -> M; right: M x A -> M
    std::vector<long> fibers;
    ChannelMap action;          // left: (a, m, k); right: (m, a, k)

    Obj object() const {
        Obj o;
        for (int i = 0; i < static_cast<int>(fibers.size()); ++i)
            if (fibers[i] > 0) o.mult[i] = fibers[i];
        return o;
    }

    // A as a module over itself via the multiplication.
    static ModuleObject regular(const AlgebraObject& A, bool left);
    // Any object with the left action pulled back along a character of the
    // ground algebra (the action factors through epsilon).
    static ModuleObject character_module(const AlgebraObject& A, const Vec& character_on_ground,
                                         const Obj& carrier, bool left);
};

// Residuals for associativity, unit law, star involutivity and
// anti-multiplicativity, and positivity of the canonical sesquilinear form.
ValidationReport check_cstar_algebra(const AlgebraObject& A);

// Residual of sigma_U (mu x id) = (id x mu)(sigma_U x id)(id x sigma_U) over
// all simples U, plus unitarity and F-move coherence of the components.
ValidationReport verify_yd(const AlgebraObject& A, const HalfBraiding& sigma);

// Maximal braided tensor product of algebra objects; fibers
// (A x B)(k) = sum_{i,j} V^A_i x V^B_j x Hom(k, X_i X_j).
AlgebraObject braided_tensor(const AlgebraObject& A, const AlgebraObject& B);

// Coequalizer of the two action maps X x A x Y => X x Y, computed fiberwise.
// Returns the quotient object and its unit-fiber dimension.
std::pair<Obj, Mor> relative_tensor(const ModuleObject& X, const ModuleObject& Y);

ValidationReport check_module(const ModuleObject& M);

// Rotation coefficient relating the conjugated fusion vertex
// (i j -> W) to the standard vertex (dual j, dual i -> dual W).
cplx rotation_coefficient(const FusionData& fd, int i, int j, int W);

}  // namespace surfhom
