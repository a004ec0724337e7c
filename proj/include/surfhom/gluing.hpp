#pragma once

#include "surfhom/reflection.hpp"

namespace surfhom {

struct pattern_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PairClass { PosLinked, NegLinked, PosNested, NegNested, Unlinked };
std::string pair_class_name(PairClass c);

// A rank-n gluing pattern: the bijection sending handle ends 1,1',...,n,n'
// to the 2n attachment positions on the disk boundary, together with the
// derived pair classification, the position permutation and the topology of
// the resulting surface.
struct GluingPattern {
    int rank = 0;
    std::vector<int> start_pos;  // P(i), 1-based positions, index 0..n-1
    std::vector<int> end_pos;    // P(i')
    std::vector<std::vector<PairClass>> classification;  // [i][j], i < j
    std::vector<int> tau;        // permutation of positions: position -> (handle, end) encoding
    int genus = 0;
    int boundary_count = 0;

    // handle_at[p], is_end_at[p]: which handle end sits at position p (0-based).
    std::vector<int> handle_at;
    std::vector<bool> is_end_at;
};

GluingPattern parse_pattern(const std::string& text);
PairClass classify_pair(const GluingPattern& P, int i, int j);  // 1-based, i < j
std::pair<int, int> topology(const GluingPattern& P);           // (genus, boundary)

// The internal algebra of the punctured surface: fibers over U are spanned
// by label tuples (X_1..X_n) with trees on the position-ordered legs
// (dual X_i at P(i), X_i at P(i')).
struct SurfaceAlgebra {
    GluingPattern pattern;
    AlgebraObject algebra;
    HalfBraiding half_braiding;
    // fiber element = (label tuple index, tree path); bookkeeping per fiber:
    std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> fiber_elems;
};

SurfaceAlgebra build_a_p(const GluingPattern& P, const FusionData& fd, long cap = 10000000);

// Enumeration-free fiber dimensions (multiset fusion multiplicities).
std::vector<long> a_p_fiber_dims(const GluingPattern& P, const FusionData& fd, long cap = 10000000);

// The crossing automorphism attached to a classified pair, as the matrix
// family on (dual U, U, dual V, V) -> (dual V, V, dual U, U) legs.
Family crossing_map(const FusionData& fd, PairClass c, int U, int V);

// Quantum Hamiltonian reduction for the closed surface: the coequalizer
// a_P (x)_F 1 for a right F-module structure on a_P and the counit action on
// the unit object. Returns the quotient object and dim Hom(1, quotient).
struct ReductionResult {
    Obj quotient;
    long end_dim = 0;  // dim End(O_Sigma)
    double module_residual = 0.0;
};

// The right boundary module structure: either the regular one (annulus) or
// a generated one for shipped cases; see reduce() in the CLI.
ReductionResult closed_surface_reduction(const SurfaceAlgebra& AP, const ReflectionAlgebra& F,
                                         const ModuleObject& boundary_action);

// Generated boundary data: the regular action for the annulus pattern, the
// counit-pullback action for symmetric pointed categories (where the
// boundary monodromy is trivial); throws otherwise.
ModuleObject generated_boundary_module(const SurfaceAlgebra& AP, const ReflectionAlgebra& F);

}  // namespace surfhom
