#pragma once

#include <map>
#include <tuple>

#include "surfhom/category.hpp"
#include "surfhom/tree_basis.hpp"

namespace surfhom {

// Structure constants of a bilinear pairing over fusion channels:
// (i, j, k) -> matrix of shape dim_k x (dim_i * dim_j), column index
// row-major in (fiber_i, fiber_j).
using ChannelMap = std::map<std::tuple<int, int, int>, Mat>;

// Basis of Hom(root, A_1 x ... x A_k) where each leg A_t is a multiplicity
// object: an element picks a simple label and a fiber index per leg plus an
// admissible staircase path. Enumeration is lexicographic in (labels,
// fibers, path), so plain tree bases embed with fibers pinned to zero.
struct SumLegBasis {
    const FusionData* fd = nullptr;
    std::vector<Obj> legs;
    int root = 0;

    struct Elem {
        std::vector<int> labels;
        std::vector<long> fibers;
        std::vector<int> path;
        bool operator<(const Elem& o) const {
            if (labels != o.labels) return labels < o.labels;
            if (fibers != o.fibers) return fibers < o.fibers;
            return path < o.path;
        }
        bool operator==(const Elem& o) const {
            return labels == o.labels && fibers == o.fibers && path == o.path;
        }
    };
    std::vector<Elem> elems;
    std::map<Elem, long> index;

    long dim() const { return static_cast<long>(elems.size()); }
    long index_of(const Elem& e) const {
        auto it = index.find(e);
        return it == index.end() ? -1 : it->second;
    }
};

SumLegBasis sum_basis(const FusionData& fd, const std::vector<Obj>& legs, int root);

// A linear map between leg-list morphism spaces, one block per root.
struct Family {
    std::vector<Obj> src_legs;
    std::vector<Obj> dst_legs;
    std::map<int, Mat> blocks;  // root -> dim(dst basis) x dim(src basis)
};

// Contract legs p, p+1 (1-based) through channel structure constants into a
// single leg with the given multiplicity object.
std::pair<SumLegBasis, Mat> contract_pair(const SumLegBasis& in, int p, const ChannelMap& channels,
                                          const Obj& out_leg);

// Apply a Family to the leg range starting at p (its src_legs must match the
// legs found there); the surrounding legs are spectators and the staircase is
// recoupled around the range.
std::pair<SumLegBasis, Mat> apply_family(const SumLegBasis& in, int p, const Family& fam);

// Family of a pairwise contraction, blocks computed for every root.
Family family_of_contraction(const FusionData& fd, const Obj& leg_a, const Obj& leg_b,
                             const Obj& leg_out, const ChannelMap& channels);

}  // namespace surfhom
