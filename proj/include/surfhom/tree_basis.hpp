#pragma once

#include <vector>

#include "surfhom/fusion_data.hpp"

namespace surfhom {

// Basis of Hom(root, X_1 x ... x X_k) given by admissible left-parenthesized
// label paths: path[i] is the fusion label of the first i+1 leaves, so
// path[0] = leaves[0] and path.back() = root.  Paths are enumerated in
// lexicographic order.  With no leaves the basis is {()} when root is the
// unit and empty otherwise.
struct TreeBasis {
    std::vector<int> leaves;
    int root = 0;
    std::vector<std::vector<int>> paths;

    long dim() const { return static_cast<long>(paths.size()); }
    long index_of(const std::vector<int>& path) const;
};

TreeBasis tree_basis(const FusionData& fd, const std::vector<int>& leaves, int root);

// Iterated fusion multiplicity of root inside the product of the leaves;
// equals tree_basis(...).dim() but runs on the integer fusion ring only.
long fusion_multiplicity(const FusionData& fd, const std::vector<int>& leaves, int root);

}  // namespace surfhom
