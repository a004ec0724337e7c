#include "surfhom/tree_basis.hpp"

namespace surfhom {

long TreeBasis::index_of(const std::vector<int>& path) const {
    for (size_t i = 0; i < paths.size(); ++i)
        if (paths[i] == path) return static_cast<long>(i);
    return -1;
}

TreeBasis tree_basis(const FusionData& fd, const std::vector<int>& leaves, int root) {
    TreeBasis b;
    b.leaves = leaves;
    b.root = root;
    if (leaves.empty()) {
        if (root == fd.unit) b.paths.push_back({});
        return b;
    }
    std::vector<int> path(leaves.size());
    path[0] = leaves[0];

    // DFS in increasing label order gives lexicographic path order.
    auto rec = [&](auto&& self, size_t depth) -> void {
        if (depth == leaves.size()) {
            if (path.back() == root) b.paths.push_back(path);
            return;
        }
        for (int m = 0; m < fd.rank(); ++m) {
            if (fd.N(path[depth - 1], leaves[depth], m) >= 1) {
                path[depth] = m;
                self(self, depth + 1);
            }
        }
    };
    rec(rec, 1);
    return b;
}

long fusion_multiplicity(const FusionData& fd, const std::vector<int>& leaves, int root) {
    const int r = fd.rank();
    std::vector<long> cur(r, 0);
    cur[fd.unit] = 1;
    for (int leaf : leaves) {
        std::vector<long> next(r, 0);
        for (int m = 0; m < r; ++m) {
            if (!cur[m]) continue;
            for (int c = 0; c < r; ++c) next[c] += cur[m] * fd.N(m, leaf, c);
        }
        cur = next;
    }
    return cur[root];
}

}  // namespace surfhom
