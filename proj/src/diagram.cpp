#include "surfhom/diagram.hpp"

#include <cmath>

namespace surfhom {

namespace {

void check_pos(const TreeBasis& in, int p, int width, const char* what) {
    if (p < 1 || p + width - 1 > static_cast<int>(in.leaves.size()))
        throw diagram_error(std::string(what) + ": position out of range");
}

// Remove the unit leaf at position p (its label must be the unit).
MoveResult drop_unit(const FusionData& fd, const TreeBasis& in, int p) {
    const int q = p - 1;
    std::vector<int> leaves = in.leaves;
    leaves.erase(leaves.begin() + q);
    TreeBasis out = tree_basis(fd, leaves, in.root);
    Mat M = Mat::Zero(out.dim(), in.dim());
    for (long col = 0; col < in.dim(); ++col) {
        std::vector<int> path = in.paths[col];
        path.erase(path.begin() + q);
        long row = out.index_of(path);
        if (row >= 0) M(row, col) = 1.0;
    }
    return {out, M};
}

// Insert a unit leaf at position p (leaves shift right from p).
MoveResult insert_unit(const FusionData& fd, const TreeBasis& in, int p) {
    const int q = p - 1;
    std::vector<int> leaves = in.leaves;
    leaves.insert(leaves.begin() + q, fd.unit);
    TreeBasis out = tree_basis(fd, leaves, in.root);
    Mat M = Mat::Zero(out.dim(), in.dim());
    for (long col = 0; col < in.dim(); ++col) {
        std::vector<int> path = in.paths[col];
        int val = (q == 0) ? fd.unit : path[q - 1];
        path.insert(path.begin() + q, val);
        long row = out.index_of(path);
        if (row >= 0) M(row, col) = 1.0;
    }
    return {out, M};
}

}  // namespace

MoveResult expand_leaf(const FusionData& fd, const TreeBasis& in, int p, int a, int b) {
    check_pos(in, p, 1, "expand_leaf");
    const int q = p - 1;
    const int c = in.leaves[q];
    if (fd.N(a, b, c) < 1) throw diagram_error("expand_leaf: vertex not admissible");

    std::vector<int> leaves = in.leaves;
    leaves[q] = a;
    leaves.insert(leaves.begin() + q + 1, b);
    TreeBasis out = tree_basis(fd, leaves, in.root);
    Mat M = Mat::Zero(out.dim(), in.dim());

    for (long col = 0; col < in.dim(); ++col) {
        const auto& pin = in.paths[col];
        if (q == 0) {
            std::vector<int> pout = pin;
            pout.insert(pout.begin(), a);  // path[0] = a, path[1] = c = old path[0]
            long row = out.index_of(pout);
            if (row >= 0) M(row, col) = 1.0;
        } else {
            int mprev = pin[q - 1], mq = pin[q];
            for (int e = 0; e < fd.rank(); ++e) {
                if (fd.N(mprev, a, e) < 1 || fd.N(e, b, mq) < 1) continue;
                std::vector<int> pout = pin;
                pout.insert(pout.begin() + q, e);
                long row = out.index_of(pout);
                if (row >= 0) M(row, col) += std::conj(fd.F(mprev, a, b, mq, e, c));
            }
        }
    }
    return {out, M};
}

MoveResult fuse_pair(const FusionData& fd, const TreeBasis& in, int p, int c) {
    check_pos(in, p, 2, "fuse_pair");
    const int q = p - 1;
    const int a = in.leaves[q], b = in.leaves[q + 1];
    if (fd.N(a, b, c) < 1) throw diagram_error("fuse_pair: vertex not admissible");

    std::vector<int> leaves = in.leaves;
    leaves[q] = c;
    leaves.erase(leaves.begin() + q + 1);
    TreeBasis out = tree_basis(fd, leaves, in.root);
    Mat M = Mat::Zero(out.dim(), in.dim());

    for (long col = 0; col < in.dim(); ++col) {
        const auto& pin = in.paths[col];
        if (q == 0) {
            if (pin[1] != c) continue;
            std::vector<int> pout(pin.begin() + 1, pin.end());
            long row = out.index_of(pout);
            if (row >= 0) M(row, col) = 1.0;
        } else {
            int mprev = pin[q - 1], e = pin[q], mnext = pin[q + 1];
            if (fd.N(mprev, c, mnext) < 1) continue;
            std::vector<int> pout = pin;
            pout.erase(pout.begin() + q);
            long row = out.index_of(pout);
            if (row >= 0) M(row, col) += fd.F(mprev, a, b, mnext, e, c);
        }
    }
    return {out, M};
}

MoveResult braid_move(const FusionData& fd, const TreeBasis& in, int p, int sign) {
    check_pos(in, p, 2, "braid_move");
    const int q = p - 1;
    const int a = in.leaves[q], b = in.leaves[q + 1];

    std::vector<int> leaves = in.leaves;
    std::swap(leaves[q], leaves[q + 1]);
    TreeBasis out = tree_basis(fd, leaves, in.root);
    Mat M = Mat::Zero(out.dim(), in.dim());

    for (long col = 0; col < in.dim(); ++col) {
        const auto& pin = in.paths[col];
        int mprev = (q == 0) ? fd.unit : pin[q - 1];
        int mnext = (q + 1 < static_cast<int>(pin.size())) ? pin[q + 1] : in.root;
        for (long row = 0; row < out.dim(); ++row) {
            const auto& pout = out.paths[row];
            bool same = true;
            for (size_t i = 0; i < pin.size(); ++i)
                if (static_cast<int>(i) != q && pout[i] != pin[i]) { same = false; break; }
            if (!same) continue;
            cplx coeff = 0.0;
            for (int e = 0; e < fd.rank(); ++e) {
                if (fd.N(a, b, e) < 1 || fd.N(mprev, e, mnext) < 1) continue;
                cplx r = (sign > 0) ? fd.R(a, b, e) : std::conj(fd.R(b, a, e));
                coeff += fd.F(mprev, a, b, mnext, pin[q], e) * r *
                         std::conj(fd.F(mprev, b, a, mnext, pout[q], e));
            }
            M(row, col) += coeff;
        }
    }
    return {out, M};
}

MoveResult cap_move(const FusionData& fd, const TreeBasis& in, int p, PairSide side) {
    check_pos(in, p, 2, "cap_move");
    const int q = p - 1;
    const int a = in.leaves[q], b = in.leaves[q + 1];
    if (fd.dual[a] != b) throw diagram_error("cap_move: leaves are not a dual pair");

    cplx scale = (side == PairSide::LR) ? cplx(std::sqrt(fd.qdim[b]))
                                        : std::sqrt(fd.qdim[a]) * fd.kappa[a];
    MoveResult fused = fuse_pair(fd, in, p, fd.unit);
    MoveResult dropped = drop_unit(fd, fused.out, p);
    return {dropped.out, scale * (dropped.M * fused.M)};
}

MoveResult cup_move(const FusionData& fd, const TreeBasis& in, int p, int x, PairSide side) {
    if (p < 1 || p > static_cast<int>(in.leaves.size()) + 1)
        throw diagram_error("cup_move: position out of range");
    cplx scale = (side == PairSide::LR) ? cplx(std::sqrt(fd.qdim[x]))
                                        : std::sqrt(fd.qdim[x]) * std::conj(fd.kappa[x]);
    int first = (side == PairSide::LR) ? fd.dual[x] : x;
    int second = (side == PairSide::LR) ? x : fd.dual[x];
    MoveResult inserted = insert_unit(fd, in, p);
    MoveResult expanded = expand_leaf(fd, inserted.out, p, first, second);
    return {expanded.out, scale * (expanded.M * inserted.M)};
}

MoveResult twist_move(const FusionData& fd, const TreeBasis& in, int p, int sign) {
    check_pos(in, p, 1, "twist_move");
    cplx t = fd.twist[in.leaves[p - 1]];
    if (sign < 0) t = std::conj(t);
    return {in, t * Mat::Identity(in.dim(), in.dim())};
}

MoveResult evaluate(const FusionData& fd, const Diagram& d, const TreeBasis& in) {
    MoveResult acc{in, Mat::Identity(in.dim(), in.dim())};
    for (const auto& mv : d.moves) {
        MoveResult step;
        switch (mv.kind) {
            case Move::Kind::FExpand: step = expand_leaf(fd, acc.out, mv.pos, mv.a, mv.b); break;
            case Move::Kind::FFuse: step = fuse_pair(fd, acc.out, mv.pos, mv.c); break;
            case Move::Kind::RMove: step = braid_move(fd, acc.out, mv.pos, mv.sign); break;
            case Move::Kind::Cup: step = cup_move(fd, acc.out, mv.pos, mv.a, mv.side); break;
            case Move::Kind::Cap: step = cap_move(fd, acc.out, mv.pos, mv.side); break;
            case Move::Kind::Twist: step = twist_move(fd, acc.out, mv.pos, mv.sign); break;
            case Move::Kind::Identity: continue;
        }
        acc.out = step.out;
        acc.M = step.M * acc.M;
    }
    return acc;
}

cplx closed_evaluation(const FusionData& fd, const Diagram& d) {
    TreeBasis empty = tree_basis(fd, {}, fd.unit);
    MoveResult r = evaluate(fd, d, empty);
    if (!r.out.leaves.empty())
        throw diagram_error("closed_evaluation: diagram has free strands");
    if (r.M.rows() != 1 || r.M.cols() != 1)
        throw diagram_error("closed_evaluation: diagram is not scalar");
    return r.M(0, 0);
}

}  // namespace surfhom
