#pragma once

#include "surfhom/tree_basis.hpp"

namespace surfhom {

struct diagram_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MoveResult {
    TreeBasis out;
    Mat M;  // dim(out) x dim(in)
};

enum class PairSide {
    LR,  // cup: unit -> (dual X, X);  cap: (dual X, X) -> unit      [R_X and its dagger]
    RL   // cup: unit -> (X, dual X);  cap: (X, dual X) -> unit      [carries the snake phase]
};

// Elementary moves against left-parenthesized tree bases. Positions are
// 1-based leaf positions; every move returns the matrix of the morphism it
// post-composes.
MoveResult expand_leaf(const FusionData& fd, const TreeBasis& in, int p, int a, int b);
MoveResult fuse_pair(const FusionData& fd, const TreeBasis& in, int p, int c);
MoveResult braid_move(const FusionData& fd, const TreeBasis& in, int p, int sign);
MoveResult cap_move(const FusionData& fd, const TreeBasis& in, int p, PairSide side);
MoveResult cup_move(const FusionData& fd, const TreeBasis& in, int p, int x, PairSide side);
MoveResult twist_move(const FusionData& fd, const TreeBasis& in, int p, int sign);

// A composite morphism given as a sequence of elementary moves.
struct Move {
    enum class Kind { FExpand, FFuse, RMove, Cup, Cap, Twist, Identity } kind;
    int pos = 1;
    int a = -1, b = -1, c = -1;
    int sign = +1;
    PairSide side = PairSide::LR;

    static Move f_expand(int pos, int a, int b) { return {Kind::FExpand, pos, a, b, -1, +1, PairSide::LR}; }
    static Move f_fuse(int pos, int c) { return {Kind::FFuse, pos, -1, -1, c, +1, PairSide::LR}; }
    static Move r_move(int pos, int sign) { return {Kind::RMove, pos, -1, -1, -1, sign, PairSide::LR}; }
    static Move cup(int pos, int x, PairSide s = PairSide::LR) { return {Kind::Cup, pos, x, -1, -1, +1, s}; }
    static Move cap(int pos, PairSide s = PairSide::LR) { return {Kind::Cap, pos, -1, -1, -1, +1, s}; }
    static Move twist(int pos, int sign = +1) { return {Kind::Twist, pos, -1, -1, -1, sign, PairSide::LR}; }
};

struct Diagram {
    std::vector<Move> moves;
};

// Fold the diagram move by move against the input basis.
MoveResult evaluate(const FusionData& fd, const Diagram& d, const TreeBasis& in);

// Evaluate a diagram with empty source and target boundary to its scalar.
cplx closed_evaluation(const FusionData& fd, const Diagram& d);

}  // namespace surfhom
