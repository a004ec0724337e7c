#include <doctest.h>

#include <cmath>

#include "surfhom/diagram.hpp"

using namespace surfhom;

TEST_CASE("tree basis dimensions") {
    FusionData triv = builtin_category("trivial");
    CHECK(tree_basis(triv, {0}, 0).dim() == 1);

    FusionData fib = builtin_category("fib");
    int tau = fib.index_of("tau");
    CHECK(tree_basis(fib, {tau, tau, tau, tau}, fib.unit).dim() == 2);
    CHECK(fusion_multiplicity(fib, {tau, tau, tau, tau}, fib.unit) == 2);

    FusionData ising = builtin_category("ising");
    int sigma = ising.index_of("sigma"), psi = ising.index_of("psi");
    CHECK(tree_basis(ising, {sigma, sigma}, psi).dim() == 1);

    // Path count always equals the iterated fusion multiplicity.
    for (int root = 0; root < ising.rank(); ++root)
        CHECK(tree_basis(ising, {sigma, psi, sigma, sigma}, root).dim() ==
              fusion_multiplicity(ising, {sigma, psi, sigma, sigma}, root));

    CHECK(tree_basis(fib, {}, fib.unit).dim() == 1);
    CHECK(tree_basis(fib, {}, tau).dim() == 0);
}

TEST_CASE("empty diagram is the identity") {
    FusionData fib = builtin_category("fib");
    int tau = fib.index_of("tau");
    TreeBasis b = tree_basis(fib, {tau, tau, tau}, tau);
    auto r = evaluate(fib, Diagram{}, b);
    CHECK(max_abs(r.M - Mat::Identity(b.dim(), b.dim())) == 0.0);
}

TEST_CASE("snake identities close up for every simple of every fixture") {
    for (const char* name : {"trivial", "fib", "ising", "pointed:2:1/2", "pointed:4:1/4"}) {
        FusionData fd = builtin_category(name);
        for (int x = 0; x < fd.rank(); ++x) {
            // (cap x id) (id x cup): X -> X (X^ X) -> X
            TreeBasis bx = tree_basis(fd, {x}, x);
            Diagram zig{{Move::cup(2, x, PairSide::LR), Move::cap(1, PairSide::RL)}};
            auto r1 = evaluate(fd, zig, bx);
            CHECK(std::abs(r1.M(0, 0) - 1.0) < kEntryTol);

            // (id x cap) (cup x id): X^ -> (X^ X) X^ -> X^
            int xb = fd.dual[x];
            TreeBasis bxb = tree_basis(fd, {xb}, xb);
            Diagram zag{{Move::cup(1, x, PairSide::LR), Move::cap(2, PairSide::RL)}};
            auto r2 = evaluate(fd, zag, bxb);
            CHECK(std::abs(r2.M(0, 0) - 1.0) < kEntryTol);
        }
    }
}

TEST_CASE("unknots evaluate to quantum dimensions") {
    for (const char* name : {"trivial", "fib", "ising"}) {
        FusionData fd = builtin_category(name);
        for (int a = 0; a < fd.rank(); ++a) {
            Diagram unknot{{Move::cup(1, a, PairSide::LR), Move::cap(1, PairSide::LR)}};
            cplx v = closed_evaluation(fd, unknot);
            CHECK(std::abs(v - cplx(fd.qdim[a])) < kEntryTol);

            // Twisted unknot picks up exactly theta_a.
            Diagram twisted{{Move::cup(1, a, PairSide::LR), Move::twist(2),
                             Move::cap(1, PairSide::LR)}};
            cplx tv = closed_evaluation(fd, twisted);
            CHECK(std::abs(tv - fd.twist[a] * fd.qdim[a]) < kEntryTol);
        }
    }

    FusionData fib = builtin_category("fib");
    int tau = fib.index_of("tau");
    Diagram unknot{{Move::cup(1, tau, PairSide::LR), Move::cap(1, PairSide::LR)}};
    CHECK(std::abs(closed_evaluation(fib, unknot) - cplx(1.6180339887)) < 1e-9);
}

TEST_CASE("braid moves are unitary and invert cleanly") {
    FusionData fib = builtin_category("fib");
    int tau = fib.index_of("tau");

    TreeBasis b2 = tree_basis(fib, {tau, tau}, tau);
    Diagram rr{{Move::r_move(1, +1), Move::r_move(1, -1)}};
    auto r = evaluate(fib, rr, b2);
    CHECK(max_abs(r.M - Mat::Identity(b2.dim(), b2.dim())) < 1e-10);

    for (const char* name : {"fib", "ising", "pointed:4:1/4"}) {
        FusionData fd = builtin_category(name);
        for (int a = 0; a < fd.rank(); ++a)
            for (int b = 0; b < fd.rank(); ++b)
                for (int root = 0; root < fd.rank(); ++root) {
                    TreeBasis basis = tree_basis(fd, {a, b, fd.dual[root]}, fd.unit);
                    if (basis.dim() == 0) continue;
                    for (int p : {1, 2}) {
                        auto m = braid_move(fd, basis, p, +1);
                        CHECK(max_abs(m.M * m.M.adjoint() -
                                      Mat::Identity(m.out.dim(), m.out.dim())) < kCheckTol);
                        auto back = braid_move(fd, m.out, p, -1);
                        CHECK(max_abs(back.M * m.M -
                                      Mat::Identity(basis.dim(), basis.dim())) < kCheckTol);
                    }
                }
    }
}

TEST_CASE("braiding is natural with respect to F-moves (hexagon)") {
    for (const char* name : {"fib", "ising", "pointed:4:1/4"}) {
        FusionData fd = builtin_category(name);
        for (int a = 0; a < fd.rank(); ++a)
            for (int b = 0; b < fd.rank(); ++b)
                for (int c = 0; c < fd.rank(); ++c)
                    for (int root = 0; root < fd.rank(); ++root) {
                        TreeBasis basis = tree_basis(fd, {a, b, c}, root);
                        if (basis.dim() == 0) continue;

                        // sigma_{a, b x c} as two adjacent crossings ...
                        Diagram two{{Move::r_move(1, +1), Move::r_move(2, +1)}};
                        auto lhs = evaluate(fd, two, basis);

                        // ... equals fuse + single crossing + expand.
                        Mat rhs = Mat::Zero(lhs.out.dim(), basis.dim());
                        for (int e = 0; e < fd.rank(); ++e) {
                            if (fd.N(b, c, e) < 1) continue;
                            Diagram path{{Move::f_fuse(2, e), Move::r_move(1, +1),
                                          Move::f_expand(1, b, c)}};
                            auto pr = evaluate(fd, path, basis);
                            rhs += pr.M;
                        }
                        CHECK(max_abs(lhs.M - rhs) < kCheckTol);
                    }
    }
}

TEST_CASE("evaluation is functorial on composite diagrams") {
    FusionData ising = builtin_category("ising");
    int sigma = ising.index_of("sigma");
    TreeBasis basis = tree_basis(ising, {sigma, sigma, sigma, sigma}, ising.unit);

    Diagram d1{{Move::r_move(2, +1), Move::r_move(1, -1)}};
    Diagram d2{{Move::r_move(3, +1), Move::twist(1)}};
    Diagram both{{Move::r_move(2, +1), Move::r_move(1, -1), Move::r_move(3, +1), Move::twist(1)}};

    auto r1 = evaluate(ising, d1, basis);
    auto r2 = evaluate(ising, d2, r1.out);
    auto rb = evaluate(ising, both, basis);
    CHECK(max_abs(r2.M * r1.M - rb.M) < kCheckTol);
}
