#include "surfhom/reflection.hpp"

#include <random>

#include "surfhom/gns.hpp"

namespace surfhom {

Vec ReflectionAlgebra::r_to_fiber(const Vec& r_coeffs) const {
    Vec v = Vec::Zero(ground_dim());
    for (long x = 0; x < ground_dim(); ++x)
        v(x) = r_coeffs(x) * std::sqrt(fd->qdim[ground_basis[x]]);
    return v;
}

namespace {

// Pairing weight of the loop contraction (X, Y) -> Z: the dual fusion vertex
// carries an inverse-braid kink and the quantum-dimension normalization of
// the pair-of-pants pairing.
cplx loop_pair_weight(const FusionData& fd, int X, int Y, int Z) {
    int xb = fd.dual[X], yb = fd.dual[Y];
    if (fd.N(xb, yb, fd.dual[Z]) < 1 || fd.N(X, Y, Z) < 1) return 0.0;
    return (fd.qdim[Z] / (fd.qdim[X] * fd.qdim[Y])) * std::conj(fd.R(X, Y, Z));
}

}  // namespace

ReflectionAlgebra build_reflection_algebra(const FusionData& fd) {
    if (!fd.multiplicity_free())
        throw unsupported_multiplicity("reflection algebra needs multiplicity-free data");
    const int r = fd.rank();

    ReflectionAlgebra F;
    F.fd = &fd;
    F.fiber_labels.assign(r, {});
    for (int U = 0; U < r; ++U)
        for (int X = 0; X < r; ++X)
            if (fd.N(fd.dual[X], X, U) >= 1) F.fiber_labels[U].push_back(X);
    F.ground_basis = F.fiber_labels[fd.unit];

    AlgebraObject& A = F.algebra;
    A.fd = &fd;
    A.fibers.assign(r, 0);
    for (int U = 0; U < r; ++U) A.fibers[U] = static_cast<long>(F.fiber_labels[U].size());

    // Multiplication channels via the loop calculus: expand both matrix
    // coefficients, shuffle the inner legs, contract along paired channels.
    for (int U = 0; U < r; ++U)
        for (int V = 0; V < r; ++V)
            for (int W = 0; W < r; ++W) {
                if (fd.N(U, V, W) < 1) continue;
                long dU = A.fibers[U], dV = A.fibers[V], dW = A.fibers[W];
                if (dU == 0 || dV == 0 || dW == 0) continue;
                Mat T = Mat::Zero(dW, dU * dV);
                TreeBasis seed = tree_basis(fd, {U, V}, W);

                for (long xi = 0; xi < dU; ++xi)
                    for (long yi = 0; yi < dV; ++yi) {
                        int X = F.fiber_labels[U][xi], Y = F.fiber_labels[V][yi];
                        int xb = fd.dual[X], yb = fd.dual[Y];
                        Diagram head{{Move::f_expand(1, xb, X), Move::f_expand(3, yb, Y),
                                      Move::r_move(2, conv::shuffle_sign)}};
                        auto mid = evaluate(fd, head, seed);
                        for (long zi = 0; zi < dW; ++zi) {
                            int Z = F.fiber_labels[W][zi];
                            int zbar = fd.dual[Z];
                            if (fd.N(xb, yb, zbar) < 1 || fd.N(X, Y, Z) < 1) continue;
                            cplx lambda = loop_pair_weight(fd, X, Y, Z);
                            if (std::abs(lambda) < 1e-15) continue;
                            Diagram tail{{Move::f_fuse(1, zbar), Move::f_fuse(2, Z)}};
                            auto fin = evaluate(fd, tail, mid.out);
                            Mat full = fin.M * mid.M;
                            T(zi, xi * dV + yi) += lambda * full(0, 0);
                        }
                    }
                A.mult[{U, V, W}] = T;
            }

    // Unit: R_1 = the unit-labelled tree isometry (d_1 = 1).
    A.unit = Vec::Zero(A.fibers[fd.unit]);
    for (long x = 0; x < A.fibers[fd.unit]; ++x)
        if (F.ground_basis[x] == fd.unit) A.unit(x) = 1.0;

    // Star: the X-component of F(U) lands on the dual(X)-component of
    // F(dual U), weighted by the braid eigenvalue of the strand past its own
    // component channel. Frobenius reciprocity makes the channel admissible
    // exactly on the fiber slots.
    A.star.assign(r, Mat());
    for (int U = 0; U < r; ++U) {
        int Ub = fd.dual[U];
        A.star[U] = Mat::Zero(A.fibers[Ub], A.fibers[U]);
        for (long xi = 0; xi < A.fibers[U]; ++xi) {
            int X = F.fiber_labels[U][xi];
            int xb = fd.dual[X];
            long zi = -1;
            for (size_t t = 0; t < F.fiber_labels[Ub].size(); ++t)
                if (F.fiber_labels[Ub][t] == xb) zi = static_cast<long>(t);
            if (zi >= 0) A.star[U](zi, xi) = fd.R(X, U, X);
        }
    }

    // The canonical half-braiding: inverse crossing under the incoming
    // strand, forward crossing over the outgoing dual strand.
    for (int U = 0; U < r; ++U) {
        Family fam;
        fam.src_legs = {A.object(), Obj::simple(U)};
        fam.dst_legs = {Obj::simple(U), A.object()};
        for (int W = 0; W < r; ++W) {
            SumLegBasis src = sum_basis(fd, fam.src_legs, W);
            SumLegBasis dst = sum_basis(fd, fam.dst_legs, W);
            if (src.dim() == 0 && dst.dim() == 0) continue;
            Mat M = Mat::Zero(dst.dim(), src.dim());
            for (long col = 0; col < src.dim(); ++col) {
                const auto& E = src.elems[col];
                int i = E.labels[0];
                int X = F.fiber_labels[i][E.fibers[0]];
                int xb = fd.dual[X];
                TreeBasis comp_in = tree_basis(fd, {i, U}, W);
                long local_col = comp_in.index_of({E.path[0], E.path[1]});
                Diagram head{{Move::f_expand(1, xb, X), Move::r_move(2, -1), Move::r_move(1, +1)}};
                auto mid = evaluate(fd, head, comp_in);
                // The crossing mixes the simple components of Xbar X.
                for (int ip = 0; ip < r; ++ip) {
                    if (fd.N(xb, X, ip) < 1) continue;
                    long fiber_out = -1;
                    for (size_t t = 0; t < F.fiber_labels[ip].size(); ++t)
                        if (F.fiber_labels[ip][t] == X) fiber_out = static_cast<long>(t);
                    if (fiber_out < 0) continue;
                    auto res = fuse_pair(fd, mid.out, 2, ip);
                    Mat full = res.M * mid.M;
                    for (long lr = 0; lr < res.out.dim(); ++lr) {
                        const auto& pout = res.out.paths[lr];
                        SumLegBasis::Elem O;
                        O.labels = {U, ip};
                        O.fibers = {0, fiber_out};
                        O.path = pout;
                        long row = dst.index_of(O);
                        if (row >= 0) M(row, col) += full(lr, local_col);
                    }
                }
            }
            fam.blocks[W] = M;
        }
        F.half_braiding.comp[U] = fam;
    }
    return F;
}

std::vector<Mat> ground_multiplication_table(const ReflectionAlgebra& F) {
    const FusionData& fd = *F.fd;
    long n = F.ground_dim();
    auto it = F.algebra.mult.find({fd.unit, fd.unit, fd.unit});
    std::vector<Mat> table(n, Mat::Zero(n, n));
    if (it == F.algebra.mult.end()) return table;
    for (long z = 0; z < n; ++z)
        for (long x = 0; x < n; ++x)
            for (long y = 0; y < n; ++y) {
                double scale = std::sqrt(fd.qdim[F.ground_basis[x]]) *
                               std::sqrt(fd.qdim[F.ground_basis[y]]) /
                               std::sqrt(fd.qdim[F.ground_basis[z]]);
                table[z](x, y) = it->second(z, x * n + y) * scale;
            }
    return table;
}

Mat ground_star_r_basis(const ReflectionAlgebra& F) {
    const FusionData& fd = *F.fd;
    long n = F.ground_dim();
    Mat S = Mat::Zero(n, n);
    const Mat& raw = F.algebra.star[fd.unit];
    for (long z = 0; z < n; ++z)
        for (long x = 0; x < n; ++x)
            S(z, x) = raw(z, x) * std::sqrt(fd.qdim[F.ground_basis[x]]) /
                      std::sqrt(fd.qdim[F.ground_basis[z]]);
    return S;
}

Vec counit(const ReflectionAlgebra& F) { return Vec::Ones(F.ground_dim()); }

ValidationReport counit_state_check(const ReflectionAlgebra& F, int samples, unsigned seed) {
    ValidationReport rep;
    long n = F.ground_dim();
    auto table = ground_multiplication_table(F);
    Mat S = ground_star_r_basis(F);
    Vec eps = counit(F);

    double unital = std::abs(eps(0) - 1.0);  // R_unit is index 0 iff unit sorts first
    for (long x = 0; x < n; ++x)
        if (F.ground_basis[x] == F.fd->unit) unital = std::abs(eps(x) - 1.0);
    rep.add("counit_unital", unital, kCheckTol);

    double mult = 0.0;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            cplx v = 0.0;
            for (long z = 0; z < n; ++z) v += table[z](x, y) * eps(z);
            mult = std::max(mult, std::abs(v - eps(x) * eps(y)));
        }
    rep.add("counit_multiplicative", mult, kCheckTol);

    double starc = 0.0;
    for (long x = 0; x < n; ++x) {
        cplx v = 0.0;
        for (long z = 0; z < n; ++z) v += S(z, x) * eps(z);
        starc = std::max(starc, std::abs(v - std::conj(eps(x))));
    }
    rep.add("counit_star_compatible", starc, kCheckTol);

    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    double pos = 0.0;
    for (int t = 0; t < samples; ++t) {
        Vec lam(n);
        for (long x = 0; x < n; ++x) lam(x) = cplx(g(rng), g(rng));
        // eps(a* a) with a = sum lam_X R_X
        Vec star_a = Vec::Zero(n);
        for (long z = 0; z < n; ++z)
            for (long x = 0; x < n; ++x) star_a(z) += S(z, x) * std::conj(lam(x));
        cplx val = 0.0;
        for (long x = 0; x < n; ++x)
            for (long y = 0; y < n; ++y) {
                cplx prod_eps = 0.0;
                for (long z = 0; z < n; ++z) prod_eps += table[z](x, y) * eps(z);
                val += star_a(x) * lam(y) * prod_eps;
            }
        cplx s = lam.sum();
        pos = std::max(pos, std::abs(val - std::conj(s) * s));
    }
    rep.add("counit_positivity_identity", pos, kCheckTol);
    return rep;
}

std::vector<double> r_norms(const ReflectionAlgebra& F) {
    // The C*-norm of R_X inside the GNS space of the ground fiber carrying
    // the canonical quantum-dimension-weighted pairing: the norm of the
    // morphism R_X, i.e. the square root of the closed loop R_X^dagger R_X.
    const FusionData& fd = *F.fd;
    std::vector<double> out(F.ground_dim(), 0.0);
    for (long x = 0; x < F.ground_dim(); ++x) {
        int X = F.ground_basis[x];
        Diagram unknot{{Move::cup(1, X, PairSide::LR), Move::cap(1, PairSide::LR)}};
        cplx loop = closed_evaluation(fd, unknot);
        out[x] = std::sqrt(std::abs(loop));
    }
    return out;
}

TwistCandidate parse_twist_candidate(const std::string& name) {
    if (name == "component-twist") return TwistCandidate::ComponentTwist;
    if (name == "pair-twist") return TwistCandidate::PairTwist;
    if (name == "monodromy") return TwistCandidate::Monodromy;
    throw std::runtime_error("unknown twist candidate '" + name + "'");
}

std::string twist_candidate_name(TwistCandidate c) {
    switch (c) {
        case TwistCandidate::ComponentTwist: return "component-twist";
        case TwistCandidate::PairTwist: return "pair-twist";
        case TwistCandidate::Monodromy: return "monodromy";
    }
    return "?";
}

std::vector<Mat> dehn_twist(const ReflectionAlgebra& F, TwistCandidate candidate) {
    const FusionData& fd = *F.fd;
    std::vector<Mat> maps(fd.rank());
    for (int U = 0; U < fd.rank(); ++U) {
        long d = F.algebra.fibers[U];
        maps[U] = Mat::Zero(d, d);
        for (long xi = 0; xi < d; ++xi) {
            int X = F.fiber_labels[U][xi];
            switch (candidate) {
                case TwistCandidate::ComponentTwist:
                    // theta on the whole component Xbar x X; by naturality this
                    // is theta_U on the fiber.
                    maps[U](xi, xi) = fd.twist[U];
                    break;
                case TwistCandidate::PairTwist:
                    maps[U](xi, xi) = fd.twist[fd.dual[X]] * fd.twist[X];
                    break;
                case TwistCandidate::Monodromy:
                    // Double braiding = theta_U / (theta_Xbar theta_X).
                    maps[U](xi, xi) =
                        fd.twist[U] / (fd.twist[fd.dual[X]] * fd.twist[X]);
                    break;
            }
        }
    }
    return maps;
}

McgCheck verify_mcg(const ReflectionAlgebra& F, TwistCandidate candidate) {
    const FusionData& fd = *F.fd;
    auto maps = dehn_twist(F, candidate);
    McgCheck out;
    out.candidate = candidate;

    long n = F.ground_dim();
    out.fixes_ground_residual = max_abs(maps[fd.unit] - Mat::Identity(n, n));

    // eps o delta = eps on the ground fiber (delta is diagonal there).
    Vec eps = counit(F);
    double counit_res = 0.0;
    for (long x = 0; x < n; ++x)
        counit_res = std::max(counit_res, std::abs(maps[fd.unit](x, x) * eps(x) - eps(x)));
    out.counit_invariance = counit_res;

    // Algebra and star compatibility of the fiberwise maps.
    double autom = 0.0;
    for (auto& [key, T] : F.algebra.mult) {
        auto [U, V, W] = key;
        long dU = F.algebra.fibers[U], dV = F.algebra.fibers[V];
        Mat lhs = maps[W] * T;
        Mat rhs = Mat::Zero(T.rows(), T.cols());
        for (long c = 0; c < T.cols(); ++c) {
            long xi = c / dV, yi = c % dV;
            for (long xo = 0; xo < dU; ++xo)
                for (long yo = 0; yo < dV; ++yo)
                    rhs.col(c) += T.col(xo * dV + yo) * maps[U](xo, xi) * maps[V](yo, yi);
        }
        autom = std::max(autom, max_abs(lhs - rhs));
    }
    for (int U = 0; U < fd.rank(); ++U) {
        if (F.algebra.fibers[U] == 0) continue;
        int Ub = fd.dual[U];
        Mat lhs = F.algebra.star[U] * maps[U].conjugate();
        Mat rhs = maps[Ub] * F.algebra.star[U];
        autom = std::max(autom, max_abs(lhs - rhs));
    }
    out.automorphism_residual = autom;
    return out;
}

}  // namespace surfhom
