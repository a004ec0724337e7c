#include <doctest.h>

#include <random>

#include "surfhom/gns.hpp"
#include "surfhom/reflection.hpp"

using namespace surfhom;

namespace {
const char* kFixtures[] = {"trivial", "pointed:2:0", "pointed:2:1/2", "pointed:4:1/4", "fib",
                           "ising"};
}

TEST_CASE("fiber dimensions of the reflection algebra") {
    FusionData triv = builtin_category("trivial");
    ReflectionAlgebra Ft = build_reflection_algebra(triv);
    CHECK(Ft.algebra.fibers[0] == 1);
    CHECK(Ft.ground_dim() == 1);

    FusionData ising = builtin_category("ising");
    ReflectionAlgebra Fi = build_reflection_algebra(ising);
    CHECK(Fi.algebra.fibers[ising.index_of("1")] == 3);
    CHECK(Fi.algebra.fibers[ising.index_of("psi")] == 1);
    CHECK(Fi.algebra.fibers[ising.index_of("sigma")] == 0);

    FusionData fib = builtin_category("fib");
    ReflectionAlgebra Ff = build_reflection_algebra(fib);
    CHECK(Ff.algebra.fibers[fib.unit] == 2);
    CHECK(Ff.algebra.fibers[fib.index_of("tau")] == 1);

    // dim F(unit) = number of simples, on every fixture.
    for (const char* name : kFixtures) {
        FusionData fd = builtin_category(name);
        ReflectionAlgebra F = build_reflection_algebra(fd);
        CHECK(F.ground_dim() == fd.rank());
        for (int U = 0; U < fd.rank(); ++U) {
            long expect = 0;
            for (int X = 0; X < fd.rank(); ++X) expect += fd.N(fd.dual[X], X, U);
            CHECK(F.algebra.fibers[U] == expect);
        }
    }
}

TEST_CASE("reflection algebra is a C*-algebra object with YD half-braiding") {
    for (const char* name : kFixtures) {
        INFO("fixture ", name);
        FusionData fd = builtin_category(name);
        ReflectionAlgebra F = build_reflection_algebra(fd);
        auto rep = check_cstar_algebra(F.algebra);
        INFO("cstar max residual ", rep.max_residual());
        CHECK(rep.pass());
        auto yd = verify_yd(F.algebra, F.half_braiding);
        INFO("yd max residual ", yd.max_residual());
        CHECK(yd.pass());
        CHECK(yd.residual_of("yetter_drinfeld_equation") < kCheckTol);
    }
}

namespace {

HalfBraiding identity_half_braiding(const FusionData& fd, const AlgebraObject& A) {
    HalfBraiding triv;
    Obj a = A.object();
    for (int U = 0; U < fd.rank(); ++U) {
        Family fam;
        fam.src_legs = {a, Obj::simple(U)};
        fam.dst_legs = {Obj::simple(U), a};
        for (int W = 0; W < fd.rank(); ++W) {
            SumLegBasis src = sum_basis(fd, fam.src_legs, W);
            SumLegBasis dst = sum_basis(fd, fam.dst_legs, W);
            Mat M = Mat::Zero(dst.dim(), src.dim());
            for (long c = 0; c < src.dim(); ++c) {
                SumLegBasis::Elem e = src.elems[c];
                std::swap(e.labels[0], e.labels[1]);
                std::swap(e.fibers[0], e.fibers[1]);
                e.path[0] = e.labels[0];
                long r = dst.index_of(e);
                if (r >= 0) M(r, c) = 1.0;
            }
            fam.blocks[W] = M;
        }
        triv.comp[U] = fam;
    }
    return triv;
}

}  // namespace

TEST_CASE("identity half-braiding controls") {
    // On a pointed category the reflection algebra is concentrated in the
    // unit fiber, so the coefficient-one flip is a legitimate (trivial)
    // half-braiding and the verifier accepts it.
    FusionData z4 = builtin_category("pointed:4:1/4");
    ReflectionAlgebra F4 = build_reflection_algebra(z4);
    auto yd4 = verify_yd(F4.algebra, identity_half_braiding(z4, F4.algebra));
    CHECK(yd4.residual_of("yetter_drinfeld_equation") < kCheckTol);

    // With a nontrivial associator the flip is not coherent and the
    // verifier rejects it.
    FusionData fib = builtin_category("fib");
    ReflectionAlgebra Ff = build_reflection_algebra(fib);
    auto ydf = verify_yd(Ff.algebra, identity_half_braiding(fib, Ff.algebra));
    CHECK_FALSE(ydf.pass());

    FusionData ising = builtin_category("ising");
    ReflectionAlgebra Fi = build_reflection_algebra(ising);
    auto ydi = verify_yd(Fi.algebra, identity_half_braiding(ising, Fi.algebra));
    CHECK_FALSE(ydi.pass());
}

TEST_CASE("deliberately broken star fails the C*-battery") {
    FusionData fd = builtin_category("fib");
    ReflectionAlgebra F = build_reflection_algebra(fd);
    F.algebra.star[fd.unit] *= 2.0;
    auto rep = check_cstar_algebra(F.algebra);
    CHECK_FALSE(rep.pass());
    CHECK(rep.residual_of("star_involution") > 0.5);
}

TEST_CASE("ground multiplication tables") {
    // Symmetric pointed Z/2: commutative group table.
    FusionData z2 = builtin_category("pointed:2:0");
    ReflectionAlgebra F2 = build_reflection_algebra(z2);
    auto tab2 = ground_multiplication_table(F2);
    for (long x = 0; x < 2; ++x)
        for (long y = 0; y < 2; ++y)
            for (long z = 0; z < 2; ++z) {
                CHECK(max_abs(tab2[z] - tab2[z].transpose()) < kCheckTol);  // commutative
                cplx expect = ((x + y) % 2 == z) ? 1.0 : 0.0;
                CHECK(std::abs(tab2[z](x, y) - expect) < kCheckTol);
            }

    // Fibonacci: R_tau^2 = 1/phi^2 R_1 + 1/phi R_tau, the unique unital
    // YD-compatible table with multiplicative counit.
    FusionData fib = builtin_category("fib");
    ReflectionAlgebra Ff = build_reflection_algebra(fib);
    auto tab = ground_multiplication_table(Ff);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    long t = -1;
    for (long i = 0; i < Ff.ground_dim(); ++i)
        if (Ff.ground_basis[i] == fib.index_of("tau")) t = i;
    long u = 1 - t;
    CHECK(std::abs(tab[u](t, t) - cplx(1.0 / (phi * phi))) < kCheckTol);
    CHECK(std::abs(tab[t](t, t) - cplx(1.0 / phi)) < kCheckTol);

    // Independent evaluation-order oracle: the same structure constants
    // from the inverse-braid schedule (crossing the other way, weights
    // conjugated), which must agree after the ribbon correction; here we
    // simply recompute through the algebra's own associativity:
    // (R_tau R_tau) R_tau vs R_tau (R_tau R_tau) expanded by the table.
    Vec lhs = Vec::Zero(2), rhs = Vec::Zero(2);
    for (long z = 0; z < 2; ++z)
        for (long w = 0; w < 2; ++w) {
            lhs(w) += tab[z](t, t) * tab[w](z, t);
            rhs(w) += tab[z](t, t) * tab[w](t, z);
        }
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < kCheckTol);
}

TEST_CASE("counit battery") {
    for (const char* name : kFixtures) {
        INFO("fixture ", name);
        FusionData fd = builtin_category(name);
        ReflectionAlgebra F = build_reflection_algebra(fd);
        auto rep = counit_state_check(F, 100);
        INFO("counit max residual ", rep.max_residual());
        CHECK(rep.pass());
    }

    // eps(a^dagger a) = |sum lambda|^2: explicit witness a = R_1 - R_tau.
    FusionData fib = builtin_category("fib");
    ReflectionAlgebra F = build_reflection_algebra(fib);
    auto tab = ground_multiplication_table(F);
    Mat S = ground_star_r_basis(F);
    Vec lam(2);
    lam << 1.0, -1.0;
    Vec star_a = S * lam.conjugate();
    cplx val = 0.0;
    for (long x = 0; x < 2; ++x)
        for (long y = 0; y < 2; ++y)
            for (long z = 0; z < 2; ++z) val += star_a(x) * lam(y) * tab[z](x, y);
    CHECK(std::abs(val) < kCheckTol);
}

TEST_CASE("R-norms match quantum dimensions") {
    for (const char* name : kFixtures) {
        FusionData fd = builtin_category(name);
        ReflectionAlgebra F = build_reflection_algebra(fd);
        auto norms = r_norms(F);
        for (long x = 0; x < F.ground_dim(); ++x) {
            double d = fd.qdim[F.ground_basis[x]];
            CHECK(std::abs(norms[x] * norms[x] - d) < 1e-6);
        }
    }
    FusionData fib = builtin_category("fib");
    ReflectionAlgebra Ff = build_reflection_algebra(fib);
    auto nf = r_norms(Ff);
    for (long x = 0; x < Ff.ground_dim(); ++x)
        if (Ff.ground_basis[x] == fib.index_of("tau"))
            CHECK(nf[x] == doctest::Approx(1.2720196).epsilon(1e-6));
    FusionData ising = builtin_category("ising");
    ReflectionAlgebra Fi = build_reflection_algebra(ising);
    auto ni = r_norms(Fi);
    for (long x = 0; x < Fi.ground_dim(); ++x)
        if (Fi.ground_basis[x] == ising.index_of("sigma"))
            CHECK(ni[x] == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-6));
}

TEST_CASE("mapping class group candidate battery") {
    // Component twist fixes every R_X, hence the counit, on all fixtures.
    for (const char* name : kFixtures) {
        FusionData fd = builtin_category(name);
        ReflectionAlgebra F = build_reflection_algebra(fd);
        auto mc = verify_mcg(F, TwistCandidate::ComponentTwist);
        CHECK(mc.fixes_ground_residual == 0.0);
        CHECK(mc.counit_invariance == 0.0);
    }

    // Monodromy rescales R_tau by the inverse double twist and is flagged.
    FusionData fib = builtin_category("fib");
    ReflectionAlgebra F = build_reflection_algebra(fib);
    auto maps = dehn_twist(F, TwistCandidate::Monodromy);
    long t = -1;
    for (long i = 0; i < F.ground_dim(); ++i)
        if (F.ground_basis[i] == fib.index_of("tau")) t = i;
    cplx expected = std::conj(fib.twist[fib.index_of("tau")] * fib.twist[fib.index_of("tau")]);
    CHECK(std::abs(maps[fib.unit](t, t) - expected) < kCheckTol);
    auto mc = verify_mcg(F, TwistCandidate::Monodromy);
    CHECK(mc.counit_invariance > 1e-3);

    auto pc = verify_mcg(F, TwistCandidate::PairTwist);
    CHECK(pc.counit_invariance > 1e-3);

    // Trivial category: all candidates are the identity.
    FusionData triv = builtin_category("trivial");
    ReflectionAlgebra Ft = build_reflection_algebra(triv);
    for (auto cand : {TwistCandidate::ComponentTwist, TwistCandidate::PairTwist,
                      TwistCandidate::Monodromy}) {
        auto m = verify_mcg(Ft, cand);
        CHECK(m.fixes_ground_residual < kCheckTol);
        CHECK(m.counit_invariance < kCheckTol);
        CHECK(m.automorphism_residual < kCheckTol);
    }

    CHECK_THROWS(parse_twist_candidate("bogus"));
}

TEST_CASE("gram of the counit state has nullity |Irr|-1") {
    // The counit is a character, so its Gram matrix is rank one.
    FusionData ising = builtin_category("ising");
    ReflectionAlgebra F = build_reflection_algebra(ising);
    GroundAlgebra B = ground_algebra(F.algebra);
    // state in the isometry basis: eps(b_X) = 1/sqrt(d_X)
    Vec omega(B.dimension);
    for (long i = 0; i < B.dimension; ++i)
        omega(i) = 1.0 / std::sqrt(ising.qdim[F.ground_basis[i]]);
    GnsResult g = gns(B, omega);
    CHECK(g.kernel_dim == 2);
    CHECK_FALSE(g.state_faithful);
}
