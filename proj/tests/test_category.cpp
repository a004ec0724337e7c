#include <doctest.h>

#include <random>

#include "surfhom/category.hpp"

using namespace surfhom;

namespace {

std::mt19937 rng(20240811);

Mat random_mat(long rows, long cols) {
    std::normal_distribution<double> g;
    Mat m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
    return m;
}

Mor random_mor(const Obj& src, const Obj& tgt) {
    Mor f(src, tgt);
    for (auto& [i, b] : f.blocks) b = random_mat(b.rows(), b.cols());
    return f;
}

// Independent naive triple-loop multiply.
Mat naive_product(const Mat& a, const Mat& b) {
    Mat c = Mat::Zero(a.rows(), b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j)
            for (long k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
}

// Independent rank via row-reduction with partial pivoting.
long gauss_rank(Mat m, double tol) {
    long rank = 0;
    for (long col = 0; col < m.cols() && rank < m.rows(); ++col) {
        long piv = -1;
        double best = tol;
        for (long r = rank; r < m.rows(); ++r)
            if (std::abs(m(r, col)) > best) { best = std::abs(m(r, col)); piv = r; }
        if (piv < 0) continue;
        m.row(rank).swap(m.row(piv));
        for (long r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            m.row(r) -= (m(r, col) / m(rank, col)) * m.row(rank);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("compose: identity, isometry projection, naive oracle") {
    Obj x = Obj::simple(0, 2) + Obj::simple(1, 3);
    Obj y = Obj::simple(0, 3) + Obj::simple(1, 2);
    Mor f = random_mor(x, y);

    Mor idf = compose(Mor::identity(y), f);
    for (auto& [i, b] : idf.blocks) CHECK(max_abs(b - f.block(i)) < kEntryTol);

    // Isometry from a QR factor; f o f^dagger is then an orthogonal projection.
    Obj small = Obj::simple(0, 2);
    Obj big = Obj::simple(0, 5);
    Mor iso(small, big);
    Eigen::HouseholderQR<Mat> qr(random_mat(5, 2));
    iso.block(0) = Mat(qr.householderQ()).leftCols(2);
    Mor p = compose(iso, dagger(iso));
    CHECK(max_abs(compose(p, p).block(0) - p.block(0)) < kEntryTol);
    CHECK(max_abs(dagger(p).block(0) - p.block(0)) < kEntryTol);

    // 2x3 against 3x2, checked against the naive triple loop.
    Obj a2 = Obj::simple(0, 2), a3 = Obj::simple(0, 3);
    Mor g = random_mor(a2, a3), h = random_mor(a3, a2);
    Mor prod = compose(h, g);
    CHECK(max_abs(prod.block(0) - naive_product(h.block(0), g.block(0))) < kEntryTol);

    CHECK_THROWS_AS(compose(g, g), composition_error);
}

TEST_CASE("dagger: involution, entrywise oracle, antilinearity") {
    Obj x = Obj::simple(0, 2) + Obj::simple(2, 4);
    Obj y = Obj::simple(0, 3) + Obj::simple(2, 1);
    Mor f = random_mor(x, y);

    CHECK(max_abs(dagger(Mor::identity(x)).block(0) - Mat::Identity(2, 2)) == 0.0);

    Mor ff = dagger(dagger(f));
    for (auto& [i, b] : ff.blocks) CHECK(max_abs(b - f.block(i)) == 0.0);

    Mor fd = dagger(f);
    for (auto& [i, b] : fd.blocks)
        for (long r = 0; r < b.rows(); ++r)
            for (long c = 0; c < b.cols(); ++c)
                CHECK(std::abs(b(r, c) - std::conj(f.block(i)(c, r))) == 0.0);

    Mor g = random_mor(x, y);
    cplx alpha(0.7, -1.3);
    Mor lhs = dagger(alpha * f + g);
    Mor rhs = std::conj(alpha) * dagger(f) + dagger(g);
    for (auto& [i, b] : lhs.blocks) CHECK(max_abs(b - rhs.block(i)) < kEntryTol);
}

TEST_CASE("norm: identity, C*-identity, eigenvalue oracle") {
    Obj x = Obj::simple(0, 3) + Obj::simple(1, 2);
    CHECK(norm(Mor::identity(x)) == doctest::Approx(1.0));
    CHECK(norm(Mor::zero(x, x)) == 0.0);

    for (int trial = 0; trial < 1000; ++trial) {
        Mor f = random_mor(x, x);
        double n = norm(f);
        CHECK(norm(compose(dagger(f), f)) == doctest::Approx(n * n).epsilon(kNormTol));
    }

    // Largest singular value from an independent Hermitian eigensolve of f^dagger f.
    Mor f = random_mor(x, x);
    double expected = 0.0;
    for (auto& [i, b] : f.blocks) {
        Eigen::SelfAdjointEigenSolver<Mat> es(b.adjoint() * b);
        expected = std::max(expected, std::sqrt(es.eigenvalues().maxCoeff()));
    }
    CHECK(norm(f) == doctest::Approx(expected).epsilon(kNormTol));
}

TEST_CASE("norm submultiplicativity") {
    Obj x = Obj::simple(0, 3) + Obj::simple(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        Mor f = random_mor(x, x), g = random_mor(x, x);
        CHECK(norm(compose(f, g)) <= norm(f) * norm(g) * (1 + kNormTol));
    }
}

TEST_CASE("coequalizer: degenerate and random instances") {
    Obj x = Obj::simple(0, 3) + Obj::simple(1, 2);
    Mor f = random_mor(x, x);

    // f = g: Q isomorphic to the target, q unitary.
    auto [q_obj, q] = coequalizer(f, f);
    CHECK(q_obj == x);
    for (auto& [i, b] : q.blocks)
        CHECK(max_abs(b * b.adjoint() - Mat::Identity(b.rows(), b.rows())) < kEntryTol);

    // f = id, g = 0 on a nonzero object: Q = 0.
    auto [z_obj, zq] = coequalizer(Mor::identity(x), Mor::zero(x, x));
    CHECK(z_obj.is_zero());

    for (int trial = 0; trial < 50; ++trial) {
        Obj src = Obj::simple(0, 4) + Obj::simple(1, 3);
        Obj tgt = Obj::simple(0, 3) + Obj::simple(1, 5);
        Mor a = random_mor(src, tgt), b = random_mor(src, tgt);
        if (trial % 3 == 0) b = a;            // zero difference
        if (trial % 5 == 0) {                 // rank-deficient difference
            b = a;
            b.block(0) += random_mat(3, 1) * random_mat(1, 4);
        }
        auto [qo, qm] = coequalizer(a, b);

        Mor qa = compose(qm, a), qb = compose(qm, b);
        for (auto& [i, blk] : qa.blocks) CHECK(max_abs(blk - qb.block(i)) < 1e-7);

        Mor qq = compose(qm, dagger(qm));
        for (auto& [i, blk] : qq.blocks)
            CHECK(max_abs(blk - Mat::Identity(blk.rows(), blk.cols())) < kEntryTol);

        // Cokernel dimension against an independent rank computation.
        Mor d = a - b;
        for (auto& [i, blk] : d.blocks) {
            long rank = gauss_rank(blk, 1e-7);
            CHECK(qo(i) == tgt(i) - rank);
        }
    }
}

TEST_CASE("coequalizer universal property against brute-force kernel") {
    // Any h with h f = h g factors through q: h = (h q^dagger) q.
    Obj src = Obj::simple(0, 3);
    Obj tgt = Obj::simple(0, 4);
    Mor a = random_mor(src, tgt), b = a;
    b.block(0) += random_mat(4, 1) * random_mat(1, 3);
    auto [qo, qm] = coequalizer(a, b);

    // Brute force: h rows spanning the left null space of (a - b).
    Mat d = (a - b).block(0);
    Eigen::FullPivLU<Mat> lu(d.adjoint());
    Mat null = lu.kernel();  // columns span ker(d^adjoint) = coker(d)
    CHECK(null.cols() == qo(0));
    Mor h(tgt, Obj::simple(0, null.cols()));
    h.block(0) = null.adjoint();
    Mor factored = compose(compose(h, dagger(qm)), qm);
    CHECK(max_abs(factored.block(0) - h.block(0)) < 1e-7);
}

TEST_CASE("direct_sum: unit, multiplicities, range decomposition") {
    Obj x = Obj::simple(0, 1) + Obj::simple(1, 2);
    Obj y = Obj::simple(1, 3);

    auto ds0 = direct_sum(x, Obj::zero());
    CHECK(ds0.sum == x);

    auto ds = direct_sum(x, y);
    CHECK(ds.sum(0) == 1);
    CHECK(ds.sum(1) == 5);

    // iota1 iota1^dagger + iota2 iota2^dagger = id on the sum; the transposed
    // combination is the identity on each summand instead.
    Mor p1 = compose(ds.inj1, ds.proj1);
    Mor p2 = compose(ds.inj2, ds.proj2);
    Mor idsum = Mor::identity(ds.sum);
    for (auto& [i, b] : idsum.blocks) {
        Mat got = Mat::Zero(b.rows(), b.cols());
        if (p1.has_block(i)) got += p1.block(i);
        if (p2.has_block(i)) got += p2.block(i);
        CHECK(max_abs(got - b) < kEntryTol);
    }
    Mor i1 = compose(ds.proj1, ds.inj1);
    for (auto& [i, b] : i1.blocks)
        CHECK(max_abs(b - Mat::Identity(b.rows(), b.cols())) < kEntryTol);
}
