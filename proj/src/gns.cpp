#include "surfhom/gns.hpp"

#include <random>

namespace surfhom {

GroundAlgebra ground_algebra(const AlgebraObject& A) {
    const FusionData& fd = *A.fd;
    GroundAlgebra B;
    B.dimension = A.fiber_dim(fd.unit);
    for (long i = 0; i < B.dimension; ++i) B.basis_labels.push_back("e" + std::to_string(i));
    B.c.assign(B.dimension, Mat::Zero(B.dimension, B.dimension));
    auto it = A.mult.find({fd.unit, fd.unit, fd.unit});
    if (it != A.mult.end())
        for (long z = 0; z < B.dimension; ++z)
            for (long x = 0; x < B.dimension; ++x)
                for (long y = 0; y < B.dimension; ++y)
                    B.c[z](x, y) = it->second(z, x * B.dimension + y);
    B.star = A.star[fd.unit];
    B.unit = A.unit;
    return B;
}

GroundAlgebra matrix_algebra(long n) {
    GroundAlgebra B;
    B.dimension = n * n;
    B.c.assign(B.dimension, Mat::Zero(B.dimension, B.dimension));
    B.star = Mat::Zero(B.dimension, B.dimension);
    B.unit = Vec::Zero(B.dimension);
    auto idx = [n](long i, long j) { return i * n + j; };
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            B.basis_labels.push_back("e" + std::to_string(i) + std::to_string(j));
            B.star(idx(j, i), idx(i, j)) = 1.0;
            for (long k = 0; k < n; ++k)
                B.c[idx(i, k)](idx(i, j), idx(j, k)) = 1.0;  // e_ij e_jk = e_ik
            if (i == j) B.unit(idx(i, i)) = 1.0;
        }
    return B;
}

Vec matrix_trace_state(long n) {
    Vec w = Vec::Zero(n * n);
    for (long i = 0; i < n; ++i) w(i * n + i) = 1.0 / static_cast<double>(n);
    return w;
}

GnsResult gns(const GroundAlgebra& B, const Vec& omega) {
    const long d = B.dimension;
    GnsResult g;
    g.gram = Mat::Zero(d, d);
    for (long x = 0; x < d; ++x) {
        Vec ex = Vec::Zero(d);
        ex(x) = 1.0;
        Vec xs = B.star_of(ex);
        Mat L = B.left_mult(xs);
        for (long y = 0; y < d; ++y) {
            Vec prod = L.col(y);
            cplx v = 0.0;
            for (long z = 0; z < d; ++z) v += omega(z) * prod(z);
            g.gram(x, y) = v;
        }
    }
    // omega positivity on the sampled basis combinations.
    double floor = min_hermitian_eigenvalue(g.gram);
    if (floor < -1e-9 * std::max(1.0, max_abs(g.gram)))
        throw gns_error("state is not positive: Gram floor " + std::to_string(floor));

    Eigen::SelfAdjointEigenSolver<Mat> es((g.gram + g.gram.adjoint()) / 2.0);
    Vec evals = es.eigenvalues();
    double lmax = std::max(1e-300, evals.real().maxCoeff());
    double cut = 1e-9 * std::max(1.0, lmax);
    std::vector<long> keep;
    for (long i = 0; i < d; ++i)
        if (evals(i).real() > cut) keep.push_back(i);
    long rank = static_cast<long>(keep.size());
    g.kernel_dim = d - rank;
    g.to_gns = Mat::Zero(rank, d);
    g.from_gns = Mat::Zero(d, rank);
    for (long r = 0; r < rank; ++r) {
        double s = evals(keep[r]).real();
        g.to_gns.row(r) = std::sqrt(s) * es.eigenvectors().col(keep[r]).adjoint();
        g.from_gns.col(r) = es.eigenvectors().col(keep[r]) / std::sqrt(s);
    }
    g.cyclic = g.to_gns * B.unit;

    g.rep.resize(d);
    Mat stacked = Mat::Zero(rank * rank, d);
    for (long x = 0; x < d; ++x) {
        Vec ex = Vec::Zero(d);
        ex(x) = 1.0;
        g.rep[x] = g.to_gns * B.left_mult(ex) * g.from_gns;
        stacked.col(x) = Eigen::Map<const Vec>(g.rep[x].data(), rank * rank);
    }
    g.state_faithful = (g.kernel_dim == 0);
    if (d > 0 && rank > 0) {
        Eigen::JacobiSVD<Mat> svd(stacked);
        const auto& sv = svd.singularValues();
        long mrank = 0;
        for (long i = 0; i < sv.size(); ++i)
            if (sv(i) > 1e-9 * std::max(1.0, sv(0))) ++mrank;
        g.rep_injective = (mrank == d);
    }
    return g;
}

double gns_operator_norm(const GnsResult& g, const GroundAlgebra& B, const Vec& element) {
    return spectral_norm(g.to_gns * B.left_mult(element) * g.from_gns);
}

// ---------------------------------------------------------------------------
// realizations

ValidationReport RealizationDatum::check() const {
    ValidationReport rep;
    const FusionData& f = *fd;
    const int r = f.rank();

    double assoc = 0.0;
    for (int X = 0; X < r; ++X)
        for (int Y = 0; Y < r; ++Y)
            for (int Z = 0; Z < r; ++Z) {
                // (xi eta) zeta vs xi (eta zeta) through all channels
                for (int XY = 0; XY < r; ++XY) {
                    auto it1 = h_mult.find({X, Y, XY});
                    if (it1 == h_mult.end()) continue;
                    for (int XYZ = 0; XYZ < r; ++XYZ) {
                        auto it2 = h_mult.find({XY, Z, XYZ});
                        if (it2 == h_mult.end()) continue;
                        Mat lhs = Mat::Zero(h_dims[XYZ], h_dims[X] * h_dims[Y] * h_dims[Z]);
                        for (long a = 0; a < h_dims[X]; ++a)
                            for (long b = 0; b < h_dims[Y]; ++b)
                                for (long cc = 0; cc < h_dims[Z]; ++cc)
                                    for (long m = 0; m < h_dims[XY]; ++m)
                                        lhs.col((a * h_dims[Y] + b) * h_dims[Z] + cc) +=
                                            it2->second.col(m * h_dims[Z] + cc) *
                                            it1->second(m, a * h_dims[Y] + b);
                        Mat rhs = Mat::Zero(h_dims[XYZ], h_dims[X] * h_dims[Y] * h_dims[Z]);
                        for (int YZ = 0; YZ < r; ++YZ) {
                            auto it3 = h_mult.find({Y, Z, YZ});
                            auto it4 = h_mult.find({X, YZ, XYZ});
                            if (it3 == h_mult.end() || it4 == h_mult.end()) continue;
                            for (long a = 0; a < h_dims[X]; ++a)
                                for (long b = 0; b < h_dims[Y]; ++b)
                                    for (long cc = 0; cc < h_dims[Z]; ++cc)
                                        for (long m = 0; m < h_dims[YZ]; ++m)
                                            rhs.col((a * h_dims[Y] + b) * h_dims[Z] + cc) +=
                                                it4->second.col(a * h_dims[YZ] + m) *
                                                it3->second(m, b * h_dims[Z] + cc);
                        }
                        assoc = std::max(assoc, max_abs(lhs - rhs));
                    }
                }
            }
    rep.add("realization_associativity", assoc, kCheckTol);

    double invol = 0.0;
    for (int X = 0; X < r; ++X) {
        if (h_dims[X] == 0) continue;
        Mat round = h_star[f.dual[X]] * h_star[X].conjugate();
        invol = std::max(invol, max_abs(round - Mat::Identity(round.rows(), round.cols())));
    }
    rep.add("realization_star_involution", invol, kCheckTol);

    // Faithful positive trace on the unit block.
    Mat G = Mat::Zero(h_dims[f.unit], h_dims[f.unit]);
    auto itu = h_mult.find({f.unit, f.unit, f.unit});
    if (itu != h_mult.end())
        for (long p = 0; p < h_dims[f.unit]; ++p)
            for (long q = 0; q < h_dims[f.unit]; ++q) {
                Vec sp = h_star[f.unit].col(p);
                cplx val = 0.0;
                for (long m = 0; m < h_dims[f.unit]; ++m)
                    for (long z = 0; z < h_dims[f.unit]; ++z)
                        val += sp(m) * itu->second(z, m * h_dims[f.unit] + q) * trace(z);
                G(p, q) = val;
            }
    double tposfloor = min_hermitian_eigenvalue(G);
    rep.add("trace_positive_definite", tposfloor > 1e-12 ? 0.0 : 1.0, 0.5);
    return rep;
}

RealizationDatum regular_pointed_realization(const FusionData& fd) {
    // Requires a symmetric braiding; detect via double braidings.
    for (int a = 0; a < fd.rank(); ++a)
        for (int b = 0; b < fd.rank(); ++b)
            for (int cc = 0; cc < fd.rank(); ++cc) {
                if (fd.N(a, b, cc) < 1) continue;
                if (std::abs(fd.R(a, b, cc) * fd.R(b, a, cc) - 1.0) > 1e-9)
                    throw gns_error("regular realization needs a symmetric pointed category");
            }
    for (int a = 0; a < fd.rank(); ++a)
        for (int b = 0; b < fd.rank(); ++b) {
            long total = 0;
            for (int cc = 0; cc < fd.rank(); ++cc) total += fd.N(a, b, cc);
            if (total != 1) throw gns_error("regular realization needs a pointed category");
        }

    const int n = fd.rank();
    RealizationDatum H;
    H.fd = &fd;
    H.h_dims.assign(n, n);  // functions on the group
    // group law from the fusion rules
    auto prod = [&](int g, int h) {
        for (int k = 0; k < n; ++k)
            if (fd.N(g, h, k) == 1) return k;
        return -1;
    };
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int gh = prod(g, h);
            Mat T = Mat::Zero(n, static_cast<long>(n) * n);
            // (xi eta)(x) = xi(x) eta(x + g): basis delta_x
            for (int x = 0; x < n; ++x) {
                int xg = prod(x, g);
                T(x, static_cast<long>(x) * n + xg) = 1.0;
            }
            H.h_mult[{g, h, gh}] = T;
        }
    H.h_star.assign(n, Mat::Zero(n, n));
    for (int g = 0; g < n; ++g) {
        int ginv = fd.dual[g];
        // (xi*)(x) = conj(xi(x - g)) = conj(xi(x + ginv))
        for (int x = 0; x < n; ++x) {
            int shifted = prod(x, ginv);
            H.h_star[g](x, shifted) = 1.0;
        }
    }
    H.trace = Vec::Constant(n, 1.0 / n);
    return H;
}

RealizationDatum trivial_realization(const FusionData& fd) {
    if (fd.rank() != 1) throw gns_error("trivial realization needs the trivial category");
    RealizationDatum H;
    H.fd = &fd;
    H.h_dims = {1};
    H.h_mult[{0, 0, 0}] = Mat::Ones(1, 1);
    H.h_star = {Mat::Ones(1, 1)};
    H.trace = Vec::Ones(1);
    return H;
}

RealizedElement realized_zero(const RealizationDatum& H, const AlgebraObject& A) {
    RealizedElement e;
    e.parts.resize(H.fd->rank());
    for (int X = 0; X < H.fd->rank(); ++X)
        e.parts[X] = Mat::Zero(H.h_dims[X], A.fiber_dim(X));
    return e;
}

RealizedElement realized_mult(const RealizationDatum& H, const AlgebraObject& A,
                              const RealizedElement& a, const RealizedElement& b) {
    RealizedElement out = realized_zero(H, A);
    for (auto& [key, T] : A.mult) {
        auto [X, Y, Z] = key;
        auto ith = H.h_mult.find(key);
        if (ith == H.h_mult.end()) continue;
        const Mat& Th = ith->second;
        long dVY = A.fiber_dim(Y);
        for (long hx = 0; hx < H.h_dims[X]; ++hx)
            for (long fx = 0; fx < A.fiber_dim(X); ++fx) {
                cplx av = a.parts[X](hx, fx);
                if (std::abs(av) < 1e-16) continue;
                for (long hy = 0; hy < H.h_dims[Y]; ++hy)
                    for (long fy = 0; fy < A.fiber_dim(Y); ++fy) {
                        cplx bv = b.parts[Y](hy, fy);
                        if (std::abs(bv) < 1e-16) continue;
                        for (long hz = 0; hz < H.h_dims[Z]; ++hz) {
                            cplx hcoef = Th(hz, hx * H.h_dims[Y] + hy);
                            if (std::abs(hcoef) < 1e-16) continue;
                            for (long fz = 0; fz < A.fiber_dim(Z); ++fz)
                                out.parts[Z](hz, fz) +=
                                    av * bv * hcoef * T(fz, fx * dVY + fy);
                        }
                    }
            }
    }
    return out;
}

RealizedElement realized_star(const RealizationDatum& H, const AlgebraObject& A,
                              const RealizedElement& a) {
    RealizedElement out = realized_zero(H, A);
    for (int X = 0; X < H.fd->rank(); ++X) {
        int Xb = H.fd->dual[X];
        if (H.h_dims[X] == 0 || A.fiber_dim(X) == 0) continue;
        out.parts[Xb] += H.h_star[X] * a.parts[X].conjugate() * A.star[X].transpose();
    }
    return out;
}

cplx tau_omega(const RealizationDatum& H, const AlgebraObject& A, const Vec& omega,
               const RealizedElement& a) {
    const int u = H.fd->unit;
    cplx val = 0.0;
    for (long h = 0; h < H.h_dims[u]; ++h)
        for (long f = 0; f < A.fiber_dim(u); ++f)
            val += H.trace(h) * omega(f) * a.parts[u](h, f);
    return val;
}

WeightedHilbert weighted_hilbert(const RealizationDatum& H, const AlgebraObject& A,
                                 const Vec& omega) {
    const FusionData& fd = *H.fd;
    WeightedHilbert W;
    W.H = &H;
    W.A = &A;
    W.omega = omega;
    W.h_form.resize(fd.rank());
    W.fiber_form.resize(fd.rank());
    for (int X = 0; X < fd.rank(); ++X) {
        int Xb = fd.dual[X];
        long dh = H.h_dims[X], df = A.fiber_dim(X);
        W.h_form[X] = Mat::Zero(dh, dh);
        W.fiber_form[X] = Mat::Zero(df, df);
        auto ith = H.h_mult.find({Xb, X, fd.unit});
        if (ith != H.h_mult.end())
            for (long p = 0; p < dh; ++p)
                for (long q = 0; q < dh; ++q) {
                    Vec sp = H.h_star[X].col(p);
                    cplx v = 0.0;
                    for (long m = 0; m < H.h_dims[Xb]; ++m)
                        for (long z = 0; z < H.h_dims[fd.unit]; ++z)
                            v += sp(m) * ith->second(z, m * dh + q) * H.trace(z);
                    W.h_form[X](p, q) = std::sqrt(fd.qdim[X]) * v;
                }
        auto ita = A.mult.find({Xb, X, fd.unit});
        if (ita != A.mult.end())
            for (long p = 0; p < df; ++p)
                for (long q = 0; q < df; ++q) {
                    Vec sp = A.star[X].col(p);
                    cplx v = 0.0;
                    for (long m = 0; m < A.fiber_dim(Xb); ++m)
                        for (long z = 0; z < A.fiber_dim(fd.unit); ++z)
                            v += sp(m) * ita->second(z, m * df + q) * omega(z);
                    W.fiber_form[X](p, q) = std::sqrt(fd.qdim[X]) * v;
                }
    }
    return W;
}

cplx WeightedHilbert::inner(const RealizedElement& b, const RealizedElement& a) const {
    const FusionData& fd = *H->fd;
    cplx total = 0.0;
    for (int X = 0; X < fd.rank(); ++X) {
        long dh = H->h_dims[X], df = A->fiber_dim(X);
        if (dh == 0 || df == 0) continue;
        // <Lambda(b), Lambda(a)> on the X-summand; the forms already carry
        // the star of the first argument, so plug in raw coefficients.
        cplx sum = 0.0;
        for (long p = 0; p < dh; ++p)
            for (long q = 0; q < dh; ++q)
                for (long s = 0; s < df; ++s)
                    for (long t = 0; t < df; ++t)
                        sum += std::conj(b.parts[X](p, s)) * h_form[X](p, q) *
                               fiber_form[X](s, t) * a.parts[X](q, t);
        total += sum / fd.qdim[X];
    }
    return total;
}

ValidationReport weighted_inner_identity_check(const AlgebraObject& A, const Vec& omega,
                                               const RealizationDatum& H, int samples,
                                               unsigned seed) {
    ValidationReport rep;
    WeightedHilbert W = weighted_hilbert(H, A, omega);
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    double res = 0.0, scale_res = 0.0;
    for (int t = 0; t < samples; ++t) {
        RealizedElement a = realized_zero(H, A), b = realized_zero(H, A);
        for (int X = 0; X < H.fd->rank(); ++X)
            for (long p = 0; p < a.parts[X].rows(); ++p)
                for (long q = 0; q < a.parts[X].cols(); ++q) {
                    a.parts[X](p, q) = cplx(g(rng), g(rng));
                    b.parts[X](p, q) = cplx(g(rng), g(rng));
                }
        cplx lhs = tau_omega(H, A, omega, realized_mult(H, A, realized_star(H, A, b), a));
        cplx rhs = W.inner(b, a);
        res = std::max(res, std::abs(lhs - rhs));

        if (t < 3) {  // scaling spot check: doubling omega doubles both sides
            WeightedHilbert W2 = weighted_hilbert(H, A, 2.0 * omega);
            cplx lhs2 =
                tau_omega(H, A, 2.0 * omega, realized_mult(H, A, realized_star(H, A, b), a));
            cplx rhs2 = W2.inner(b, a);
            scale_res = std::max(scale_res, std::abs(lhs2 - 2.0 * lhs));
            scale_res = std::max(scale_res, std::abs(rhs2 - 2.0 * rhs));
        }
    }
    rep.add("weighted_inner_identity", res, kCheckTol);
    rep.add("state_scaling_bilinearity", scale_res, kCheckTol);
    return rep;
}

InclusionRealization realize_inclusion(const AlgebraObject& A, const Vec& omega,
                                       const RealizationDatum& H, int samples, unsigned seed) {
    const FusionData& fd = *H.fd;
    InclusionRealization out;

    // |A| as an abstract finite-dimensional *-algebra on the basis
    // (X, h-index, fiber-index).
    struct BasisRef {
        int X;
        long h, f;
    };
    std::vector<BasisRef> basis;
    for (int X = 0; X < fd.rank(); ++X)
        for (long h = 0; h < H.h_dims[X]; ++h)
            for (long f = 0; f < A.fiber_dim(X); ++f) basis.push_back({X, h, f});
    const long D = static_cast<long>(basis.size());

    auto elem_of = [&](long i) {
        RealizedElement e = realized_zero(H, A);
        e.parts[basis[i].X](basis[i].h, basis[i].f) = 1.0;
        return e;
    };
    auto coords_of = [&](const RealizedElement& e) {
        Vec v = Vec::Zero(D);
        for (long i = 0; i < D; ++i) v(i) = e.parts[basis[i].X](basis[i].h, basis[i].f);
        return v;
    };

    GroundAlgebra big;
    big.dimension = D;
    big.c.assign(D, Mat::Zero(D, D));
    big.star = Mat::Zero(D, D);
    big.unit = Vec::Zero(D);
    // unit of |A|: unit of N tensor unit of A; for the shipped realizations
    // the unit of N is the constant-one function.
    {
        RealizedElement one = realized_zero(H, A);
        for (long h = 0; h < H.h_dims[fd.unit]; ++h)
            for (long f = 0; f < A.fiber_dim(fd.unit); ++f) one.parts[fd.unit](h, f) = A.unit(f);
        big.unit = coords_of(one);
    }
    for (long i = 0; i < D; ++i) {
        big.star.col(i) = coords_of(realized_star(H, A, elem_of(i)));
        for (long j = 0; j < D; ++j) {
            Vec prod = coords_of(realized_mult(H, A, elem_of(i), elem_of(j)));
            for (long z = 0; z < D; ++z) big.c[z](i, j) = prod(z);
        }
    }

    Vec tau_vec = Vec::Zero(D);
    for (long i = 0; i < D; ++i) tau_vec(i) = tau_omega(H, A, omega, elem_of(i));

    GnsResult g = gns(big, tau_vec);
    out.ambient_dim = g.to_gns.rows();
    out.gram_nullity = g.kernel_dim;

    // omega faithfulness on the ground algebra.
    GroundAlgebra ground = ground_algebra(A);
    GnsResult gg = gns(ground, omega);
    out.omega_faithful = gg.state_faithful;
    out.expectation_faithful = (out.gram_nullity == 0);

    // Conditional expectation: compress the fiber part with omega.
    auto expect = [&](const RealizedElement& x) {
        Vec v = Vec::Zero(H.h_dims[fd.unit]);
        for (long h = 0; h < H.h_dims[fd.unit]; ++h)
            for (long f = 0; f < A.fiber_dim(fd.unit); ++f)
                v(h) += x.parts[fd.unit](h, f) * omega(f);
        return v;  // element of N in the delta-basis
    };
    auto embed_n = [&](const Vec& n) {
        RealizedElement e = realized_zero(H, A);
        for (long h = 0; h < H.h_dims[fd.unit]; ++h)
            for (long f = 0; f < A.fiber_dim(fd.unit); ++f)
                e.parts[fd.unit](h, f) += n(h) * A.unit(f);
        return e;
    };

    out.base_dim = H.h_dims[fd.unit];
    out.unital_residual = 0.0;
    {
        RealizedElement one = realized_zero(H, A);
        for (long h = 0; h < H.h_dims[fd.unit]; ++h)
            for (long f = 0; f < A.fiber_dim(fd.unit); ++f) one.parts[fd.unit](h, f) = A.unit(f);
        Vec n1 = expect(one);
        out.unital_residual = (n1 - Vec::Ones(H.h_dims[fd.unit])).cwiseAbs().maxCoeff();
    }

    // N as an algebra for Kadison and bimodularity: unit block with trace.
    GroundAlgebra Nalg;
    Nalg.dimension = H.h_dims[fd.unit];
    Nalg.c.assign(Nalg.dimension, Mat::Zero(Nalg.dimension, Nalg.dimension));
    auto itn = H.h_mult.find({fd.unit, fd.unit, fd.unit});
    for (long z = 0; z < Nalg.dimension && itn != H.h_mult.end(); ++z)
        for (long x = 0; x < Nalg.dimension; ++x)
            for (long y = 0; y < Nalg.dimension; ++y)
                Nalg.c[z](x, y) = itn->second(z, x * Nalg.dimension + y);
    Nalg.star = H.h_star[fd.unit];
    Nalg.unit = Vec::Ones(Nalg.dimension);

    std::mt19937 rng(seed);
    std::normal_distribution<double> gg2;
    double idem = 0.0, bimod = 0.0, kadison = 0.0;
    for (int t = 0; t < samples; ++t) {
        RealizedElement x = realized_zero(H, A);
        for (int X = 0; X < fd.rank(); ++X)
            for (long p = 0; p < x.parts[X].rows(); ++p)
                for (long q = 0; q < x.parts[X].cols(); ++q) x.parts[X](p, q) = cplx(gg2(rng), gg2(rng));

        Vec ex = expect(x);
        Vec exx = expect(embed_n(ex));
        idem = std::max(idem, (exx - ex).cwiseAbs().maxCoeff());

        Vec nb = Vec::Zero(Nalg.dimension), nb2 = Vec::Zero(Nalg.dimension);
        for (long h = 0; h < Nalg.dimension; ++h) {
            nb(h) = cplx(gg2(rng), gg2(rng));
            nb2(h) = cplx(gg2(rng), gg2(rng));
        }
        RealizedElement bxb = realized_mult(H, A, embed_n(nb), realized_mult(H, A, x, embed_n(nb2)));
        Vec lhs = expect(bxb);
        Vec rhs = Nalg.left_mult(nb) * (Nalg.left_mult(ex) * nb2);
        bimod = std::max(bimod, (lhs - rhs).cwiseAbs().maxCoeff());

        // Kadison: E(x)* E(x) <= E(x* x) as operators in N.
        RealizedElement xs = realized_star(H, A, x);
        Vec exsx = expect(realized_mult(H, A, xs, x));
        Vec exs = Nalg.star_of(ex);
        Vec prod = Nalg.left_mult(exs) * ex;
        Vec diff = exsx - prod;
        Mat Ld = Nalg.left_mult(diff);
        kadison = std::min(kadison, min_hermitian_eigenvalue(Ld));
    }
    out.idempotent_residual = idem;
    out.bimodularity_residual = bimod;
    out.kadison_floor = kadison;

    for (long i = 0; i < std::min<long>(D, 8); ++i) out.ambient_gens.push_back(g.rep[i]);
    return out;
}

}  // namespace surfhom
