#pragma once

#include <complex>
#include <Eigen/Dense>

namespace surfhom {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kEntryTol = 1e-9;   // absolute tolerance on matrix entries
inline constexpr double kNormTol = 1e-9;    // relative tolerance on norms
inline constexpr double kCheckTol = 1e-8;   // residual threshold for structural checks

// Largest singular value; 0 for empty matrices.
inline double spectral_norm(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    return m.jacobiSvd().singularValues()(0);
}

inline double max_abs(const Mat& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

// Smallest eigenvalue of the Hermitian part; used for positivity floors.
inline double min_hermitian_eigenvalue(const Mat& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Mat> es((m + m.adjoint()) / 2.0);
    return es.eigenvalues()(0);
}

}  // namespace surfhom
