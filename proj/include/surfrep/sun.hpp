#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace surfrep {

using Mat = Eigen::MatrixXcd;

double frobenius(const Mat& m);

Mat identity_matrix(int n);

// U*U = I and det U = 1, both to tol.
bool is_special_unitary(const Mat& u, double tol = 1e-10);

// Anti-Hermitian and traceless, both to tol.
bool is_algebra_element(const Mat& xi, double tol = 1e-10);

// Scalar multiple of the identity by an n-th root of unity, to tol.
bool is_central(const Mat& u, double tol = 1e-10);

// exp of an anti-Hermitian matrix via the spectral decomposition of -i xi;
// exact to machine precision, lands in SU(n) when xi is traceless.
Mat expm(const Mat& xi);

struct LogResult {
  Mat log;              // principal branch, anti-Hermitian
  bool near_branch_cut; // an eigenvalue angle within margin of +-pi
  double branch_gap;    // pi - max |angle|
};

// Principal log of a unitary matrix via Schur (diagonal for normal input).
// Eigenvalue angles near +-pi are signalled, not fixed up: the principal
// branch is discontinuous there and callers must treat the step as suspect.
LogResult logm(const Mat& u, double branch_margin = 1e-6);

// Nearest special-unitary matrix: polar factor, then a det-normalizing
// global phase.
Mat project_special_unitary(const Mat& m);

// Haar-distributed SU(n) sample: QR of a complex Gaussian matrix with the
// R-diagonal phases absorbed (Haar on U(n)), then a global n-th-root-of-det
// correction. Left translation by SU(n) preserves the law, so the result is
// Haar on SU(n). Deterministic given the engine state.
Mat haar_sample(int n, std::mt19937_64& rng);

// Orthonormal basis of su(n) under <A,B> = Re tr(A* B); size n^2 - 1.
std::vector<Mat> algebra_basis(int n);

Eigen::VectorXd algebra_coordinates(const Mat& xi,
                                    const std::vector<Mat>& basis);
Mat algebra_from_coordinates(const Eigen::VectorXd& coords,
                             const std::vector<Mat>& basis);

// Gaussian coefficients over algebra_basis(n); unit Frobenius norm when
// normalize is set (the zero-draw corner case falls back to the first
// basis element).
Mat random_algebra_element(int n, std::mt19937_64& rng,
                           bool normalize = true);

}  // namespace surfrep
