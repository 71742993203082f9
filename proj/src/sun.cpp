#include "surfrep/sun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace surfrep {

using std::complex;

double frobenius(const Mat& m) { return m.norm(); }

Mat identity_matrix(int n) { return Mat::Identity(n, n); }

bool is_special_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols() || u.rows() < 1) return false;
  const int n = static_cast<int>(u.rows());
  if ((u.adjoint() * u - Mat::Identity(n, n)).norm() > tol) return false;
  return std::abs(u.determinant() - complex<double>(1.0, 0.0)) <= tol;
}

bool is_algebra_element(const Mat& xi, double tol) {
  if (xi.rows() != xi.cols() || xi.rows() < 1) return false;
  if ((xi + xi.adjoint()).norm() > tol) return false;
  return std::abs(xi.trace()) <= tol;
}

bool is_central(const Mat& u, double tol) {
  if (!is_special_unitary(u, tol)) return false;
  const int n = static_cast<int>(u.rows());
  const complex<double> zeta = u(0, 0);
  return (u - zeta * Mat::Identity(n, n)).norm() <= tol &&
         std::abs(std::pow(zeta, n) - complex<double>(1.0, 0.0)) <= 10 * tol;
}

Mat expm(const Mat& xi) {
  if (xi.rows() != xi.cols())
    throw std::invalid_argument("expm needs a square matrix");
  const Mat h = (xi - xi.adjoint()) / 2.0;  // discard Hermitian roundoff
  Eigen::SelfAdjointEigenSolver<Mat> eig(complex<double>(0, -1) * h);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("expm: eigensolver failed");
  const Eigen::VectorXd w = eig.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (int k = 0; k < w.size(); ++k)
    phases[k] = std::exp(complex<double>(0, w[k]));
  return eig.eigenvectors() * phases.asDiagonal() *
         eig.eigenvectors().adjoint();
}

LogResult logm(const Mat& u, double branch_margin) {
  if (u.rows() != u.cols())
    throw std::invalid_argument("logm needs a square matrix");
  Eigen::ComplexSchur<Mat> schur(u);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("logm: Schur decomposition failed");
  const int n = static_cast<int>(u.rows());
  Eigen::VectorXcd diag(n);
  double max_angle = 0.0;
  for (int k = 0; k < n; ++k) {
    complex<double> t = schur.matrixT()(k, k);
    t /= std::abs(t);
    const double theta = std::arg(t);
    max_angle = std::max(max_angle, std::abs(theta));
    diag[k] = complex<double>(0, theta);
  }
  Mat log = schur.matrixU() * diag.asDiagonal() * schur.matrixU().adjoint();
  log = (log - log.adjoint()) / 2.0;
  const double gap = M_PI - max_angle;
  return {std::move(log), gap < branch_margin, gap};
}

Mat project_special_unitary(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat u = svd.matrixU() * svd.matrixV().adjoint();
  const int n = static_cast<int>(u.rows());
  const double phase = std::arg(u.determinant());
  return u * std::exp(complex<double>(0, -phase / n));
}

Mat haar_sample(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("matrix dimension must be >= 2");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    complex<double> d = r(k, k);
    q.col(k) *= (d == complex<double>(0.0) ? complex<double>(1.0)
                                           : d / std::abs(d));
  }
  const double phase = std::arg(q.determinant());
  return q * std::exp(complex<double>(0, -phase / n));
}

std::vector<Mat> algebra_basis(int n) {
  if (n < 2) throw std::invalid_argument("matrix dimension must be >= 2");
  std::vector<Mat> basis;
  basis.reserve(n * n - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      Mat a = Mat::Zero(n, n);
      a(k, l) = inv_sqrt2;
      a(l, k) = -inv_sqrt2;
      basis.push_back(a);
      Mat b = Mat::Zero(n, n);
      b(k, l) = complex<double>(0, inv_sqrt2);
      b(l, k) = complex<double>(0, inv_sqrt2);
      basis.push_back(b);
    }
  }
  for (int k = 1; k < n; ++k) {
    Mat d = Mat::Zero(n, n);
    const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
    for (int j = 0; j < k; ++j) d(j, j) = complex<double>(0, 1.0 / norm);
    d(k, k) = complex<double>(0, -static_cast<double>(k) / norm);
    basis.push_back(d);
  }
  return basis;
}

Eigen::VectorXd algebra_coordinates(const Mat& xi,
                                    const std::vector<Mat>& basis) {
  Eigen::VectorXd coords(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    coords[static_cast<int>(k)] = (basis[k].adjoint() * xi).trace().real();
  return coords;
}

Mat algebra_from_coordinates(const Eigen::VectorXd& coords,
                             const std::vector<Mat>& basis) {
  if (coords.size() != static_cast<Eigen::Index>(basis.size()))
    throw std::invalid_argument("coordinate count does not match basis");
  Mat xi = Mat::Zero(basis[0].rows(), basis[0].cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    xi += coords[static_cast<int>(k)] * basis[k];
  return xi;
}

Mat random_algebra_element(int n, std::mt19937_64& rng, bool normalize) {
  const std::vector<Mat> basis = algebra_basis(n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd coords(basis.size());
  for (int k = 0; k < coords.size(); ++k) coords[k] = gauss(rng);
  if (normalize) {
    const double norm = coords.norm();
    if (norm < 1e-12) {
      coords.setZero();
      coords[0] = 1.0;
    } else {
      coords /= norm;
    }
  }
  return algebra_from_coordinates(coords, basis);
}

}  // namespace surfrep
