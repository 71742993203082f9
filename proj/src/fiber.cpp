#include "surfrep/fiber.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "surfrep/fox.hpp"

namespace surfrep {

Eigen::MatrixXd moment_jacobian(int genus, const Configuration& c) {
  check_configuration(genus, c);
  const int n = static_cast<int>(c[0].rows());
  const std::vector<Mat> basis = algebra_basis(n);
  const int dim = static_cast<int>(basis.size());
  const Word rel = relator(genus);
  Eigen::MatrixXd jac(dim, 2 * genus * dim);
  Tangent v(c.size(), Mat::Zero(n, n));
  for (int slot = 0; slot < 2 * genus; ++slot) {
    for (int a = 0; a < dim; ++a) {
      v[slot] = basis[a];
      jac.col(slot * dim + a) =
          algebra_coordinates(word_differential(rel, c, v), basis);
    }
    v[slot] = Mat::Zero(n, n);
  }
  return jac;
}

int jacobian_rank(int genus, const Configuration& c, double threshold) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(moment_jacobian(genus, c));
  int rank = 0;
  for (int k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()[k] > threshold) ++rank;
  return rank;
}

std::pair<Mat, Mat> anticommuting_pair(int n) {
  using std::complex;
  if (n == 2) {
    Mat a(2, 2), b(2, 2);
    a << complex<double>(0, 1), 0, 0, complex<double>(0, -1);
    b << 0, 1, -1, 0;
    return {a, b};
  }
  if (n == 3) {
    const complex<double> w = std::exp(complex<double>(0, 2 * M_PI / 3));
    Mat clock = Mat::Zero(3, 3);
    clock(0, 0) = 1;
    clock(1, 1) = w;
    clock(2, 2) = w * w;
    Mat shift = Mat::Zero(3, 3);
    shift(0, 2) = 1;
    shift(1, 0) = 1;
    shift(2, 1) = 1;
    return {clock, shift};
  }
  throw std::invalid_argument("anticommuting pair defined for n = 2, 3");
}

Configuration pair_configuration(int genus, int n) {
  check_genus(genus);
  auto [a, b] = anticommuting_pair(n);
  Configuration c(2 * genus, Mat::Identity(n, n));
  c[0] = a;
  c[1] = b;
  return c;
}

FiberSeed random_fiber_point(int genus, int n, std::mt19937_64& rng) {
  check_genus(genus);
  auto [a, b] = anticommuting_pair(n);
  const Mat beta = a * b * a.adjoint() * b.adjoint();
  const Mat k = haar_sample(n, rng);
  Configuration c;
  c.reserve(2 * genus);
  c.push_back(k * a * k.adjoint());
  c.push_back(k * b * k.adjoint());
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int block = 1; block < genus; ++block) {
    // commuting pair: shared eigenbasis, unit-determinant phase vectors
    const Mat u = haar_sample(n, rng);
    for (int j = 0; j < 2; ++j) {
      Eigen::VectorXcd phases(n);
      double total = 0.0;
      for (int l = 0; l + 1 < n; ++l) {
        const double th = angle(rng);
        phases[l] = std::exp(std::complex<double>(0, th));
        total += th;
      }
      phases[n - 1] = std::exp(std::complex<double>(0, -total));
      c.push_back(u * phases.asDiagonal() * u.adjoint());
    }
  }
  return {std::move(c), beta};
}

Configuration perturb(const Configuration& c, double norm,
                      std::mt19937_64& rng) {
  if (c.empty()) throw std::invalid_argument("empty configuration");
  const int n = static_cast<int>(c[0].rows());
  std::vector<Mat> dirs;
  double total_sq = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    dirs.push_back(random_algebra_element(n, rng, /*normalize=*/false));
    total_sq += dirs.back().squaredNorm();
  }
  const double scale = norm / std::sqrt(total_sq);
  Configuration out = c;
  for (std::size_t k = 0; k < c.size(); ++k)
    out[k] = c[k] * expm(scale * dirs[k]);
  return out;
}

namespace {

struct Residual {
  double norm;
  Mat log;
  bool near_branch;
};

Residual fiber_residual(int genus, const Configuration& c, const Mat& beta) {
  LogResult lr = logm(beta.adjoint() * moment_map(genus, c));
  return {lr.log.norm(), std::move(lr.log), lr.near_branch_cut};
}

Configuration step(const Configuration& c, const std::vector<Mat>& basis,
                   const Eigen::VectorXd& delta, double scale) {
  const int dim = static_cast<int>(basis.size());
  Configuration out = c;
  for (std::size_t slot = 0; slot < c.size(); ++slot) {
    const Eigen::VectorXd coords =
        scale * delta.segment(static_cast<int>(slot) * dim, dim);
    out[slot] = c[slot] * expm(algebra_from_coordinates(coords, basis));
  }
  return out;
}

}  // namespace

ProjectionResult project_to_fiber(int genus, const Configuration& start,
                                  const Mat& beta, double tol,
                                  int max_iterations) {
  check_configuration(genus, start);
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (max_iterations < 0)
    throw std::invalid_argument("iteration budget must be >= 0");
  if (!is_central(beta, 1e-8))
    throw std::invalid_argument("beta must be a central special unitary");

  const int n = static_cast<int>(start[0].rows());
  const std::vector<Mat> basis = algebra_basis(n);

  ProjectionResult result;
  result.point = start;
  Residual res = fiber_residual(genus, start, beta);
  result.branch_cut_hit = res.near_branch;

  for (int it = 0; it < max_iterations; ++it) {
    if (res.norm <= tol) break;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        moment_jacobian(genus, result.point),
        Eigen::ComputeThinU | Eigen::ComputeThinV);
    // setThreshold is relative to the top singular value; rescale so
    // singular values below 1e-8 are the ones dropped.
    const double top = svd.singularValues()[0];
    svd.setThreshold(top > 0 ? 1e-8 / top : 1.0);
    const Eigen::VectorXd delta =
        svd.solve(-algebra_coordinates(res.log, basis));
    if (delta.norm() == 0.0) {
      result.message = "stalled: zero Gauss-Newton step";
      break;
    }
    double scale = 1.0;
    bool improved = false;
    for (int half = 0; half < 25; ++half) {
      Configuration trial = step(result.point, basis, delta, scale);
      Residual trial_res = fiber_residual(genus, trial, beta);
      if (trial_res.near_branch) {
        result.branch_cut_hit = true;
        scale /= 2;
        continue;
      }
      if (trial_res.norm < res.norm) {
        result.point = std::move(trial);
        res = std::move(trial_res);
        improved = true;
        break;
      }
      scale /= 2;
    }
    ++result.iterations;
    if (!improved) {
      result.message = "stalled: step halving exhausted";
      break;
    }
  }

  result.residual = res.norm;
  result.converged = res.norm <= tol;
  if (!result.converged && result.message.empty())
    result.message = "iteration budget exhausted";
  return result;
}

}  // namespace surfrep
