#pragma once

#include <string>
#include <utility>

#include "surfrep/evaluation.hpp"

namespace surfrep {

// Left-trivialized differential of the moment map as a real matrix:
// rows are algebra coordinates of the output, columns run over
// (slot, basis direction); size (n^2-1) x 2g(n^2-1).
Eigen::MatrixXd moment_jacobian(int genus, const Configuration& c);

// Rank by singular values above threshold. Full rank n^2-1 certifies a
// submersion point of the moment map.
int jacobian_rank(int genus, const Configuration& c, double threshold = 1e-8);

// Pair of special-unitary matrices whose commutator is a nontrivial central
// element: the quaternion pair (diag(i,-i), [[0,1],[-1,0]]) for n = 2 with
// commutator -I, the clock and shift matrices for n = 3 with commutator
// e^{2 pi i/3} I.
std::pair<Mat, Mat> anticommuting_pair(int n);

// Genus-g configuration with the anticommuting pair in slots 1,2 and
// identities elsewhere; its moment image is the pair's central commutator.
Configuration pair_configuration(int genus, int n);

// Random exact fiber point over the central commutator: a conjugated
// anticommuting pair in the first two slots, commuting pairs (common
// eigenbasis, unit-determinant phases) in the rest.
struct FiberSeed {
  Configuration point;
  Mat beta;
};
FiberSeed random_fiber_point(int genus, int n, std::mt19937_64& rng);

// Right-translate each slot by exp of a random tangent scaled to the given
// total Frobenius norm.
Configuration perturb(const Configuration& c, double norm,
                      std::mt19937_64& rng);

struct ProjectionResult {
  Configuration point;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
  bool branch_cut_hit = false;
  std::string message;
};

// Gauss-Newton projection onto the moment fiber over the central element
// beta: residual r(c) = logm(beta^-1 Phi(c)), Jacobian from moment_jacobian,
// pseudo-inverse step with singular values below 1e-8 dropped, update by
// right multiplication with exp(delta) per slot. Steps that fail to shrink
// the residual are halved; a residual evaluated too close to the log branch
// cut is treated the same way and flagged. Failure to converge is reported
// in the result, never thrown.
ProjectionResult project_to_fiber(int genus, const Configuration& start,
                                  const Mat& beta, double tol = 1e-10,
                                  int max_iterations = 50);

}  // namespace surfrep
