#pragma once

#include <cstdint>
#include <functional>

#include "surfrep/evaluation.hpp"

namespace surfrep {

// Alternating k-linear form on K^m, evaluated pointwise: `point` holds the
// m group matrices, `tangents` the k tangent arguments, each given by its m
// left-trivialized algebra components. Evaluators capture no mutable state,
// so a MultiForm is safe to evaluate concurrently.
struct MultiForm {
  int factors = 1;  // m
  int arity = 1;    // k
  std::function<double(const std::vector<Mat>&,
                       const std::vector<std::vector<Mat>>&)>
      eval;

  double operator()(const std::vector<Mat>& point,
                    const std::vector<std::vector<Mat>>& tangents) const;
};

// Bi-invariant 3-form on K:
// (xi1, xi2, xi3) -> sum over S_3 of sgn(s) Re tr(xi_s1 xi_s2 xi_s3).
MultiForm invariant_three_form();

// Cross-term 2-form on K^2 pairing the left Maurer-Cartan form of the
// first factor with the right Maurer-Cartan form of the second, scaled by
// mu: ((v1,w1),(v2,w2)) at (g,h) ->
//   mu * (Re tr(v1 Ad(h) w2) - Re tr(v2 Ad(h) w1)).
MultiForm cross_term_two_form(double mu);

// Simplicial coboundary: pull back along the three face maps of K^{m+1}
// with alternating signs. Face maps act on points by drop/multiply/drop and
// push tangents through exactly (the merged slot uses the product cocycle
// rule); no differencing is involved.
MultiForm delta_pullback(const MultiForm& f);

// Exterior derivative by the Cartan formula with the tangent arguments
// extended left-invariantly: directional derivatives along
// p exp(t xi) are central differences with step h (O(h^2)); the bracket
// terms use the componentwise matrix commutator and are exact.
MultiForm exterior_derivative(const MultiForm& f, double h);

struct CalibrationResult {
  double mu = 0.0;
  double max_rel_residual = 0.0;
  int tuples_used = 0;
  int tuples_excluded = 0;
};

// Least-squares fit of mu in delta(three-form) = -d(mu * cross-term form)
// over random evaluation tuples on K^2; tuples whose derivative value is
// degenerate (zero row) are excluded. The residual reported is the largest
// per-tuple relative defect of the fitted identity.
CalibrationResult calibrate_cross_term(int n, std::uint64_t seed,
                                       int tuples = 100, double h = 1e-5);

// 2-form on K^{2g}: sum over generators i and tau of
// (-1)^tau (ev_{gamma^tau_i} x ev_{x_i})^* (cross-term form), with the
// evaluation-map differentials computed exactly via word_differential.
MultiForm relator_primitive(int genus, double mu);

// Pullback of the invariant 3-form along the moment map, i.e. the relator
// evaluation: tangents map through word_differential of the relator.
MultiForm moment_pullback_three_form(int genus);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;  // abs_err / max(1, |lhs|, |rhs|)
};

// d(relator_primitive) against moment_pullback_three_form at one
// configuration and tangent triple.
IdentityCheck check_main_identity(int genus, const Configuration& c,
                                  const std::vector<Tangent>& triple,
                                  double mu, double h);

}  // namespace surfrep
