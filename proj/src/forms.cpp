#include "surfrep/forms.hpp"

#include <cmath>
#include <stdexcept>

#include "surfrep/fox.hpp"

namespace surfrep {

double MultiForm::operator()(
    const std::vector<Mat>& point,
    const std::vector<std::vector<Mat>>& tangents) const {
  if (static_cast<int>(point.size()) != factors)
    throw std::invalid_argument("point size does not match form factors");
  if (static_cast<int>(tangents.size()) != arity)
    throw std::invalid_argument("tangent count does not match form arity");
  for (const auto& t : tangents)
    if (static_cast<int>(t.size()) != factors)
      throw std::invalid_argument("tangent component count mismatch");
  return eval(point, tangents);
}

MultiForm invariant_three_form() {
  MultiForm f;
  f.factors = 1;
  f.arity = 3;
  f.eval = [](const std::vector<Mat>& /*point*/,
              const std::vector<std::vector<Mat>>& t) {
    const Mat& a = t[0][0];
    const Mat& b = t[1][0];
    const Mat& c = t[2][0];
    // even and odd permutations of the 3! alternation
    const double even = ((a * b * c) + (b * c * a) + (c * a * b))
                            .trace()
                            .real();
    const double odd = ((a * c * b) + (c * b * a) + (b * a * c))
                           .trace()
                           .real();
    return even - odd;
  };
  return f;
}

MultiForm cross_term_two_form(double mu) {
  MultiForm f;
  f.factors = 2;
  f.arity = 2;
  f.eval = [mu](const std::vector<Mat>& p,
                const std::vector<std::vector<Mat>>& t) {
    const Mat& h = p[1];
    const Mat ad_w2 = h * t[1][1] * h.adjoint();
    const Mat ad_w1 = h * t[0][1] * h.adjoint();
    return mu * ((t[0][0] * ad_w2).trace().real() -
                 (t[1][0] * ad_w1).trace().real());
  };
  return f;
}

MultiForm delta_pullback(const MultiForm& f) {
  const int m = f.factors;
  MultiForm out;
  out.factors = m + 1;
  out.arity = f.arity;
  out.eval = [f, m](const std::vector<Mat>& p,
                    const std::vector<std::vector<Mat>>& t) {
    double total = 0.0;
    for (int i = 0; i <= m + 1; ++i) {
      std::vector<Mat> fp;
      fp.reserve(m);
      std::vector<std::vector<Mat>> ft(t.size());
      if (i == 0) {
        fp.assign(p.begin() + 1, p.end());
        for (std::size_t a = 0; a < t.size(); ++a)
          ft[a].assign(t[a].begin() + 1, t[a].end());
      } else if (i == m + 1) {
        fp.assign(p.begin(), p.end() - 1);
        for (std::size_t a = 0; a < t.size(); ++a)
          ft[a].assign(t[a].begin(), t[a].end() - 1);
      } else {
        fp.assign(p.begin(), p.begin() + (i - 1));
        fp.push_back(p[i - 1] * p[i]);
        fp.insert(fp.end(), p.begin() + (i + 1), p.end());
        for (std::size_t a = 0; a < t.size(); ++a) {
          auto& ta = ft[a];
          ta.assign(t[a].begin(), t[a].begin() + (i - 1));
          // product slot: xi(uv) = Ad(v^-1) xi(u) + xi(v)
          ta.push_back(p[i].adjoint() * t[a][i - 1] * p[i] + t[a][i]);
          ta.insert(ta.end(), t[a].begin() + (i + 1), t[a].end());
        }
      }
      const double val = f(fp, ft);
      total += (i % 2 == 0) ? val : -val;
    }
    return total;
  };
  return out;
}

MultiForm exterior_derivative(const MultiForm& f, double h) {
  if (h <= 0) throw std::invalid_argument("step size must be positive");
  MultiForm out;
  out.factors = f.factors;
  out.arity = f.arity + 1;
  const int k = f.arity + 1;
  out.eval = [f, h, k](const std::vector<Mat>& p,
                       const std::vector<std::vector<Mat>>& t) {
    double total = 0.0;
    // directional derivatives of f(rest) along left-invariant extensions
    for (int a = 0; a < k; ++a) {
      std::vector<std::vector<Mat>> rest;
      rest.reserve(k - 1);
      for (int b = 0; b < k; ++b)
        if (b != a) rest.push_back(t[b]);
      std::vector<Mat> plus(p.size()), minus(p.size());
      for (std::size_t j = 0; j < p.size(); ++j) {
        const Mat flow = expm(h * t[a][j]);
        plus[j] = p[j] * flow;
        minus[j] = p[j] * flow.adjoint();
      }
      const double diff = (f(plus, rest) - f(minus, rest)) / (2 * h);
      total += (a % 2 == 0) ? diff : -diff;
    }
    // bracket terms, exact
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        std::vector<Mat> bracket(p.size());
        for (std::size_t j = 0; j < p.size(); ++j)
          bracket[j] = t[a][j] * t[b][j] - t[b][j] * t[a][j];
        std::vector<std::vector<Mat>> args;
        args.reserve(k - 1);
        args.push_back(std::move(bracket));
        for (int c = 0; c < k; ++c)
          if (c != a && c != b) args.push_back(t[c]);
        const double val = f(p, args);
        total += ((a + b) % 2 == 0) ? val : -val;
      }
    }
    return total;
  };
  return out;
}

CalibrationResult calibrate_cross_term(int n, std::uint64_t seed, int tuples,
                                       double h) {
  if (tuples < 2) throw std::invalid_argument("need at least two tuples");
  const MultiForm delta3 = delta_pullback(invariant_three_form());
  const MultiForm d_cross = exterior_derivative(cross_term_two_form(1.0), h);

  std::mt19937_64 rng(seed);
  std::vector<double> xs, ys;
  xs.reserve(tuples);
  ys.reserve(tuples);
  int excluded = 0;
  for (int trial = 0; trial < tuples; ++trial) {
    std::vector<Mat> point = {haar_sample(n, rng), haar_sample(n, rng)};
    std::vector<std::vector<Mat>> tangents;
    for (int a = 0; a < 3; ++a)
      tangents.push_back({random_algebra_element(n, rng),
                          random_algebra_element(n, rng)});
    const double y = delta3(point, tangents);
    const double x = -d_cross(point, tangents);
    if (std::abs(x) < 1e-8) {
      ++excluded;  // degenerate tuple: no information about mu
      continue;
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  if (xs.size() < 2)
    throw std::runtime_error("calibration: not enough usable tuples");

  double xx = 0.0, xy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    xx += xs[k] * xs[k];
    xy += xs[k] * ys[k];
  }
  CalibrationResult result;
  result.mu = xy / xx;
  result.tuples_used = static_cast<int>(xs.size());
  result.tuples_excluded = excluded;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double defect = std::abs(result.mu * xs[k] - ys[k]);
    result.max_rel_residual = std::max(
        result.max_rel_residual, defect / std::max(1.0, std::abs(ys[k])));
  }
  return result;
}

MultiForm relator_primitive(int genus, double mu) {
  check_genus(genus);
  const MultiForm cross = cross_term_two_form(mu);
  struct Term {
    Word word;
    int generator_slot;
    int sign;
  };
  std::vector<Term> terms;
  terms.reserve(4 * genus);
  for (int i = 1; i <= 2 * genus; ++i)
    for (int tau = 0; tau <= 1; ++tau)
      terms.push_back({gamma(genus, tau, i), i - 1, tau == 0 ? 1 : -1});

  MultiForm f;
  f.factors = 2 * genus;
  f.arity = 2;
  f.eval = [cross, terms](const std::vector<Mat>& p,
                          const std::vector<std::vector<Mat>>& t) {
    double total = 0.0;
    for (const Term& term : terms) {
      const std::vector<Mat> point = {evaluate_word(term.word, p),
                                      p[term.generator_slot]};
      std::vector<std::vector<Mat>> pushed;
      pushed.reserve(t.size());
      for (const auto& tangent : t)
        pushed.push_back({word_differential(term.word, p, tangent),
                          tangent[term.generator_slot]});
      total += term.sign * cross(point, pushed);
    }
    return total;
  };
  return f;
}

MultiForm moment_pullback_three_form(int genus) {
  check_genus(genus);
  const MultiForm three = invariant_three_form();
  const Word rel = relator(genus);
  MultiForm f;
  f.factors = 2 * genus;
  f.arity = 3;
  f.eval = [three, rel, genus](const std::vector<Mat>& p,
                               const std::vector<std::vector<Mat>>& t) {
    const std::vector<Mat> point = {moment_map(genus, p)};
    std::vector<std::vector<Mat>> pushed;
    pushed.reserve(t.size());
    for (const auto& tangent : t)
      pushed.push_back({word_differential(rel, p, tangent)});
    return three(point, pushed);
  };
  return f;
}

IdentityCheck check_main_identity(int genus, const Configuration& c,
                                  const std::vector<Tangent>& triple,
                                  double mu, double h) {
  if (triple.size() != 3)
    throw std::invalid_argument("main identity needs a tangent triple");
  const MultiForm lhs_form = exterior_derivative(relator_primitive(genus, mu), h);
  const MultiForm rhs_form = moment_pullback_three_form(genus);
  IdentityCheck check;
  check.lhs = lhs_form(c, {triple[0], triple[1], triple[2]});
  check.rhs = rhs_form(c, {triple[0], triple[1], triple[2]});
  check.abs_err = std::abs(check.lhs - check.rhs);
  check.rel_err = check.abs_err /
                  std::max({1.0, std::abs(check.lhs), std::abs(check.rhs)});
  return check;
}

}  // namespace surfrep
