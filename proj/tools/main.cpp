// Verification CLI: each subcommand runs one suite against the library and
// emits a JSON report on stdout (and to --out when given). Exit codes:
// 0 suite passed, 2 suite failed, 1 usage error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "surfrep/bar.hpp"
#include "surfrep/fiber.hpp"
#include "surfrep/forms.hpp"
#include "surfrep/fox.hpp"
#include "surfrep/report.hpp"

namespace {

using namespace surfrep;

struct Options {
  int genus = 2;
  std::string group = "su2";
  std::uint64_t seed = 0;
  int trials = 100;
  double h = 1e-5;
  double tol = -1.0;  // per-suite default when negative
  std::string out;
};

int matrix_dim(const Options& opt) { return opt.group == "su3" ? 3 : 2; }

double tol_or(const Options& opt, double suite_default) {
  return opt.tol > 0 ? opt.tol : suite_default;
}

VerificationReport base_report(const std::string& suite, const Options& opt) {
  VerificationReport r;
  r.suite = suite;
  r.genus = opt.genus;
  r.group = opt.group;
  r.seed = opt.seed;
  r.trials = opt.trials;
  r.h = opt.h;
  return r;
}

int finish(VerificationReport& report, const Options& opt) {
  const std::string text = report.to_string();
  std::cout << text;
  if (!opt.out.empty()) {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << opt.out << "\n";
      return 1;
    }
    f << text;
  }
  return report.pass ? 0 : 2;
}

int cmd_verify_fox(const Options& opt) {
  VerificationReport report = base_report("verify-fox", opt);
  report.tol = 0.0;
  const Word rel = relator(opt.genus);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  int matches = 0;
  for (int i = 1; i <= 2 * opt.genus; ++i) {
    const FormalWordSum derived = fox_derivative(rel, i);
    const FormalWordSum expected = single(gamma(opt.genus, 0, i)) -
                                   single(gamma(opt.genus, 1, i));
    const bool ok = derived == expected;
    matches += ok;
    checks.push_back({{"generator", i},
                      {"derivative", print_sum(derived)},
                      {"match", ok}});
    if (!ok)
      report.failures.push_back({{"generator", i},
                                 {"expected", print_sum(expected)}});
  }
  report.details["matches"] = matches;
  report.details["checks"] = checks;
  report.pass = matches == 2 * opt.genus;
  return finish(report, opt);
}

int cmd_verify_telescope(const Options& opt) {
  VerificationReport report = base_report("verify-telescope", opt);
  report.tol = 0.0;
  const FormalWordSum sum = telescope(opt.genus);
  const FormalWordSum expected =
      single(relator(opt.genus)) - single(Word(opt.genus));
  long long raw_mass = 0;
  for (const auto& [sign, w] : telescope_terms(opt.genus)) raw_mass += sign;
  report.details["raw_terms"] = 12 * opt.genus;
  report.details["raw_signed_mass"] = raw_mass;
  report.details["final_sum"] = sum_to_json(sum);
  report.pass = (sum == expected) && raw_mass == 0;
  if (!report.pass)
    report.failures.push_back({{"final_sum", print_sum(sum)},
                               {"expected", print_sum(expected)}});
  return finish(report, opt);
}

int cmd_verify_cycle(const Options& opt) {
  VerificationReport report = base_report("verify-cycle", opt);
  report.tol = 0.0;
  const FreeGroupOracle free_oracle{opt.genus};
  const auto over_free =
      boundary(fundamental_cycle_chain(opt.genus, free_oracle));
  BarChain<FreeGroupOracle> expected(free_oracle, 1);
  expected.add({Word(opt.genus)}, 1);
  expected.add({relator(opt.genus)}, -1);
  bool free_ok = over_free.terms().size() == expected.terms().size();
  if (free_ok) {
    BarChain<FreeGroupOracle> diff = over_free;
    for (const auto& [tuple, coeff] : expected.terms())
      diff.add(tuple, -coeff);
    free_ok = diff.is_zero();
  }
  const bool quotient_ok = is_cycle_mod_relator(opt.genus);
  report.details["boundary_over_free_group"] = chain_to_json(over_free);
  report.details["collapses_in_quotient"] = quotient_ok;
  report.pass = free_ok && quotient_ok;
  if (!report.pass)
    report.failures.push_back(
        {{"free_group_match", free_ok}, {"quotient_zero", quotient_ok}});
  return finish(report, opt);
}

BarChain<FreeGroupOracle> random_chain(int genus, int degree,
                                       std::mt19937_64& rng) {
  const FreeGroupOracle oracle{genus};
  BarChain<FreeGroupOracle> chain(oracle, degree);
  std::uniform_int_distribution<int> n_terms(1, 4), coeff(-3, 3),
      len(0, 6), idx(1, 2 * genus), sgn(0, 1);
  const int terms = n_terms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<Word> tuple;
    for (int k = 0; k < degree; ++k) {
      std::vector<Letter> letters;
      const int L = len(rng);
      for (int l = 0; l < L; ++l)
        letters.push_back({idx(rng), sgn(rng) ? 1 : -1});
      tuple.push_back(Word(genus, std::move(letters)));
    }
    chain.add(tuple, coeff(rng));
  }
  return chain;
}

int cmd_verify_bar(const Options& opt) {
  VerificationReport report = base_report("verify-bar", opt);
  report.tol = 0.0;
  int dd_failures = 0, face_failures = 0;
  std::uniform_int_distribution<int> deg(2, 4);
  for (int t = 0; t < opt.trials; ++t) {
    std::mt19937_64 rng(trial_seed(opt.seed, t));
    const int degree = deg(rng);
    const auto chain = random_chain(opt.genus, degree, rng);
    if (degree >= 3 && !boundary(boundary(chain)).is_zero()) {
      ++dd_failures;
      report.failures.push_back(
          {{"trial", t}, {"kind", "dd_nonzero"}, {"chain", chain_to_json(chain)}});
    }
    // face commutation eps_i eps_j = eps_{j-1} eps_i for i < j on tuples
    const FreeGroupOracle oracle{opt.genus};
    for (const auto& [tuple, coeff] : chain.terms()) {
      for (int j = 1; j <= degree; ++j)
        for (int i = 0; i < j; ++i) {
          const auto lhs = face(oracle, i, face(oracle, j, tuple));
          const auto rhs = face(oracle, j - 1, face(oracle, i, tuple));
          if (lhs != rhs) {
            ++face_failures;
            report.failures.push_back({{"trial", t},
                                       {"kind", "face_commutation"},
                                       {"i", i},
                                       {"j", j}});
          }
        }
    }
  }
  report.details["dd_failures"] = dd_failures;
  report.details["face_failures"] = face_failures;
  report.pass = dd_failures == 0 && face_failures == 0;
  return finish(report, opt);
}

int cmd_calibrate(const Options& opt) {
  VerificationReport report = base_report("calibrate", opt);
  report.tol = tol_or(opt, 1e-5);
  const CalibrationResult cal = calibrate_cross_term(
      matrix_dim(opt), opt.seed, std::max(opt.trials, 50), opt.h);
  report.calibrated_mu = cal.mu;
  report.max_residual = cal.max_rel_residual;
  report.details["tuples_used"] = cal.tuples_used;
  report.details["tuples_excluded"] = cal.tuples_excluded;
  report.pass = cal.max_rel_residual <= report.tol;
  if (!report.pass)
    report.failures.push_back({{"max_rel_residual", cal.max_rel_residual}});
  return finish(report, opt);
}

int cmd_verify_cross(const Options& opt) {
  VerificationReport report = base_report("verify-cross", opt);
  report.tol = tol_or(opt, 1e-5);
  const int n = matrix_dim(opt);
  const CalibrationResult cal =
      calibrate_cross_term(n, trial_seed(opt.seed, 0x9e3779b9), 100, opt.h);
  report.calibrated_mu = cal.mu;

  const MultiForm delta3 = delta_pullback(invariant_three_form());
  const MultiForm d_cross =
      exterior_derivative(cross_term_two_form(cal.mu), opt.h);
  auto residual_at = [&](const MultiForm& d_form, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Mat> point = {haar_sample(n, rng), haar_sample(n, rng)};
    std::vector<std::vector<Mat>> tangents;
    for (int a = 0; a < 3; ++a)
      tangents.push_back(
          {random_algebra_element(n, rng), random_algebra_element(n, rng)});
    const double y = delta3(point, tangents);
    const double x = d_form(point, tangents);
    return std::abs(y + x) / std::max(1.0, std::abs(y));
  };
  double max_res = 0.0;
  for (int t = 0; t < opt.trials; ++t)
    max_res = std::max(max_res, residual_at(d_cross, trial_seed(opt.seed, t)));
  report.max_residual = max_res;

  // quadratic order: same tuples, truncation-dominated step, halved
  const double h_order = 1e-4;
  const MultiForm d_h = exterior_derivative(cross_term_two_form(cal.mu), h_order);
  const MultiForm d_h2 =
      exterior_derivative(cross_term_two_form(cal.mu), h_order / 2);
  double res_h = 0.0, res_h2 = 0.0;
  const int order_trials = std::min(opt.trials, 40);
  for (int t = 0; t < order_trials; ++t) {
    res_h = std::max(res_h, residual_at(d_h, trial_seed(opt.seed, t)));
    res_h2 = std::max(res_h2, residual_at(d_h2, trial_seed(opt.seed, t)));
  }
  const double ratio = res_h / std::max(res_h2, 1e-300);
  report.details["halving_h"] = h_order;
  report.details["residual_at_halving_h"] = res_h;
  report.details["residual_at_half"] = res_h2;
  report.details["halving_ratio"] = ratio;
  report.pass = max_res <= report.tol && ratio >= 3.5;
  if (!report.pass)
    report.failures.push_back(
        {{"max_residual", max_res}, {"halving_ratio", ratio}});
  return finish(report, opt);
}

int cmd_verify_main(const Options& opt) {
  VerificationReport report = base_report("verify-main", opt);
  report.tol = tol_or(opt, 1e-5);
  const int n = matrix_dim(opt);
  const CalibrationResult cal =
      calibrate_cross_term(n, trial_seed(opt.seed, 0x9e3779b9), 100, opt.h);
  report.calibrated_mu = cal.mu;

  const MultiForm lhs_form =
      exterior_derivative(relator_primitive(opt.genus, cal.mu), opt.h);
  const MultiForm rhs_form = moment_pullback_three_form(opt.genus);
  const auto residuals = run_trials(opt.trials, [&](int t) {
    std::mt19937_64 rng(trial_seed(opt.seed, t));
    const Configuration c = haar_configuration(opt.genus, n, rng);
    std::vector<std::vector<Mat>> triple;
    for (int a = 0; a < 3; ++a)
      triple.push_back(random_tangent(opt.genus, n, rng));
    const double lhs = lhs_form(c, triple);
    const double rhs = rhs_form(c, triple);
    return std::abs(lhs - rhs) /
           std::max({1.0, std::abs(lhs), std::abs(rhs)});
  });
  double max_res = 0.0;
  for (int t = 0; t < opt.trials; ++t) {
    max_res = std::max(max_res, residuals[t]);
    if (residuals[t] > report.tol)
      report.failures.push_back(
          {{"trial", t},
           {"trial_seed", trial_seed(opt.seed, t)},
           {"rel_residual", residuals[t]}});
  }
  report.max_residual = max_res;
  report.pass = report.failures.empty();
  return finish(report, opt);
}

int cmd_verify_moment(const Options& opt) {
  VerificationReport report = base_report("verify-moment", opt);
  report.tol = tol_or(opt, 1e-12);
  const int n = matrix_dim(opt);
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  bool pass = true;
  double max_res = 0.0;

  if (n == 2) {
    // anticommuting-pair fixture evaluates to -I, a submersion point
    const Configuration fix = pair_configuration(opt.genus, 2);
    const Mat target = -Mat::Identity(2, 2);
    const double fixture_err =
        (moment_map(opt.genus, fix) - target).norm();
    const int rank = jacobian_rank(opt.genus, fix);
    checks["fixture_error"] = fixture_err;
    checks["fixture_rank"] = rank;
    max_res = std::max(max_res, fixture_err);
    if (fixture_err > report.tol || rank != 3) {
      pass = false;
      report.failures.push_back(
          {{"kind", "fixture"}, {"error", fixture_err}, {"rank", rank}});
    }
  }

  // group-generic invariants on Haar samples
  double worst_det = 0.0, worst_equiv = 0.0, worst_abelian = 0.0;
  for (int t = 0; t < opt.trials; ++t) {
    std::mt19937_64 rng(trial_seed(opt.seed, t));
    const Configuration c = haar_configuration(opt.genus, n, rng);
    const Mat phi = moment_map(opt.genus, c);
    worst_det = std::max(worst_det,
                         std::abs(phi.determinant() - std::complex<double>(1)));
    if (!is_special_unitary(phi, 1e-10)) pass = false;
    // conjugation equivariance
    const Mat k = haar_sample(n, rng);
    Configuration conj = c;
    for (Mat& m : conj) m = k * m * k.adjoint();
    worst_equiv = std::max(
        worst_equiv,
        (moment_map(opt.genus, conj) - k * phi * k.adjoint()).norm());
    // common maximal torus kills every commutator
    const Mat u = haar_sample(n, rng);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    Configuration abelian;
    for (int s = 0; s < 2 * opt.genus; ++s) {
      Eigen::VectorXcd phases(n);
      double total = 0.0;
      for (int l = 0; l + 1 < n; ++l) {
        const double th = angle(rng);
        phases[l] = std::exp(std::complex<double>(0, th));
        total += th;
      }
      phases[n - 1] = std::exp(std::complex<double>(0, -total));
      abelian.push_back(u * phases.asDiagonal() * u.adjoint());
    }
    worst_abelian = std::max(
        worst_abelian,
        (moment_map(opt.genus, abelian) - Mat::Identity(n, n)).norm());
  }
  checks["max_det_defect"] = worst_det;
  checks["max_equivariance_defect"] = worst_equiv;
  checks["max_abelian_defect"] = worst_abelian;
  if (worst_det > 1e-10 || worst_equiv > 1e-9 || worst_abelian > 1e-10)
    pass = false;

  // Haar sanity: fundamental character integrates to zero
  {
    std::mt19937_64 rng(trial_seed(opt.seed, 0xabcdef));
    const int samples = 10000;
    double mean = 0.0;
    for (int s = 0; s < samples; ++s)
      mean += haar_sample(n, rng).trace().real();
    mean /= samples;
    checks["haar_trace_mean"] = mean;
    checks["haar_trace_samples"] = samples;
    if (std::abs(mean) > 0.05) {
      pass = false;
      report.failures.push_back({{"kind", "haar_mean"}, {"mean", mean}});
    }
  }

  report.details = checks;
  report.max_residual = std::max({max_res, worst_det, worst_equiv, worst_abelian});
  report.pass = pass;
  if (!pass && report.failures.empty())
    report.failures.push_back({{"kind", "invariants"}, {"details", checks}});
  return finish(report, opt);
}

int cmd_project_fiber(const Options& opt) {
  VerificationReport report = base_report("project-fiber", opt);
  report.tol = tol_or(opt, 1e-10);
  const int n = matrix_dim(opt);
  struct Trial {
    bool converged;
    int iterations;
    double residual;
    Configuration start;
  };
  const auto results = run_trials(opt.trials, [&](int t) {
    std::mt19937_64 rng(trial_seed(opt.seed, t));
    const FiberSeed seed = random_fiber_point(opt.genus, n, rng);
    const Configuration start = perturb(seed.point, 1e-2, rng);
    const ProjectionResult pr =
        project_to_fiber(opt.genus, start, seed.beta, report.tol, 50);
    return Trial{pr.converged, pr.iterations, pr.residual, start};
  });
  int successes = 0;
  int worst_iterations = 0;
  double max_res = 0.0;
  for (int t = 0; t < opt.trials; ++t) {
    const Trial& tr = results[t];
    successes += tr.converged;
    worst_iterations = std::max(worst_iterations, tr.iterations);
    max_res = std::max(max_res, tr.residual);
    if (!tr.converged)
      report.failures.push_back({{"trial", t},
                                 {"trial_seed", trial_seed(opt.seed, t)},
                                 {"residual", tr.residual},
                                 {"start", configuration_to_json(tr.start)}});
  }
  report.max_residual = max_res;
  report.details["successes"] = successes;
  report.details["worst_iterations"] = worst_iterations;
  report.pass = opt.trials > 0 &&
                successes >= static_cast<int>(std::ceil(0.95 * opt.trials));
  return finish(report, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification suites for surface-group representation identities"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* sub, int min_genus = 1) {
    sub->add_option("--genus", opt.genus, "surface genus")
        ->check(CLI::Range(min_genus, 64));
    sub->add_option("--group", opt.group, "matrix group")
        ->check(CLI::IsMember({"su2", "su3"}));
    sub->add_option("--seed", opt.seed, "base RNG seed");
    sub->add_option("--trials", opt.trials, "number of random trials")
        ->check(CLI::Range(1, 1000000));
    sub->add_option("--step", opt.h, "finite-difference step")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", opt.tol, "residual tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", opt.out, "write the JSON report to this file");
  };

  CLI::App* fox = app.add_subcommand(
      "verify-fox", "derivative of the relator against the prefix table");
  add_common(fox);
  CLI::App* telescope = app.add_subcommand(
      "verify-telescope", "signed telescoping sum collapses to [R] - [1]");
  add_common(telescope);
  CLI::App* cycle = app.add_subcommand(
      "verify-cycle",
      "boundary of the fundamental cycle over the free group and the quotient");
  add_common(cycle, 2);
  CLI::App* bar = app.add_subcommand(
      "verify-bar", "simplicial identities on random chains");
  add_common(bar);
  CLI::App* cross = app.add_subcommand(
      "verify-cross",
      "calibrated coboundary-vs-derivative identity on the group square");
  add_common(cross);
  CLI::App* main_id = app.add_subcommand(
      "verify-main",
      "derivative of the relator primitive against the moment pullback");
  add_common(main_id);
  CLI::App* moment = app.add_subcommand(
      "verify-moment", "moment-map fixture, invariants and Haar sanity");
  add_common(moment);
  CLI::App* fiber = app.add_subcommand(
      "project-fiber", "Gauss-Newton projection onto a moment fiber");
  add_common(fiber);
  CLI::App* calibrate = app.add_subcommand(
      "calibrate", "fit the cross-term scale on the group square");
  add_common(calibrate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 1;
  }

  try {
    if (fox->parsed()) return cmd_verify_fox(opt);
    if (telescope->parsed()) return cmd_verify_telescope(opt);
    if (cycle->parsed()) return cmd_verify_cycle(opt);
    if (bar->parsed()) return cmd_verify_bar(opt);
    if (cross->parsed()) return cmd_verify_cross(opt);
    if (main_id->parsed()) return cmd_verify_main(opt);
    if (moment->parsed()) return cmd_verify_moment(opt);
    if (fiber->parsed()) return cmd_project_fiber(opt);
    if (calibrate->parsed()) return cmd_calibrate(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
