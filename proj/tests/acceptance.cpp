// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds at its stated tolerance.
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "surfrep/bar.hpp"
#include "surfrep/dehn.hpp"
#include "surfrep/fiber.hpp"
#include "surfrep/forms.hpp"
#include "surfrep/fox.hpp"

using namespace surfrep;

namespace {

bool all_pass = true;

void criterion(int num, bool ok, const std::string& text) {
  std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", num, text.c_str());
  if (!ok) all_pass = false;
}

Word random_word(int genus, int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, max_len), idx(1, 2 * genus),
      sgn(0, 1);
  std::vector<Letter> letters;
  const int L = len(rng);
  for (int l = 0; l < L; ++l) letters.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return Word(genus, std::move(letters));
}

void check_fox_vs_gamma() {
  bool ok = true;
  for (int g = 1; g <= 5; ++g) {
    const Word rel = relator(g);
    for (int i = 1; i <= 2 * g; ++i)
      ok = ok && fox_derivative(rel, i) ==
                     single(gamma(g, 0, i)) - single(gamma(g, 1, i));
  }
  criterion(1, ok,
            "relator fox derivatives equal the prefix-word differences "
            "(exact, genus 1..5)");
}

void check_telescope() {
  bool ok = true;
  for (int g = 1; g <= 5; ++g) {
    ok = ok && telescope(g) == single(relator(g)) - single(Word(g));
    const auto terms = telescope_terms(g);
    ok = ok && terms.size() == 12 * static_cast<std::size_t>(g);
    long long mass = 0;
    for (const auto& [sign, word] : terms) mass += sign;
    ok = ok && mass == 0;
  }
  criterion(2, ok,
            "telescoping sum collapses to [R] - [1] from 12g signed terms "
            "(exact, genus 1..5)");
}

void check_cycle_boundary() {
  bool ok = true;
  for (int g = 1; g <= 4; ++g) {
    const FreeGroupOracle oracle{g};
    const auto d = boundary(fundamental_cycle_chain(g, oracle));
    ok = ok && d.terms().size() == 2;
    for (const auto& [tuple, coeff] : d.terms()) {
      if (tuple[0] == Word(g)) ok = ok && coeff == 1;
      else ok = ok && tuple[0] == relator(g) && coeff == -1;
    }
  }
  for (int g : {2, 3, 4}) ok = ok && is_cycle_mod_relator(g);
  criterion(3, ok,
            "fundamental cycle boundary is (1) - (R) over the free group and "
            "zero modulo the relator (genus 2..4)");
}

void check_bar_complex() {
  const FreeGroupOracle oracle{2};
  std::mt19937_64 rng(2024);
  bool ok = true;
  for (int t = 0; t < 1000; ++t) {
    const int deg = 3 + static_cast<int>(rng() % 2);
    BarChain<FreeGroupOracle> chain(oracle, deg);
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < terms; ++k) {
      std::vector<Word> tuple;
      for (int j = 0; j < deg; ++j) tuple.push_back(random_word(2, 4, rng));
      chain.add(tuple, 1 - 2 * static_cast<int>(rng() % 2));
    }
    ok = ok && boundary(boundary(chain)).is_zero();

    std::vector<Word> tuple;
    for (int j = 0; j < 4; ++j) tuple.push_back(random_word(2, 4, rng));
    for (int jj = 1; jj <= 4 && ok; ++jj)
      for (int ii = 0; ii < jj && ok; ++ii)
        ok = face(oracle, ii, face(oracle, jj, tuple)) ==
             face(oracle, jj - 1, face(oracle, ii, tuple));
  }
  criterion(4, ok,
            "bar complex boundary squares to zero and faces commute on 1000 "
            "random chains");
}

void check_calibration() {
  const double tol = 1e-5;
  const CalibrationResult cal = calibrate_cross_term(2, 2024, 100, 1e-5);

  // order confirmation: same tuples, truncation-dominated step, halved
  const MultiForm delta3 = delta_pullback(invariant_three_form());
  const double h_order = 1e-4;
  const MultiForm d_h = exterior_derivative(cross_term_two_form(cal.mu), h_order);
  const MultiForm d_h2 =
      exterior_derivative(cross_term_two_form(cal.mu), h_order / 2);
  double res_h = 0.0, res_h2 = 0.0;
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const std::vector<Mat> point = {haar_sample(2, rng), haar_sample(2, rng)};
    std::vector<std::vector<Mat>> tangents;
    for (int a = 0; a < 3; ++a)
      tangents.push_back(
          {random_algebra_element(2, rng), random_algebra_element(2, rng)});
    const double y = delta3(point, tangents);
    res_h = std::max(res_h, std::abs(y + d_h(point, tangents)));
    res_h2 = std::max(res_h2, std::abs(y + d_h2(point, tangents)));
  }
  const double ratio = res_h / std::max(res_h2, 1e-300);

  const bool ok = cal.max_rel_residual <= tol && ratio >= 3.5;
  char buf[224];
  std::snprintf(buf, sizeof buf,
                "cross-term calibration: mu = %.9f, max rel residual %.2e <= "
                "1e-05 over 100 tuples, halving ratio %.2f >= 3.5",
                cal.mu, cal.max_rel_residual, ratio);
  criterion(5, ok, buf);
}

void check_primitive_identity() {
  const double tol = 1e-5, h = 1e-5, mu = -3.0;
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int g : {1, 2}) {
    for (int t = 0; t < 50; ++t) {
      const Configuration c = haar_configuration(g, 2, rng);
      std::vector<Tangent> triple;
      for (int a = 0; a < 3; ++a) triple.push_back(random_tangent(g, 2, rng));
      worst = std::max(worst,
                       check_main_identity(g, c, triple, mu, h).rel_err);
    }
  }
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "derivative of the relator primitive matches the moment "
                "pullback: worst rel residual %.2e <= 1e-05 on 100 pairs "
                "(genus 1, 2)",
                worst);
  criterion(6, worst <= tol, buf);
}

void check_moment_fixture() {
  const Configuration c = pair_configuration(1, 2);
  const double defect = frobenius(moment_map(1, c) + identity_matrix(2));
  const int rank = jacobian_rank(1, c);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "moment map sends the reference pair to -I (defect %.1e <= "
                "1e-12) with differential rank %d == 3",
                defect, rank);
  criterion(7, defect <= 1e-12 && rank == 3, buf);
}

void check_fiber_projection() {
  std::mt19937_64 rng(13);
  const int trials = 50;
  int converged = 0;
  for (int t = 0; t < trials; ++t) {
    const int g = 1 + t % 2;
    const FiberSeed seed = random_fiber_point(g, 2, rng);
    const Configuration start = perturb(seed.point, 1e-2, rng);
    const ProjectionResult r =
        project_to_fiber(g, start, seed.beta, 1e-10, 50);
    if (r.converged) ++converged;
  }
  const int needed = (trials * 95 + 99) / 100;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "fiber projection: %d/%d perturbed starts reach residual "
                "1e-10 within 50 iterations (need %d)",
                converged, trials, needed);
  criterion(8, converged >= needed, buf);
}

void check_word_differential() {
  std::mt19937_64 rng(17);
  const double h = 1e-5;
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const int genus = 1 + static_cast<int>(rng() % 2);
    const int n = (rng() % 4 == 0) ? 3 : 2;
    const Configuration c = haar_configuration(genus, n, rng);
    const Tangent v = random_tangent(genus, n, rng);
    Word w = random_word(genus, 12, rng);
    if (w.empty()) w = generator(genus, 1);

    const Mat exact = word_differential(w, c, v);
    Configuration plus = c, minus = c;
    for (std::size_t s = 0; s < c.size(); ++s) {
      plus[s] = c[s] * expm(h * v[s]);
      minus[s] = c[s] * expm(-h * v[s]);
    }
    const Mat fd = evaluate_word(w, c).adjoint() *
                   (evaluate_word(w, plus) - evaluate_word(w, minus)) /
                   (2 * h);
    worst = std::max(worst, frobenius(fd - exact) /
                                std::max(1.0, frobenius(exact)));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "word differential matches central differences: worst rel "
                "error %.2e <= 1e-08 on 1000 random triples",
                worst);
  criterion(9, worst <= 1e-8, buf);
}

}  // namespace

int main() {
  check_fox_vs_gamma();
  check_telescope();
  check_cycle_boundary();
  check_bar_complex();
  check_calibration();
  check_primitive_identity();
  check_moment_fixture();
  check_fiber_projection();
  check_word_differential();
  return all_pass ? 0 : 2;
}
