#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "surfrep/fox.hpp"

using namespace surfrep;

namespace {

Word w(const std::string& text, int genus = 2) {
  return parse_word(text, genus);
}

Word random_word(int genus, int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, max_len), idx(1, 2 * genus),
      sgn(0, 1);
  std::vector<Letter> letters;
  const int L = len(rng);
  for (int l = 0; l < L; ++l) letters.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return Word(genus, std::move(letters));
}

}  // namespace

TEST_CASE("relator shape") {
  CHECK(relator(1) == w("[x1,x2]", 1));
  CHECK(relator(2) == w("[x1,x2] [x3,x4]", 2));
  for (int g = 1; g <= 6; ++g) {
    CHECK(relator(g).length() == 4 * static_cast<std::size_t>(g));
    CHECK(exponent_sums(relator(g)) ==
          std::vector<long long>(2 * g, 0));
  }
}

TEST_CASE("fox derivative base rules") {
  CHECK(fox_derivative(w("x1", 1), 1) == single(Word(1)));
  CHECK(fox_derivative(w("x1", 1), 2).is_zero());
  CHECK(fox_derivative(w("x1^-1", 1), 1) ==
        single(w("x1^-1", 1), -1));
  CHECK(fox_derivative(w("x2^-1", 1), 1).is_zero());
  CHECK_THROWS_AS(fox_derivative(w("x1", 1), 3), std::invalid_argument);
}

TEST_CASE("fox derivative of the genus-1 commutator") {
  const FormalWordSum d2 = fox_derivative(w("[x1,x2]", 1), 2);
  CHECK(d2 == single(w("x1", 1)) - single(w("x1 x2 x1^-1 x2^-1", 1)));
  const FormalWordSum d1 = fox_derivative(w("[x1,x2]", 1), 1);
  CHECK(d1 == single(Word(1)) - single(w("x1 x2 x1^-1", 1)));
}

TEST_CASE("fox derivative satisfies the product rule") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const int genus = 1 + static_cast<int>(rng() % 3);
    const Word u = random_word(genus, 8, rng);
    const Word v = random_word(genus, 8, rng);
    const int i = 1 + static_cast<int>(rng() % (2 * genus));
    CHECK(fox_derivative(multiply(u, v), i) ==
          fox_derivative(u, i) + left_multiply(u, fox_derivative(v, i)));
  }
}

TEST_CASE("fox derivative of w w^-1 vanishes") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const Word u = random_word(2, 10, rng);
    // d(1) = 0 expressed through the product rule on u u^-1
    const FormalWordSum lhs =
        fox_derivative(u, 1) + left_multiply(u, fox_derivative(inverse(u), 1));
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("gamma prefix table") {
  CHECK(gamma(1, 0, 1).empty());
  CHECK(gamma(1, 1, 1) == w("x1 x2 x1^-1", 1));
  CHECK(gamma(1, 0, 2) == w("x1", 1));
  CHECK(gamma(1, 1, 2) == relator(1));
  CHECK(gamma(2, 0, 3) == w("[x1,x2]"));
  CHECK(gamma(2, 1, 3) == w("[x1,x2] x3 x4 x3^-1"));
  CHECK(gamma(2, 0, 4) == w("[x1,x2] x3"));
  CHECK(gamma(2, 1, 4) == relator(2));
  CHECK_THROWS_AS(gamma(1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(gamma(1, 0, 3), std::invalid_argument);
}

TEST_CASE("relator derivative equals the gamma difference") {
  for (int g = 1; g <= 5; ++g) {
    const Word rel = relator(g);
    for (int i = 1; i <= 2 * g; ++i)
      CHECK(fox_derivative(rel, i) ==
            single(gamma(g, 0, i)) - single(gamma(g, 1, i)));
  }
}

TEST_CASE("z words") {
  CHECK(z_word(1, 0, 1, 0) == w("x1", 1));
  CHECK(z_word(1, 1, 1, 1) == w("x1 x2", 1));
  CHECK(z_word(1, 1, 2, 2) == relator(1));
  CHECK_THROWS_AS(z_word(1, 0, 1, 3), std::invalid_argument);
}

TEST_CASE("pairwise z cancellations") {
  for (int g = 1; g <= 5; ++g) {
    for (int i = 1; i <= 2 * g; ++i)
      CHECK(z_word(g, 0, i, 0) == z_word(g, 1, i, 0));
    for (int i = 1; i <= g; ++i) {
      CHECK(z_word(g, 1, 2 * i, 1) == z_word(g, 1, 2 * i - 1, 2));
      CHECK(z_word(g, 0, 2 * i - 1, 1) == z_word(g, 0, 2 * i, 2));
      CHECK(z_word(g, 0, 2 * i, 1) == z_word(g, 1, 2 * i - 1, 1));
      if (i < g) CHECK(z_word(g, 0, 2 * i + 1, 2) == z_word(g, 1, 2 * i, 2));
    }
    // boundary survivors of the telescoping
    CHECK(z_word(g, 0, 1, 2).empty());
    CHECK(z_word(g, 1, 2 * g, 2) == relator(g));
  }
}

TEST_CASE("telescope collapses to [R] - [1]") {
  for (int g = 1; g <= 5; ++g) {
    CHECK(telescope(g) == single(relator(g)) - single(Word(g)));
    const auto terms = telescope_terms(g);
    CHECK(terms.size() == 12 * static_cast<std::size_t>(g));
    long long mass = 0;
    for (const auto& [sign, word] : terms) mass += sign;
    CHECK(mass == 0);
  }
}

TEST_CASE("telescope at genus 1, all twelve terms") {
  const auto terms = telescope_terms(1);
  // (i, tau, l) lexicographic; sign (-1)^(1+tau+l)
  const std::vector<std::pair<int, std::string>> expected = {
      {-1, "x1"}, {1, "x1"},    {-1, "1"},
      {1, "x1"},  {-1, "x1 x2"}, {1, "x1 x2 x1^-1"},
      {-1, "x2"}, {1, "x1 x2"},  {-1, "x1"},
      {1, "x2"},  {-1, "x1 x2 x1^-1"}, {1, "x1 x2 x1^-1 x2^-1"}};
  REQUIRE(terms.size() == expected.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    CHECK(terms[k].first == expected[k].first);
    CHECK(print_word(terms[k].second) == expected[k].second);
  }
}

TEST_CASE("fundamental cycle at genus 1") {
  const FormalPairSum c = fundamental_cycle(1);
  FormalPairSum expected;
  expected.add(Word(1), w("x1", 1), 1);
  expected.add(w("x1 x2 x1^-1", 1), w("x1", 1), -1);
  expected.add(w("x1", 1), w("x2", 1), 1);
  expected.add(relator(1), w("x2", 1), -1);
  CHECK(c == expected);
}

TEST_CASE("fundamental cycle has 4g terms tied to the fox derivatives") {
  for (int g = 1; g <= 5; ++g) {
    const FormalPairSum c = fundamental_cycle(g);
    CHECK(c.terms().size() == 4 * static_cast<std::size_t>(g));
    // slice at fixed second component x_i and compare with d(R)/d(x_i)
    for (int i = 1; i <= 2 * g; ++i) {
      FormalWordSum slice(g);
      for (const auto& [pair, coeff] : c.terms())
        if (pair.second == generator(g, i)) slice.add(pair.first, coeff);
      CHECK(slice == fox_derivative(relator(g), i));
    }
  }
}
