#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "surfrep/dehn.hpp"
#include "surfrep/fox.hpp"

using namespace surfrep;

namespace {

Word random_word(int genus, int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, max_len), idx(1, 2 * genus),
      sgn(0, 1);
  std::vector<Letter> letters;
  const int L = len(rng);
  for (int l = 0; l < L; ++l) letters.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return Word(genus, std::move(letters));
}

Word conjugate(const Word& u, const Word& v) {
  return multiply(multiply(u, v), inverse(u));
}

}  // namespace

TEST_CASE("cyclic reduction strips matching ends") {
  const Word w = parse_word("x1 x2 x1^-1", 2);
  CHECK(cyclic_reduce(w) == parse_word("x2", 2));
  CHECK(cyclic_reduce(parse_word("x1 x2 x2 x1^-1", 2)) ==
        parse_word("x2 x2", 2));
  CHECK(cyclic_reduce(parse_word("x1", 2)) == parse_word("x1", 2));
  CHECK(cyclic_reduce(Word(2)).empty());
  // already cyclically reduced words are untouched
  CHECK(cyclic_reduce(relator(2)) == relator(2));
}

TEST_CASE("presentation requires genus at least 2") {
  CHECK_THROWS_AS(SurfacePresentation(1), std::invalid_argument);
  CHECK_THROWS_AS(SurfacePresentation(0), std::invalid_argument);
  const SurfacePresentation p(2);
  CHECK(p.genus() == 2);
  CHECK(p.relator_forms().size() == 16);
  for (const Word& f : p.relator_forms()) CHECK(f.length() == 8);
}

TEST_CASE("relator and its conjugates reduce to the empty word") {
  for (int g : {2, 3, 4}) {
    const SurfacePresentation pres(g);
    CHECK(is_trivial(pres, relator(g)));
    CHECK(is_trivial(pres, inverse(relator(g))));
    CHECK(is_trivial(pres, Word(g)));

    std::mt19937_64 rng(100 + g);
    for (int t = 0; t < 333; ++t) {
      const Word u = random_word(g, 8, rng);
      const Word rel = (rng() % 2) ? relator(g) : inverse(relator(g));
      CHECK(is_trivial(pres, conjugate(u, rel)));
    }
  }
}

TEST_CASE("products of relator conjugates are trivial") {
  const SurfacePresentation pres(2);
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    const Word u = random_word(2, 6, rng);
    const Word v = random_word(2, 6, rng);
    const Word rel = relator(2);
    const Word prod = multiply(conjugate(u, rel),
                               conjugate(v, (rng() % 2) ? rel : inverse(rel)));
    CHECK(is_trivial(pres, prod));
  }
}

TEST_CASE("nontrivial words stay nontrivial") {
  const SurfacePresentation pres(2);
  for (int i = 1; i <= 4; ++i)
    CHECK_FALSE(is_trivial(pres, generator(2, i)));
  CHECK_FALSE(is_trivial(pres, parse_word("x1 x2", 2)));
  CHECK_FALSE(is_trivial(pres, parse_word("[x1,x2]", 2)));
  // half the relator misses triviality by exactly the other half
  CHECK_FALSE(is_trivial(pres, parse_word("[x1,x2] x3", 2)));
}

TEST_CASE("dehn triviality implies zero exponent sums") {
  // the abelianization Z^2g is an independent (partial) oracle
  for (int g : {2, 3}) {
    const SurfacePresentation pres(g);
    std::mt19937_64 rng(500 + g);
    const std::vector<long long> zero(2 * g, 0);
    int trivial_seen = 0;
    for (int t = 0; t < 500; ++t) {
      Word u = random_word(g, 10, rng);
      if (rng() % 3 == 0) u = multiply(u, conjugate(random_word(g, 4, rng),
                                                    relator(g)));
      if (is_trivial(pres, u)) {
        ++trivial_seen;
        CHECK(exponent_sums(u) == zero);
      }
    }
    CHECK(trivial_seen > 0);
  }
}

TEST_CASE("reduction never lengthens a cyclically reduced word") {
  const SurfacePresentation pres(3);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 500; ++t) {
    const Word u = cyclic_reduce(random_word(3, 20, rng));
    const Word red = dehn_reduce(pres, u);
    CHECK(red.length() <= u.length());
  }
}

TEST_CASE("reduction preserves exponent sums up to relator content") {
  // dehn_reduce only rewrites along the relator, whose exponent sums vanish,
  // and rotates (conjugates), which also preserves them
  const SurfacePresentation pres(2);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    const Word u = random_word(2, 14, rng);
    CHECK(exponent_sums(dehn_reduce(pres, u)) == exponent_sums(u));
  }
}
