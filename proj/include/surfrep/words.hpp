#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace surfrep {

// Generator letter: x_k for sign = +1, x_k^-1 for sign = -1, with 1 <= k <= 2*genus.
struct Letter {
  int index = 1;
  int sign = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

Letter inverse_letter(Letter l);

// Freely reduced word in the free group on 2*genus generators.
// Invariants: stored letters contain no adjacent x x^-1 pair; every index
// lies in [1, 2*genus]. Words carry their ambient genus and operations on
// words of different genus throw std::invalid_argument.
class Word {
 public:
  Word() = default;
  explicit Word(int genus);
  Word(int genus, std::vector<Letter> letters);  // reduces eagerly

  int genus() const { return genus_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int genus_ = 1;
  std::vector<Letter> letters_;
};

void check_genus(int genus);
void check_same_genus(const Word& a, const Word& b);

Word reduce(int genus, const std::vector<Letter>& raw);
Word multiply(const Word& a, const Word& b);
Word inverse(const Word& w);
Word generator(int genus, int index, int sign = 1);

// Exponent sum of each generator; kills commutators, so it is a sound
// nontriviality witness for quotients of the free group.
std::vector<long long> exponent_sums(const Word& w);

// Word grammar: whitespace-separated tokens "x<k>" and "x<k>^-1"; the token
// "1" is the empty word; "[u,v]" with single-letter tokens u, v expands to
// the commutator u v u^-1 v^-1.
Word parse_word(const std::string& text, int genus);
std::string print_word(const Word& w);

// Finite integer combination of reduced words. Terms with coefficient zero
// are erased; the map ordering makes iteration and printing deterministic.
class FormalWordSum {
 public:
  FormalWordSum() = default;
  explicit FormalWordSum(int genus);

  int genus() const { return genus_; }
  void add(const Word& w, int coeff);
  const std::map<Word, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Sum of all coefficients (image under the augmentation map).
  long long coefficient_mass() const;

  friend auto operator<=>(const FormalWordSum&, const FormalWordSum&) = default;

 private:
  int genus_ = 0;  // 0 until the first term fixes it
  std::map<Word, int> terms_;
};

FormalWordSum single(const Word& w, int coeff = 1);
FormalWordSum operator+(const FormalWordSum& a, const FormalWordSum& b);
FormalWordSum operator-(const FormalWordSum& a, const FormalWordSum& b);

// u * sum, multiplying every term on the left.
FormalWordSum left_multiply(const Word& u, const FormalWordSum& s);

std::string print_sum(const FormalWordSum& s);

}  // namespace surfrep
