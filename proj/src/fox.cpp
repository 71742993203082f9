#include "surfrep/fox.hpp"

#include <stdexcept>

namespace surfrep {

Word relator(int genus) {
  check_genus(genus);
  std::vector<Letter> letters;
  letters.reserve(4 * genus);
  for (int j = 1; j <= genus; ++j) {
    int a = 2 * j - 1, b = 2 * j;
    letters.push_back({a, 1});
    letters.push_back({b, 1});
    letters.push_back({a, -1});
    letters.push_back({b, -1});
  }
  return Word(genus, std::move(letters));
}

FormalWordSum fox_derivative(const Word& w, int i) {
  if (i < 1 || i > 2 * w.genus())
    throw std::invalid_argument("generator index out of range");
  FormalWordSum out(w.genus());
  Word prefix(w.genus());
  for (Letter l : w.letters()) {
    Word next = multiply(prefix, Word(w.genus(), {l}));
    if (l.index == i) {
      if (l.sign > 0)
        out.add(prefix, 1);
      else
        out.add(next, -1);  // prefix * x_i^-1
    }
    prefix = next;
  }
  return out;
}

Word gamma(int genus, int tau, int i) {
  check_genus(genus);
  if (tau != 0 && tau != 1) throw std::invalid_argument("tau must be 0 or 1");
  if (i < 1 || i > 2 * genus)
    throw std::invalid_argument("generator index out of range");
  int block = (i + 1) / 2;  // handle pair containing x_i
  std::vector<Letter> letters;
  for (int l = 1; l < block; ++l) {
    int a = 2 * l - 1, b = 2 * l;
    letters.push_back({a, 1});
    letters.push_back({b, 1});
    letters.push_back({a, -1});
    letters.push_back({b, -1});
  }
  int a = 2 * block - 1, b = 2 * block;
  if (i % 2 == 1) {
    if (tau == 1) {
      letters.push_back({a, 1});
      letters.push_back({b, 1});
      letters.push_back({a, -1});
    }
  } else {
    if (tau == 0) {
      letters.push_back({a, 1});
    } else {
      letters.push_back({a, 1});
      letters.push_back({b, 1});
      letters.push_back({a, -1});
      letters.push_back({b, -1});
    }
  }
  return Word(genus, std::move(letters));
}

Word z_word(int genus, int tau, int i, int l) {
  switch (l) {
    case 0:
      return generator(genus, i);
    case 1:
      return multiply(gamma(genus, tau, i), generator(genus, i));
    case 2:
      return gamma(genus, tau, i);
    default:
      throw std::invalid_argument("l must be 0, 1 or 2");
  }
}

std::vector<std::pair<int, Word>> telescope_terms(int genus) {
  check_genus(genus);
  std::vector<std::pair<int, Word>> terms;
  terms.reserve(12 * genus);
  for (int i = 1; i <= 2 * genus; ++i)
    for (int tau = 0; tau <= 1; ++tau)
      for (int l = 0; l <= 2; ++l) {
        int sign = ((1 + tau + l) % 2 == 0) ? 1 : -1;
        terms.emplace_back(sign, z_word(genus, tau, i, l));
      }
  return terms;
}

FormalWordSum telescope(int genus) {
  FormalWordSum sum(genus);
  for (const auto& [sign, w] : telescope_terms(genus)) sum.add(w, sign);
  return sum;
}

void FormalPairSum::add(const Word& a, const Word& b, int coeff) {
  check_same_genus(a, b);
  if (coeff == 0) return;
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

FormalPairSum fundamental_cycle(int genus) {
  check_genus(genus);
  FormalPairSum cycle;
  for (int i = 1; i <= 2 * genus; ++i)
    for (int tau = 0; tau <= 1; ++tau)
      cycle.add(gamma(genus, tau, i), generator(genus, i), tau == 0 ? 1 : -1);
  return cycle;
}

}  // namespace surfrep
