#pragma once

#include <map>
#include <utility>
#include <vector>

#include "surfrep/words.hpp"

namespace surfrep {

// Surface relator R = prod_{j=1}^{g} [x_{2j-1}, x_{2j}], length 4g.
Word relator(int genus);

// Fox derivative d(w)/d(x_i) in the group ring of the free group:
//   d(x_j)/d(x_i)    = delta_ij [1]
//   d(uv)/d(x_i)     = d(u)/d(x_i) + u d(v)/d(x_i)
//   d(x_i^-1)/d(x_i) = -[x_i^-1]
FormalWordSum fox_derivative(const Word& w, int i);

// Prefix words gamma^tau_i, tau in {0,1}, i in 1..2g, satisfying
// d(R)/d(x_i) = [gamma^0_i] - [gamma^1_i].
Word gamma(int genus, int tau, int i);

// z^tau_{i,0} = x_i, z^tau_{i,1} = gamma^tau_i x_i, z^tau_{i,2} = gamma^tau_i.
Word z_word(int genus, int tau, int i, int l);

// The 12g signed terms (-1)^(1+tau+l) [z^tau_{i,l}] before collection,
// ordered by (i, tau, l). Signed coefficient mass is zero.
std::vector<std::pair<int, Word>> telescope_terms(int genus);

// Collected telescoping sum; equals [R] - [1].
FormalWordSum telescope(int genus);

// Integer combination of pairs of reduced words, i.e. a degree-2 chain kept
// free of any bar-complex machinery.
class FormalPairSum {
 public:
  FormalPairSum() = default;

  void add(const Word& a, const Word& b, int coeff);
  const std::map<std::pair<Word, Word>, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend auto operator<=>(const FormalPairSum&,
                          const FormalPairSum&) = default;

 private:
  std::map<std::pair<Word, Word>, int> terms_;
};

// sum_{i=1}^{2g} sum_{tau=0,1} (-1)^tau (gamma^tau_i, x_i); 4g terms.
// Pair component i carries the Fox derivative of the relator:
// the (gamma, x_i) pairs with signs (-1)^tau expand d(R)/d(x_i) (x) x_i.
FormalPairSum fundamental_cycle(int genus);

}  // namespace surfrep
