#pragma once

#include <vector>

#include "surfrep/words.hpp"

namespace surfrep {

// Strip matching first/last letters until the word is cyclically reduced.
// The result is a conjugate of the input.
Word cyclic_reduce(const Word& w);

// One-relator surface presentation <x_1..x_2g | prod [x_{2j-1}, x_{2j}]>.
// Stores the 8g cyclic rotations of the relator and its inverse, which is
// everything Dehn reduction matches against. Requires genus >= 2: the
// relator only satisfies the small-cancellation bound that makes Dehn's
// algorithm complete from genus 2 on (the genus-1 quotient is Z^2, where
// the method does not apply).
class SurfacePresentation {
 public:
  explicit SurfacePresentation(int genus);

  int genus() const { return genus_; }
  const std::vector<Word>& relator_forms() const { return forms_; }

 private:
  int genus_;
  std::vector<Word> forms_;
};

// Dehn reduction of the cyclic word: repeatedly cyclically reduce, then
// replace the leftmost longest cyclic subword matching more than half of a
// relator form (length > 2g) by the inverse of the complementary piece.
// Length strictly decreases at each replacement. The result is a normal
// form equal to the input up to conjugacy (rotations conjugate the word);
// it is empty iff the input is trivial in the surface group, and that
// equivalence is exact.
Word dehn_reduce(const SurfacePresentation& pres, const Word& w);

bool is_trivial(const SurfacePresentation& pres, const Word& w);

}  // namespace surfrep
