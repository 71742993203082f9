#include "surfrep/dehn.hpp"

#include <algorithm>
#include <stdexcept>

#include "surfrep/fox.hpp"

namespace surfrep {

Word cyclic_reduce(const Word& w) {
  std::vector<Letter> ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == inverse_letter(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(w.genus(),
              std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
}

SurfacePresentation::SurfacePresentation(int genus) : genus_(genus) {
  if (genus < 2)
    throw std::invalid_argument(
        "Dehn reduction requires genus >= 2 (small cancellation fails below)");
  for (const Word& r : {relator(genus), inverse(relator(genus))}) {
    std::vector<Letter> ls = r.letters();
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::vector<Letter> rot(ls.begin() + k, ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + k);
      forms_.push_back(Word(genus, std::move(rot)));
    }
  }
}

namespace {

struct Match {
  std::size_t start = 0;
  std::size_t length = 0;
  const Word* form = nullptr;
};

// Leftmost longest cyclic subword of w matching a prefix of some relator
// form with length > half the relator.
bool find_match(const SurfacePresentation& pres,
                const std::vector<Letter>& ls, Match* out) {
  const std::size_t relator_len = 4 * pres.genus();
  const std::size_t half = 2 * pres.genus();
  const std::size_t n = ls.size();
  if (n <= half) return false;
  const std::size_t max_len = std::min(n, relator_len);
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t len = max_len; len > half; --len) {
      for (const Word& form : pres.relator_forms()) {
        const std::vector<Letter>& fs = form.letters();
        bool ok = true;
        for (std::size_t k = 0; k < len; ++k) {
          if (ls[(start + k) % n] != fs[k]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          *out = {start, len, &form};
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

Word dehn_reduce(const SurfacePresentation& pres, const Word& w) {
  if (w.genus() != pres.genus())
    throw std::invalid_argument("genus mismatch");
  Word cur = cyclic_reduce(w);
  Match m;
  while (find_match(pres, cur.letters(), &m)) {
    const std::vector<Letter>& ls = cur.letters();
    const std::vector<Letter>& fs = m.form->letters();
    // Rotate so the match is a prefix, then swap it for the inverse of the
    // complementary relator piece (strictly shorter since length > half).
    std::vector<Letter> next;
    for (std::size_t k = fs.size(); k > m.length; --k)
      next.push_back(inverse_letter(fs[k - 1]));
    for (std::size_t k = m.length; k < ls.size(); ++k)
      next.push_back(ls[(m.start + k) % ls.size()]);
    cur = cyclic_reduce(Word(cur.genus(), std::move(next)));
  }
  return cur;
}

bool is_trivial(const SurfacePresentation& pres, const Word& w) {
  return dehn_reduce(pres, w).empty();
}

}  // namespace surfrep
