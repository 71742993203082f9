#pragma once

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "surfrep/dehn.hpp"
#include "surfrep/fox.hpp"
#include "surfrep/words.hpp"

namespace surfrep {

// Group oracles supply the operations the bar complex needs. An oracle
// defines Elem, identity(), multiply(), invert() and equals(); equals may be
// exact (words) or tolerance-based (matrix groups), so chains never assume
// their elements are hashable or ordered.

struct FreeGroupOracle {
  using Elem = Word;
  int genus = 1;

  Elem identity() const { return Word(genus); }
  Elem multiply(const Elem& a, const Elem& b) const {
    return surfrep::multiply(a, b);
  }
  Elem invert(const Elem& a) const { return surfrep::inverse(a); }
  bool equals(const Elem& a, const Elem& b) const { return a == b; }
};

// Words compared modulo the surface relator via Dehn reduction.
struct SurfaceGroupOracle {
  using Elem = Word;
  std::shared_ptr<SurfacePresentation> pres;

  explicit SurfaceGroupOracle(int genus)
      : pres(std::make_shared<SurfacePresentation>(genus)) {}

  Elem identity() const { return Word(pres->genus()); }
  Elem multiply(const Elem& a, const Elem& b) const {
    return surfrep::multiply(a, b);
  }
  Elem invert(const Elem& a) const { return surfrep::inverse(a); }
  bool equals(const Elem& a, const Elem& b) const {
    return is_trivial(*pres, surfrep::multiply(a, surfrep::inverse(b)));
  }
};

// Degree-m chain: integer combination of m-tuples of group elements.
// Terms are collected with the oracle's equality, linearly scanning the
// existing terms; chains here are small, so no ordering is required.
template <class Oracle>
class BarChain {
 public:
  using Elem = typename Oracle::Elem;
  using Tuple = std::vector<Elem>;

  BarChain(Oracle oracle, int degree)
      : oracle_(std::move(oracle)), degree_(degree) {
    if (degree < 1) throw std::invalid_argument("chain degree must be >= 1");
  }

  int degree() const { return degree_; }
  const Oracle& oracle() const { return oracle_; }
  const std::vector<std::pair<Tuple, int>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Tuple& tuple, int coeff) {
    if (static_cast<int>(tuple.size()) != degree_)
      throw std::invalid_argument("tuple size does not match chain degree");
    if (coeff == 0) return;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
      if (tuples_equal(terms_[t].first, tuple)) {
        if ((terms_[t].second += coeff) == 0)
          terms_.erase(terms_.begin() + t);
        return;
      }
    }
    terms_.emplace_back(tuple, coeff);
  }

 private:
  bool tuples_equal(const Tuple& a, const Tuple& b) const {
    for (int k = 0; k < degree_; ++k)
      if (!oracle_.equals(a[k], b[k])) return false;
    return true;
  }

  Oracle oracle_;
  int degree_;
  std::vector<std::pair<Tuple, int>> terms_;
};

// Face map eps_i on an m-tuple: i = 0 drops the first entry, 0 < i < m
// multiplies entries i and i+1, i = m drops the last entry.
template <class Oracle>
typename BarChain<Oracle>::Tuple face(const Oracle& oracle, int i,
                                      const std::vector<typename Oracle::Elem>& tuple) {
  const int m = static_cast<int>(tuple.size());
  if (m < 1) throw std::invalid_argument("face of an empty tuple");
  if (i < 0 || i > m) throw std::invalid_argument("face index out of range");
  std::vector<typename Oracle::Elem> out;
  out.reserve(m - 1);
  if (i == 0) {
    out.assign(tuple.begin() + 1, tuple.end());
  } else if (i == m) {
    out.assign(tuple.begin(), tuple.end() - 1);
  } else {
    out.assign(tuple.begin(), tuple.begin() + (i - 1));
    out.push_back(oracle.multiply(tuple[i - 1], tuple[i]));
    out.insert(out.end(), tuple.begin() + (i + 1), tuple.end());
  }
  return out;
}

// boundary = sum_{i=0}^{m} (-1)^i eps_i. Degree-1 chains map to zero in
// this complex (there is no degree-0 chain type), matching d o d = 0.
template <class Oracle>
BarChain<Oracle> boundary(const BarChain<Oracle>& chain) {
  if (chain.degree() < 2)
    throw std::invalid_argument("boundary needs chain degree >= 2");
  BarChain<Oracle> out(chain.oracle(), chain.degree() - 1);
  for (const auto& [tuple, coeff] : chain.terms())
    for (int i = 0; i <= chain.degree(); ++i)
      out.add(face(chain.oracle(), i, tuple),
              (i % 2 == 0) ? coeff : -coeff);
  return out;
}

// Signed face indices of the coboundary on q-cochains:
// (delta f)(t) = sum (sign, i) f(eps_i t) over the degree-(q+1) faces.
std::vector<std::pair<int, int>> coboundary_indices(int q);

// Homogeneous (m+1)-tuple to inhomogeneous m-tuple:
// (k_0, ..., k_m) -> (k_0 k_1^-1, ..., k_{m-1} k_m^-1). Commutes with the
// face maps (dropping k_i upstairs merges entries i, i+1 downstairs).
template <class Oracle>
std::vector<typename Oracle::Elem> inhomogeneous(
    const Oracle& oracle, const std::vector<typename Oracle::Elem>& tuple) {
  if (tuple.size() < 2)
    throw std::invalid_argument("homogeneous tuple needs >= 2 entries");
  std::vector<typename Oracle::Elem> out;
  out.reserve(tuple.size() - 1);
  for (std::size_t k = 0; k + 1 < tuple.size(); ++k)
    out.push_back(oracle.multiply(tuple[k], oracle.invert(tuple[k + 1])));
  return out;
}

// Degree-2 chain carrying the fundamental cycle, over the chosen oracle.
template <class Oracle>
BarChain<Oracle> fundamental_cycle_chain(int genus, Oracle oracle) {
  BarChain<Oracle> chain(std::move(oracle), 2);
  const FormalPairSum cycle = fundamental_cycle(genus);  // keep alive: terms() is a view
  for (const auto& [pair, coeff] : cycle.terms())
    chain.add({pair.first, pair.second}, coeff);
  return chain;
}

// The fundamental cycle has boundary supported on the relator and the
// identity over the free group; over the surface group both collapse and
// the boundary collects to zero.
bool is_cycle_mod_relator(int genus);

// JSON forms for word chains: [{"coefficient": c, "tuple": [word, ...]}].
nlohmann::ordered_json chain_to_json(const BarChain<FreeGroupOracle>& chain);
BarChain<FreeGroupOracle> chain_from_json(const nlohmann::json& j, int genus,
                                          int degree);

nlohmann::ordered_json sum_to_json(const FormalWordSum& s);

}  // namespace surfrep
