#include "surfrep/bar.hpp"

namespace surfrep {

std::vector<std::pair<int, int>> coboundary_indices(int q) {
  if (q < 0) throw std::invalid_argument("cochain degree must be >= 0");
  std::vector<std::pair<int, int>> out;
  out.reserve(q + 2);
  for (int i = 0; i <= q + 1; ++i)
    out.emplace_back((i % 2 == 0) ? 1 : -1, i);
  return out;
}

bool is_cycle_mod_relator(int genus) {
  SurfaceGroupOracle oracle(genus);
  return boundary(fundamental_cycle_chain(genus, oracle)).is_zero();
}

nlohmann::ordered_json chain_to_json(const BarChain<FreeGroupOracle>& chain) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [tuple, coeff] : chain.terms()) {
    nlohmann::ordered_json words = nlohmann::ordered_json::array();
    for (const Word& w : tuple) words.push_back(print_word(w));
    out.push_back({{"coefficient", coeff}, {"tuple", words}});
  }
  return out;
}

BarChain<FreeGroupOracle> chain_from_json(const nlohmann::json& j, int genus,
                                          int degree) {
  BarChain<FreeGroupOracle> chain(FreeGroupOracle{genus}, degree);
  for (const auto& term : j) {
    std::vector<Word> tuple;
    for (const auto& w : term.at("tuple"))
      tuple.push_back(parse_word(w.get<std::string>(), genus));
    chain.add(tuple, term.at("coefficient").get<int>());
  }
  return chain;
}

nlohmann::ordered_json sum_to_json(const FormalWordSum& s) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [w, c] : s.terms())
    out.push_back({{"coefficient", c}, {"word", print_word(w)}});
  return out;
}

}  // namespace surfrep
