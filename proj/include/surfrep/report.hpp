#pragma once

#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace surfrep {

// Per-trial RNG stream: trials re-seed independently so results do not
// depend on dispatch order.
inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  return base ^ index;
}

// Evaluate fn(0..trials-1) concurrently, results ordered by index.
template <class F>
auto run_trials(int trials, F&& fn)
    -> std::vector<decltype(fn(0))> {
  std::vector<std::future<decltype(fn(0))>> futures;
  futures.reserve(trials);
  for (int k = 0; k < trials; ++k)
    futures.push_back(std::async(std::launch::async | std::launch::deferred,
                                 fn, k));
  std::vector<decltype(fn(0))> out;
  out.reserve(trials);
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

// Common shape of every verification report. Field order is fixed and no
// clock is consulted, so equal inputs give byte-identical serializations.
struct VerificationReport {
  std::string suite;
  int genus = 2;
  std::string group = "su2";
  std::uint64_t seed = 0;
  int trials = 0;
  double h = 0.0;
  double tol = 0.0;
  double max_residual = 0.0;
  std::optional<double> calibrated_mu;
  bool pass = false;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();

  nlohmann::ordered_json to_json() const;
  std::string to_string() const;  // pretty, trailing newline
};

}  // namespace surfrep
