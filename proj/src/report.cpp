#include "surfrep/report.hpp"

namespace surfrep {

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["genus"] = genus;
  j["group"] = group;
  j["seed"] = seed;
  j["trials"] = trials;
  j["h"] = h;
  j["tol"] = tol;
  j["max_residual"] = max_residual;
  if (calibrated_mu)
    j["calibrated_mu"] = *calibrated_mu;
  else
    j["calibrated_mu"] = nullptr;
  j["pass"] = pass;
  j["details"] = details;
  j["failures"] = failures;
  return j;
}

std::string VerificationReport::to_string() const {
  return to_json().dump(2) + "\n";
}

}  // namespace surfrep
