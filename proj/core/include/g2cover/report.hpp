#pragma once

#include <string>
#include <utility>
#include <vector>

namespace g2cover {

// Outcome of one verification check. `constants` carries named exact values
// the check computed along the way (normalization constants, multiplicities,
// recovered parameters) as strings, in insertion order so serialization is
// deterministic.
struct CheckReport {
  std::string check;
  bool pass = false;
  std::string residual;  // exact residual ("0" on success) or a short diagnosis
  std::vector<std::pair<std::string, std::string>> constants;

  CheckReport& note(std::string key, std::string value) {
    constants.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

}  // namespace g2cover
