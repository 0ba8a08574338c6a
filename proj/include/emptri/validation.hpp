// Validation modes and reports shared by the family validators.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "emptri/point_set.hpp"

namespace emptri {

struct ValidationMode {
  enum class Kind { Full, Sampled };
  Kind kind = Kind::Full;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  static ValidationMode full() { return {}; }
  static ValidationMode sampled(std::uint64_t seed, std::uint64_t trials) {
    return {Kind::Sampled, seed, trials};
  }
  std::string describe() const;
};

/// Named checks in a fixed order, plus free-form facts (counts, modes) that
/// end up in the report file.
struct ValidationReport {
  std::vector<std::pair<std::string, CheckResult>> checks;
  std::vector<std::pair<std::string, std::string>> facts;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

}  // namespace emptri
