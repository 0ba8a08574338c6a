#include "emptri/validation.hpp"

namespace emptri {

std::string ValidationMode::describe() const {
  if (kind == Kind::Full) return "full";
  return "sampled(seed=" + std::to_string(seed) + ",trials=" + std::to_string(trials) + ")";
}

bool ValidationReport::ok() const {
  for (const auto& [name, r] : checks)
    if (!r.ok) return false;
  return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& [n, r] : checks)
    if (n == name) return &r;
  return nullptr;
}

}  // namespace emptri
