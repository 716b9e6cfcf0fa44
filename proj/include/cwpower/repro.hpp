#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cwp {

struct ReproCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReproReport {
  std::string fixture;
  std::vector<ReproCheck> checks;

  bool passed() const;
};

// Canonical fixture names, in a fixed order.
const std::vector<std::string>& repro_fixtures();
// Canonical name for a fixture name or alias.
std::optional<std::string> resolve_repro_name(const std::string& name);
// Throws InvalidArgument for unknown names.
ReproReport run_repro(const std::string& name);

}  // namespace cwp
