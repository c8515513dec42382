#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lfsrcrt {

struct ReproOutcome {
  std::string id;
  bool pass = false;
  std::vector<std::string> lines;  // human-readable diagnostics, one check per line
};

/// example1-shifts, example2-spectra, table2, table3, table6, attack632.
const std::vector<std::string>& repro_targets();

/// Deterministic; throws Error for an unknown id.
ReproOutcome reproduce(std::string_view id);

}  // namespace lfsrcrt
