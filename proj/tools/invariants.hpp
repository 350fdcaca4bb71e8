#pragma once

#include <string>
#include <vector>

namespace cochar::cli {

struct InvariantResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Small-size checks of every module invariant. Each check catches its own
// exceptions and reports them as failures.
std::vector<InvariantResult> run_invariant_suite();

}  // namespace cochar::cli
