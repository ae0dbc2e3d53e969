#pragma once

#include <string>
#include <vector>

namespace permspec {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;  // expected versus computed when they differ
};

struct ReproduceOptions {
  unsigned workers = 1;
  bool include_n8 = true;  // the n = 8 exhaustive scan takes minutes
};

// Runs every published value this library can recompute.
std::vector<CheckResult> reproduce_paper(const ReproduceOptions& options = {});

}  // namespace permspec
