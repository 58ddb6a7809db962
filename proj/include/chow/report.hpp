#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chow {

/// Outcome of an exhaustive or sampled verification run.
struct CheckReport {
  std::size_t checked = 0;
  bool sampled = false;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
};

}  // namespace chow
