#pragma once

#include <string>

namespace crg {

/// Outcome of an exact or numeric identity check; detail describes the
/// first failure.
struct CheckReport {
  bool ok = true;
  std::string detail;
};

}  // namespace crg
