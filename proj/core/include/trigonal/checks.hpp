#pragma once

#include <string>
#include <vector>

#include "trigonal/numkernel.hpp"

namespace trigonal {

// One line of a verification report. Rows marked `displayed` evaluate a
// formula exactly as it is stated in the source text; they are reported but
// do not decide the outcome, since several of those statements are known to
// be misprinted and their consistent counterparts are separate rows.
struct IdentityCheck {
  std::string suite;
  std::string identity;
  real defect = 0;
  real tol = 0;
  bool displayed = false;

  bool pass() const { return defect < tol; }
};

using CheckList = std::vector<IdentityCheck>;

inline bool all_pass(const CheckList& rows) {
  for (const auto& r : rows)
    if (!r.displayed && !r.pass()) return false;
  return true;
}

}  // namespace trigonal
