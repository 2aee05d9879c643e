#pragma once

#include <cstdio>
#include <string>

#include "primegaps/numeric.hpp"

namespace primegaps {

// Deterministic text rendering for output files: a fixed %Lg conversion, no
// locale involvement.
inline std::string fmt_real(Real x, int significant = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", significant, x);
  return buf;
}

}  // namespace primegaps
