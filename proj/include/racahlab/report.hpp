#pragma once

// Pass/fail records shared by every verification routine.

#include <cstddef>
#include <string>
#include <vector>

namespace racahlab {

struct CheckResult {
  std::string identity;
  bool pass = false;
  std::size_t residual_term_count = 0;  // nonzero terms (or entries) left in the residual
};

using Report = std::vector<CheckResult>;

inline bool all_pass(const Report& r) {
  for (const auto& c : r)
    if (!c.pass) return false;
  return true;
}

inline void append(Report& into, const Report& more) { into.insert(into.end(), more.begin(), more.end()); }

}  // namespace racahlab
