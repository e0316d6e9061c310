#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plethys/census.hpp"
#include "plethys/series.hpp"
#include "plethys/symfunc.hpp"

namespace plethys {

/// Lowest degree at which two series differ (compared up to the smaller
/// truncation), or nullopt if they agree there.
template <class Key>
std::optional<int> first_difference(const TruncatedSeries<Key>& a, const TruncatedSeries<Key>& b) {
  const int n = std::min(a.truncation(), b.truncation());
  for (int d = 0; d <= n; ++d) {
    auto pa = a.truncated(n).homogeneous_part(d);
    auto pb = b.truncated(n).homogeneous_part(d);
    if (!(pa == pb)) return d;
  }
  return std::nullopt;
}

struct VerifyConfig {
  int max_degree = 6;
  ModuleSpec spec = ModuleSpec::standard();
  Budget budget;
};

struct SuiteResult {
  std::string suite;
  bool pass = false;
  int degree = 0;                  // truncation the suite ran at
  std::optional<int> mismatch_at;  // first differing degree, when relevant
  std::string lhs;                 // both sides at the mismatch degree
  std::string rhs;
  std::string note;
};

/// Registered suite names, in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or every suite for "all"). Throws InvalidInput for
/// an unknown name and propagates BudgetExceeded from the oracles.
std::vector<SuiteResult> run_suite(std::string_view name, const VerifyConfig& cfg);

}  // namespace plethys
