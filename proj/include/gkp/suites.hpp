#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gkp/partition.hpp"
#include "gkp/pushforward.hpp"
#include "gkp/report.hpp"

namespace gkp {

/// Configuration for one verification run. A fixed config (seed included)
/// makes the run fully deterministic, parallel dispatch notwithstanding.
struct SuiteConfig {
  std::string suite;
  int m_max = 3;
  int n_max = 2;
  std::optional<int> k_max;  // default: up to n
  std::optional<int> l_max;  // default: up to m - k
  Mode mode = Mode::Symbolic;
  int trials = 20;
  std::uint64_t seed = 1;
  std::string out;            // empty: stdout
  std::string format = "json";
  std::optional<Partition> lambda_filter;
  std::optional<Partition> mu_filter;
  int jobs = 0;    // 0: hardware concurrency
  bool timings = false;

  int k_cap(int n) const { return k_max ? std::min(*k_max, n) : n; }
  int l_cap(int m, int k) const {
    return l_max ? std::min(*l_max, m - k) : m - k;
  }
  void validate() const;
};

struct SuiteCase {
  Json params;
  std::function<CheckOutcome()> run;
  /// Declared inapplicable at build time; recorded as "skip" unrun.
  std::string skip_reason;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::function<std::vector<SuiteCase>(const SuiteConfig&)> build;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& name);

/// Runs every case of the configured suite deterministically and returns
/// the assembled report; identity failures are recorded, never thrown.
Report run_suite(const SuiteConfig& cfg);

/// Interns the symbol pools the suites draw from, so worker threads never
/// extend the symbol table.
void intern_standard_symbols();

}  // namespace gkp
