#pragma once

#include "fitshift/group_ring.hpp"
#include "fitshift/ideal.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fitshift {

/// Ideal from a comma separated list of expressions, e.g. "tau1, tau2, t1".
Ideal ideal_from_text(const RingPtr& ring, const std::string& gens);

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string stamp;   // precision stamp, e.g. "p=3 k=4 N=6"
  std::string detail;  // what failed, empty on success
};

struct SuiteOptions {
  /// Overrides (k, N) of every check.
  std::optional<std::pair<unsigned, unsigned>> precision;
  unsigned jobs = 1;
};

/// Recomputes every explicit ideal identity of the reference examples.
/// Deterministic: no timings or addresses in the output.
std::vector<SuiteCheck> run_reference_suite(const SuiteOptions& opts = {});

/// One "PASS name [stamp]" / "FAIL name [stamp]: detail" line per check.
std::string format_suite_report(const std::vector<SuiteCheck>& checks);

}  // namespace fitshift
