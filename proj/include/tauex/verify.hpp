#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tauex/algebra.hpp"
#include "tauex/perpendicular.hpp"

// Named invariant suites run by `tauex verify`.

namespace tauex {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  /// Informational lines that are not pass/fail (e.g. low-order ODE results).
  std::vector<std::string> notes;

  bool passed() const;
};

struct SuiteOptions {
  std::optional<int> order;
  std::optional<int> n_max;
};

const std::vector<std::string>& suite_names();

/// Empty when `name` is not a known suite.
std::optional<SuiteResult> run_suite(const std::string& name, const SuiteOptions& options);

/// Algebras of the four counting families with rank 1..n_max, deduplicated
/// after canonicalisation.
std::vector<AlgebraId> counting_family_algebras(int n_max);

/// Every shape reachable from a counting-family algebra of rank <= max_rank
/// by repeatedly replacing one component with a perpendicular category.
std::set<CategoryShape> reachable_shapes(int max_rank);

}  // namespace tauex
