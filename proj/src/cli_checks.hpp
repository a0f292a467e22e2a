#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lappoly/graph.hpp"
#include "lappoly/polynomial.hpp"
#include "lappoly/roots.hpp"

namespace lappoly::cli {

using nlohmann::json;

struct CheckOptions {
  double tol = kCompareTolerance;
  std::optional<VertexSet> subset;
  bool timings = false;
};

/// Names accepted by --identity / --checks, excluding "all".
const std::vector<std::string>& check_names();

/// Expands "all" and validates names; throws BadParameter on unknown ones.
std::vector<std::string> resolve_checks(const std::vector<std::string>& requested);

struct CheckOutcome {
  json entries = json::array();  // one object per executed or skipped check
  bool pass = true;              // every non-skipped entry passed
};

CheckOutcome run_checks(const Graph& g, const std::vector<std::string>& names, const CheckOptions& options,
                        RootCache& cache);

/// Coefficients highest power first, as exact decimal strings.
json coefficients_json(const IntPoly& p);
json coefficients_json(const RatPoly& p);

}  // namespace lappoly::cli
