#include "cli_checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "lappoly/analysis.hpp"
#include "lappoly/error.hpp"
#include "lappoly/identities.hpp"
#include "lappoly/matchings.hpp"
#include "lappoly/spectra.hpp"
#include "lappoly/tu_subgraphs.hpp"

namespace lappoly::cli {

namespace {

constexpr int kMaxExhaustiveSubsetOrder = 10;
constexpr int kMaxFiberOrder = 8;

template <typename Coeff>
json coefficients_of(const Polynomial<Coeff>& p) {
  json out = json::array();
  if (p.is_zero()) {
    out.push_back("0");
    return out;
  }
  auto strings = p.coefficient_strings();
  for (auto it = strings.rbegin(); it != strings.rend(); ++it) out.push_back(*it);
  return out;
}

json strings_of(const std::vector<mpz_class>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

json identity_entry(const IdentityReport& r) {
  return {{"name", r.name},
          {"status", r.pass ? "pass" : "fail"},
          {"left", coefficients_of(r.left)},
          {"right", coefficients_of(r.right)},
          {"residual", coefficients_of(r.residual)}};
}

json skip(const std::string& name, const std::string& reason) {
  return {{"name", name}, {"status", "skip"}, {"reason", reason}};
}

const char* status(bool pass) { return pass ? "pass" : "fail"; }

json bound_entry(const BoundReport& r) {
  return {{"name", "bounds/" + r.name},
          {"status", status(r.pass)},
          {"value", r.value},
          {"bound", r.bound},
          {"holds", r.holds},
          {"equality_observed", r.equality_observed},
          {"equality_expected", r.equality_expected}};
}

json verdict_json(const MajorizationVerdict& v) {
  json out = {{"weak", v.weak}, {"full", v.full}, {"prefix_y", v.prefix_y}, {"prefix_x", v.prefix_x}};
  out["first_failure"] = v.first_failure ? json(*v.first_failure) : json(nullptr);
  return out;
}

VertexSet working_set(const Graph& g, const CheckOptions& o) { return o.subset ? *o.subset : g.vertices(); }

// Subsets W swept by the subdivision check: the requested one, or every
// subset on small graphs, or just the empty set.
std::vector<VertexSet> subdivision_cases(const Graph& g, const CheckOptions& o) {
  if (o.subset) return {*o.subset};
  if (g.order() > kMaxExhaustiveSubsetOrder) return {VertexSet{}};
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
    VertexSet w;
    for (int v = 0; v < g.order(); ++v)
      if ((mask >> v) & 1) w.push_back(v);
    out.push_back(std::move(w));
  }
  return out;
}

void check_subdivision(const Graph& g, const CheckOptions& o, RootCache&, json& out) {
  long cases = 0;
  json failures = json::array();
  long spectra_cases = 0;
  json spectra_failures = json::array();
  for (const VertexSet& w : subdivision_cases(g, o)) {
    ++cases;
    const IntPoly via = beta_via_subdivision(g, w);
    const IntPoly direct = principal_beta(g, complement(g, w));
    if (via != direct) {
      failures.push_back({{"W", w}, {"left", coefficients_of(via)}, {"right", coefficients_of(direct)}});
    }
    ++spectra_cases;
    const SpectraIdentityReport s = subdivision_spectra_check(g, w);
    if (!s.pass) {
      spectra_failures.push_back(
          {{"W", w}, {"left", coefficients_of(s.left)}, {"right", coefficients_of(s.right)}, {"shift", s.shift}});
    }
  }
  out.push_back({{"name", "subdivision"},
                 {"status", status(failures.empty())},
                 {"cases", cases},
                 {"failures", failures}});
  out.push_back({{"name", "subdivision-spectra"},
                 {"status", status(spectra_failures.empty())},
                 {"cases", spectra_cases},
                 {"failures", spectra_failures}});
}

void check_coefficients(const Graph& g, const CheckOptions&, RootCache&, json& out) {
  const CoefficientReport r = coefficients_check(g);
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"r", row.r},
                    {"a_r", row.beta_coefficient.get_str()},
                    {"subdivision_matchings", row.subdivision_matchings.get_str()},
                    {"pass", row.pass}});
  }
  out.push_back({{"name", "coefficients"}, {"status", status(r.pass)}, {"beta", coefficients_of(r.beta)}, {"rows", rows}});
}

void check_tu(const Graph& g, const CheckOptions&, RootCache&, json& out) {
  const auto a = alternating_coefficients(laplacian_matching_polynomial(g), g.order());
  const auto tu = tu_coefficients(g);
  const bool pass = a == tu;
  out.push_back({{"name", "tu"}, {"status", status(pass)}, {"a_r", strings_of(a)}, {"tu_weight_sums", strings_of(tu)}});
}

void check_fibers(const Graph& g, const CheckOptions&, RootCache&, json& out) {
  if (g.order() > kMaxFiberOrder) {
    out.push_back(skip("fibers", "fiber enumeration is limited to graphs with at most 8 vertices"));
    return;
  }
  bool pass = true;
  json per_r = json::array();
  for (int r = 0; r <= g.size(); ++r) {
    const FiberReport rep = fiber_size_check(g, r);
    pass = pass && rep.pass;
    json row = {{"r", r}, {"matchings", rep.matchings}, {"fibers", rep.fibers.size()}, {"pass", rep.pass}};
    if (!rep.pass) {
      json bad = json::array();
      for (const Fiber& f : rep.fibers) {
        if (!f.pass) bad.push_back({{"edges", f.edge_set}, {"weight", f.weight.get_str()}, {"size", f.size}});
      }
      row["failing_fibers"] = bad;
    }
    per_r.push_back(std::move(row));
  }
  out.push_back({{"name", "fibers"}, {"status", status(pass)}, {"by_r", per_r}});
}

void check_q_duality(const Graph& g, const CheckOptions&, RootCache&, json& out) {
  out.push_back(identity_entry(q_duality(g, QDirection::PhiFromBeta)));
  out.push_back(identity_entry(q_duality(g, QDirection::BetaFromPhi)));
}

void check_a_duality(const Graph& g, const CheckOptions&, RootCache&, json& out) {
  out.push_back(identity_entry(adjacency_duality(g, AdjacencyDirection::PhiFromAlpha)));
  out.push_back(identity_entry(adjacency_duality(g, AdjacencyDirection::AlphaFromPhi)));
}

void check_forest(const Graph& g, const CheckOptions&, RootCache&, json& out) {
  const ForestReport r = forest_characterization(g);
  out.push_back({{"name", "forest"},
                 {"status", status(r.pass)},
                 {"forest", r.is_forest},
                 {"beta==phiQ", r.polys_equal},
                 {"beta", coefficients_of(r.beta)},
                 {"phiQ", coefficients_of(r.phi_q)}});
}

void check_interlacing(const Graph& g, const CheckOptions& o, RootCache& cache, json& out) {
  const VertexSet h = working_set(g, o);
  if (h.empty()) {
    out.push_back(skip("interlacing", "vertex set H is empty"));
    return;
  }
  bool pass = true;
  json per_v = json::array();
  for (Vertex v : h) {
    const InterlacingReport r = vertex_interlacing_check(g, h, v, o.tol, &cache);
    pass = pass && r.pass;
    per_v.push_back({{"v", v},
                     {"interlaced", r.interlaced},
                     {"h_connected", r.h_connected},
                     {"simple_max", r.simple_max},
                     {"max_gap", r.max_gap},
                     {"pass", r.pass}});
  }
  out.push_back({{"name", "interlacing"}, {"status", status(pass)}, {"H", h}, {"vertices", per_v}});
}

void check_majorization(const Graph& g, const CheckOptions& o, RootCache& cache, json& out) {
  const DegreeMajorizationReport r = degree_majorization_check(g, true, o.tol, &cache);
  out.push_back({{"name", "majorization"},
                 {"status", status(r.pass)},
                 {"zeros", r.zeros},
                 {"degrees", r.degrees},
                 {"exact_total", r.exact_total},
                 {"trace", r.trace},
                 {"verdict", verdict_json(r.verdict)}});
}

void check_grone(const Graph& g, const CheckOptions& o, RootCache& cache, json& out) {
  if (g.order() < 2) return out.push_back(skip("grone", "needs at least 2 vertices"));
  if (!g.is_connected()) return out.push_back(skip("grone", "graph is not connected"));
  if (g.min_degree() != 1) return out.push_back(skip("grone", "minimum degree is not 1"));
  const GroneReport r = grone_sequence_check(g, o.tol, &cache);
  out.push_back({{"name", "grone"},
                 {"status", status(r.pass)},
                 {"zeros", r.zeros},
                 {"shifted_degrees", r.shifted_degrees},
                 {"tree", r.is_tree},
                 {"majorizes", r.verdict.holds},
                 {"verdict", verdict_json(r.verdict)}});
}

void check_bounds(const Graph& g, const CheckOptions& o, RootCache& cache, json& out) {
  if (g.order() == 0 || !g.is_connected()) {
    for (const char* name : {"bounds/min-degree", "bounds/spectral-radius", "bounds/edge-degree-sum", "bounds/interval"}) {
      out.push_back(skip(name, "graph is empty or not connected"));
    }
    return;
  }
  out.push_back(bound_entry(min_root_bound_check(g, o.tol, &cache)));
  out.push_back(bound_entry(spectral_bound_check(g, o.tol, &cache)));
  if (g.size() == 0) {
    out.push_back(skip("bounds/edge-degree-sum", "graph has no edges"));
  } else {
    out.push_back(bound_entry(degree_sum_bound_check(g, o.tol, &cache)));
  }
  if (g.max_degree() < 2) {
    out.push_back(skip("bounds/interval", "maximum degree is below 2"));
  } else {
    const IntervalReport r = hl_interval_check(g, o.tol, &cache);
    out.push_back({{"name", "bounds/interval"},
                   {"status", status(r.pass)},
                   {"min_root", r.min_root},
                   {"max_root", r.max_root},
                   {"upper", r.upper}});
  }
}

void check_zero_sum(const Graph& g, const CheckOptions& o, RootCache&, json& out) {
  const VertexSet h = working_set(g, o);
  const ZeroSumReport r = principal_zero_sum_check(g, h);
  out.push_back({{"name", "zero-sum"},
                 {"status", status(r.pass)},
                 {"H", h},
                 {"zero_sum", r.zero_sum.get_str()},
                 {"degree_sum", r.degree_sum.get_str()}});
}

using CheckFn = std::function<void(const Graph&, const CheckOptions&, RootCache&, json&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"subdivision", check_subdivision}, {"coefficients", check_coefficients},
      {"tu", check_tu},                   {"fibers", check_fibers},
      {"q-duality", check_q_duality},     {"a-duality", check_a_duality},
      {"forest", check_forest},           {"interlacing", check_interlacing},
      {"majorization", check_majorization}, {"grone", check_grone},
      {"bounds", check_bounds},           {"zero-sum", check_zero_sum},
  };
  return table;
}

}  // namespace

json coefficients_json(const IntPoly& p) { return coefficients_of(p); }
json coefficients_json(const RatPoly& p) { return coefficients_of(p); }

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  for (const std::string& name : requested) {
    if (name == "all") {
      for (const std::string& n : check_names())
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
      continue;
    }
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
      throw Error(ErrorCode::BadParameter, "unknown check '" + name + "'");
    }
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  if (out.empty()) throw Error(ErrorCode::BadParameter, "no checks selected");
  return out;
}

CheckOutcome run_checks(const Graph& g, const std::vector<std::string>& names, const CheckOptions& options,
                        RootCache& cache) {
  CheckOutcome outcome;
  for (const std::string& name : names) {
    auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
    const auto start = std::chrono::steady_clock::now();
    json produced = json::array();
    try {
      it->second(g, options, cache, produced);
    } catch (const Error& e) {
      // Checks only raise when a guaranteed identity broke down mid-computation.
      produced = json::array({{{"name", name},
                               {"status", "fail"},
                               {"error", {{"kind", std::string(to_string(e.code()))}, {"message", e.what()}}}}});
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (json& entry : produced) {
      if (entry["status"] == "fail") outcome.pass = false;
      if (options.timings) entry["timing_ms"] = ms;
      outcome.entries.push_back(std::move(entry));
    }
  }
  return outcome;
}

}  // namespace lappoly::cli
