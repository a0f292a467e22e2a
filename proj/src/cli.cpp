#include "lappoly/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli_checks.hpp"
#include "lappoly/error.hpp"
#include "lappoly/matchings.hpp"
#include "lappoly/spectra.hpp"
#include "lappoly/weighted.hpp"

namespace lappoly {

namespace {

using cli::json;

constexpr int kMaxAllN = 7;

struct InputOptions {
  std::string g6;
  std::string edges;
  std::string family;
  std::string random;
  std::string weighted;
};

struct LoadedInput {
  Graph graph;
  std::optional<WeightedGraph> weighted;
  json descriptor;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadParameter, "cannot read file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_integer(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw Error(ErrorCode::BadParameter, "'" + key + "' expects an integer, got '" + value + "'");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw Error(ErrorCode::BadParameter, "'" + key + "' expects a number, got '" + value + "'");
  }
  return out;
}

struct RandomSpec {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  long count = 1;
};

// "n=9,p=0.4,seed=7" with count required only when asked for.
RandomSpec parse_random(const std::string& text, bool with_count) {
  std::map<std::string, std::string> fields;
  for (const std::string& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::BadParameter, "random spec item '" + part + "' lacks '='");
    fields[part.substr(0, eq)] = part.substr(eq + 1);
  }
  std::vector<std::string> required = {"n", "p", "seed"};
  if (with_count) required.push_back("count");
  for (const std::string& key : required) {
    if (!fields.count(key)) throw Error(ErrorCode::BadParameter, "random spec is missing '" + key + "'");
  }
  for (const auto& [key, value] : fields) {
    if (std::find(required.begin(), required.end(), key) == required.end()) {
      throw Error(ErrorCode::BadParameter, "unknown random spec key '" + key + "'");
    }
  }
  RandomSpec spec;
  const long n = parse_integer("n", fields["n"]);
  if (n < 0 || n > 62) throw Error(ErrorCode::BadParameter, "random n must lie in [0, 62]");
  spec.n = static_cast<int>(n);
  spec.p = parse_real("p", fields["p"]);
  const long seed = parse_integer("seed", fields["seed"]);
  if (seed < 0) throw Error(ErrorCode::BadParameter, "seed must be nonnegative");
  spec.seed = static_cast<std::uint64_t>(seed);
  if (with_count) {
    spec.count = parse_integer("count", fields["count"]);
    if (spec.count < 1) throw Error(ErrorCode::BadParameter, "count must be positive");
  }
  return spec;
}

LoadedInput load_input(const InputOptions& in) {
  const int given = !in.g6.empty() + !in.edges.empty() + !in.family.empty() + !in.random.empty() + !in.weighted.empty();
  if (given != 1) {
    throw Error(ErrorCode::BadParameter, "give exactly one of --g6, --edges, --family, --random, --weighted");
  }
  LoadedInput out;
  if (!in.g6.empty()) {
    out.graph = parse_graph6(in.g6);
    out.descriptor = {{"source", "g6"}, {"spec", in.g6}};
  } else if (!in.edges.empty()) {
    out.graph = parse_edge_list(read_file(in.edges));
    out.descriptor = {{"source", "edges"}, {"spec", in.edges}};
  } else if (!in.family.empty()) {
    out.graph = generate_family(in.family);
    out.descriptor = {{"source", "family"}, {"spec", in.family}};
  } else if (!in.random.empty()) {
    const RandomSpec spec = parse_random(in.random, false);
    out.graph = random_graph(spec.n, spec.p, spec.seed);
    out.descriptor = {{"source", "random"}, {"spec", in.random}};
  } else {
    out.weighted = parse_weighted_edge_list(read_file(in.weighted));
    out.graph = out.weighted->graph();
    out.descriptor = {{"source", "weighted"}, {"spec", in.weighted}};
  }
  out.descriptor["graph6"] = to_graph6(out.graph);
  out.descriptor["order"] = out.graph.order();
  out.descriptor["size"] = out.graph.size();
  return out;
}

std::optional<VertexSet> parse_subset(const std::string& text, const Graph& g, bool given) {
  if (!given) return std::nullopt;
  VertexSet out;
  for (const std::string& item : split(text, ',')) {
    const long v = parse_integer("subset", item);
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + item + " out of range");
    }
    out.push_back(static_cast<Vertex>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double tolerance_from_env() {
  const char* raw = std::getenv("LAPPOLY_TOL");
  if (!raw || !*raw) return kCompareTolerance;
  const double tol = parse_real("LAPPOLY_TOL", raw);
  if (!(tol > 0.0)) throw Error(ErrorCode::BadParameter, "LAPPOLY_TOL must be positive");
  return tol;
}

json report_header(const std::string& command) {
  return {{"tool", "lappoly"}, {"version", LAPPOLY_VERSION}, {"command", command}};
}

json roots_json(const RootList& roots) {
  json values = json::array();
  json details = json::array();
  for (const Root& r : roots.roots) {
    for (int i = 0; i < r.multiplicity; ++i) values.push_back(r.value);
    details.push_back({{"value", r.value},
                       {"multiplicity", r.multiplicity},
                       {"lower", r.lower.get_str()},
                       {"upper", r.upper.get_str()}});
  }
  return {{"values", values}, {"details", details}, {"error_bound", roots.error_bound}};
}

struct ComputeOptions {
  std::string poly = "beta";
  bool roots = false;
  std::string subset;
  bool subset_given = false;
};

int cmd_compute(const InputOptions& in, const ComputeOptions& opt, std::ostream& out) {
  const LoadedInput input = load_input(in);
  const Graph& g = input.graph;
  const std::optional<VertexSet> subset = parse_subset(opt.subset, g, opt.subset_given);
  json report = report_header("compute");
  report["input"] = input.descriptor;
  report["poly"] = opt.poly;

  if (opt.poly == "beta_weighted") {
    const WeightedGraph wg = input.weighted ? *input.weighted : unit_weights(g);
    const RatPoly p = weighted_beta(wg);
    report["coefficients"] = cli::coefficients_json(p);
    report["text"] = p.to_string();
    if (opt.roots && p.degree() > 0) report["roots"] = roots_json(real_roots(primitive_part(p)));
  } else {
    IntPoly p;
    if (opt.poly == "alpha") {
      p = matching_polynomial(g);
    } else if (opt.poly == "beta") {
      p = laplacian_matching_polynomial(g);
    } else if (opt.poly == "beta_principal") {
      if (!subset) throw Error(ErrorCode::BadParameter, "beta_principal needs --subset");
      p = principal_beta(g, *subset);
      report["subset"] = *subset;
    } else if (opt.poly == "phiA") {
      p = char_poly(adjacency(g));
    } else if (opt.poly == "phiL") {
      p = char_poly(laplacian(g));
    } else if (opt.poly == "phiQ") {
      p = char_poly(signless_laplacian(g));
    } else {
      throw Error(ErrorCode::BadParameter, "unknown polynomial '" + opt.poly + "'");
    }
    report["coefficients"] = cli::coefficients_json(p);
    report["text"] = p.to_string();
    if (opt.roots) {
      report["roots"] = p.degree() > 0 ? roots_json(real_roots(p)) : roots_json(RootList{});
    }
  }
  report["pass"] = true;
  out << report.dump() << '\n';
  return kExitPass;
}

struct VerifyOptions {
  std::vector<std::string> identities = {"all"};
  std::string subset;
  bool subset_given = false;
  bool timings = false;
};

int cmd_verify(const InputOptions& in, const VerifyOptions& opt, std::ostream& out) {
  const LoadedInput input = load_input(in);
  cli::CheckOptions check_opts;
  check_opts.tol = tolerance_from_env();
  check_opts.subset = parse_subset(opt.subset, input.graph, opt.subset_given);
  check_opts.timings = opt.timings;
  const std::vector<std::string> names = cli::resolve_checks(opt.identities);

  RootCache cache;
  const cli::CheckOutcome outcome = cli::run_checks(input.graph, names, check_opts, cache);
  json report = report_header("verify");
  report["input"] = input.descriptor;
  report["tolerance"] = check_opts.tol;
  report["checks"] = outcome.entries;
  report["pass"] = outcome.pass;
  out << report.dump() << '\n';
  return outcome.pass ? kExitPass : kExitCheckFailure;
}

struct BatchOptions {
  int all_n = -1;
  bool all_n_given = false;
  std::string random;
  std::vector<std::string> checks = {"all"};
  std::string format = "json";
  bool timings = false;
};

// Worst status over a check's entries: fail beats pass beats skip.
std::map<std::string, std::string> summarise(const json& entries, const std::vector<std::string>& names) {
  std::map<std::string, std::string> out;
  for (const std::string& n : names) out[n] = "skip";
  for (const json& e : entries) {
    std::string name = e["name"];
    for (const std::string& n : names) {
      if (name == n || name.rfind(n + "/", 0) == 0 || name.rfind(n + "-", 0) == 0) {
        name = n;
        break;
      }
    }
    std::string& slot = out[name];
    const std::string s = e["status"];
    if (s == "fail" || (s == "pass" && slot == "skip")) slot = s;
  }
  return out;
}

int cmd_batch(const BatchOptions& opt, std::ostream& out) {
  if (opt.all_n_given == !opt.random.empty()) throw Error(ErrorCode::BadParameter, "give exactly one of --all-n, --random");
  if (opt.format != "json" && opt.format != "csv") throw Error(ErrorCode::BadParameter, "format must be json or csv");
  const std::vector<std::string> names = cli::resolve_checks(opt.checks);
  cli::CheckOptions check_opts;
  check_opts.tol = tolerance_from_env();
  check_opts.timings = opt.timings;

  std::function<Graph(long)> graph_at;
  long total = 0;
  std::string scope;
  if (opt.all_n_given) {
    if (opt.all_n < 1 || opt.all_n > kMaxAllN) {
      throw Error(ErrorCode::BadParameter, "--all-n must lie in [1, " + std::to_string(kMaxAllN) + "]");
    }
    const int n = opt.all_n;
    total = 1L << (n * (n - 1) / 2);
    graph_at = [n](long k) { return graph_from_mask(n, static_cast<std::uint64_t>(k)); };
    scope = "edge-subsets";
  } else {
    const RandomSpec spec = parse_random(opt.random, true);
    total = spec.count;
    graph_at = [spec](long k) { return random_graph(spec.n, spec.p, mix_seed(spec.seed, static_cast<std::uint64_t>(k))); };
    scope = "random graphs";
  }

  if (opt.format == "csv") {
    out << "index,graph6";
    for (const std::string& n : names) out << ',' << n;
    out << ",pass\n";
  }
  RootCache cache;
  long passed = 0;
  for (long k = 0; k < total; ++k) {
    const Graph g = graph_at(k);
    const cli::CheckOutcome outcome = cli::run_checks(g, names, check_opts, cache);
    if (outcome.pass) ++passed;
    const auto statuses = summarise(outcome.entries, names);
    if (opt.format == "csv") {
      out << k << ',' << to_graph6(g);
      for (const std::string& n : names) out << ',' << statuses.at(n);
      out << ',' << (outcome.pass ? "true" : "false") << '\n';
      continue;
    }
    json line = {{"index", k}, {"graph6", to_graph6(g)}, {"pass", outcome.pass}, {"checks", statuses}};
    if (!outcome.pass) {
      json failures = json::array();
      for (const json& e : outcome.entries)
        if (e["status"] == "fail") failures.push_back(e);
      line["failures"] = failures;
    }
    if (opt.timings) {
      double ms = 0;
      for (const json& e : outcome.entries) ms += e.value("timing_ms", 0.0);
      line["timing_ms"] = ms;
    }
    out << line.dump() << '\n';
  }
  const std::string message = "passed " + std::to_string(passed) + "/" + std::to_string(total) + " " + scope;
  if (opt.format == "csv") {
    out << "# " << message << '\n';
  } else {
    out << json{{"summary", message}, {"passed", passed}, {"total", total}, {"pass", passed == total}}.dump() << '\n';
  }
  return passed == total ? kExitPass : kExitCheckFailure;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--g6", in.g6, "graph6 string");
  cmd->add_option("--edges", in.edges, "edge-list file");
  cmd->add_option("--family", in.family, "family spec, e.g. cycle:5 or complete_bipartite:2,3");
  cmd->add_option("--random", in.random, "random graph spec n=..,p=..,seed=..");
  cmd->add_option("--weighted", in.weighted, "weighted edge-list file (lines 'u v p/q')");
}

void print_error(std::ostream& out, const std::string& kind, const std::string& message) {
  out << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Laplacian matching polynomials: compute, verify, batch-sweep"};
  app.name(args.empty() ? "lappoly" : args[0]);
  app.require_subcommand(1);
  app.set_version_flag("--version", LAPPOLY_VERSION);

  InputOptions compute_in;
  ComputeOptions compute_opt;
  CLI::App* compute = app.add_subcommand("compute", "print a polynomial and optionally its roots");
  add_input_options(compute, compute_in);
  compute->add_option("--poly", compute_opt.poly, "alpha|beta|beta_principal|phiA|phiL|phiQ|beta_weighted")
      ->check(CLI::IsMember({"alpha", "beta", "beta_principal", "phiA", "phiL", "phiQ", "beta_weighted"}));
  compute->add_flag("--roots", compute_opt.roots, "also print certified real roots");
  CLI::Option* compute_subset = compute->add_option("--subset", compute_opt.subset, "vertex set H, e.g. 0,1,3");

  InputOptions verify_in;
  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "check identities and bounds on one graph");
  add_input_options(verify, verify_in);
  verify->add_option("--identity", verify_opt.identities, "check name(s) or all")->delimiter(',');
  CLI::Option* verify_subset = verify->add_option("--subset", verify_opt.subset, "vertex set H (or W for subdivision)");
  verify->add_flag("--timings", verify_opt.timings, "include per-check wall-clock timings");

  BatchOptions batch_opt;
  CLI::App* batch = app.add_subcommand("batch", "sweep all graphs of an order or a random sample");
  CLI::Option* all_n = batch->add_option("--all-n", batch_opt.all_n, "every labelled graph on N vertices (N <= 7)");
  batch->add_option("--random", batch_opt.random, "n=..,p=..,count=..,seed=..");
  batch->add_option("--checks", batch_opt.checks, "comma-separated check names or all")->delimiter(',');
  batch->add_option("--format", batch_opt.format, "json|csv");
  batch->add_flag("--timings", batch_opt.timings, "include per-graph timings");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << LAPPOLY_VERSION << '\n';
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    print_error(out, "UsageError", e.what());
    return kExitInputError;
  }

  try {
    if (compute->parsed()) {
      compute_opt.subset_given = compute_subset->count() > 0;
      return cmd_compute(compute_in, compute_opt, out);
    }
    if (verify->parsed()) {
      verify_opt.subset_given = verify_subset->count() > 0;
      return cmd_verify(verify_in, verify_opt, out);
    }
    batch_opt.all_n_given = all_n->count() > 0;
    return cmd_batch(batch_opt, out);
  } catch (const Error& e) {
    print_error(out, std::string(to_string(e.code())), e.what());
    return kExitInputError;
  }
}

}  // namespace lappoly
