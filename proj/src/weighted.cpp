#include "lappoly/weighted.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "lappoly/error.hpp"

namespace lappoly {

WeightedGraph::WeightedGraph(Graph graph, std::vector<mpq_class> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != graph_.size()) {
    throw Error(ErrorCode::BadParameter, "one weight per edge is required");
  }
  for (mpq_class& w : weights_) {
    w.canonicalize();
    if (sgn(w) <= 0) throw Error(ErrorCode::NonpositiveWeight, "edge weight " + w.get_str() + " is not positive");
  }
}

mpq_class WeightedGraph::vertex_weight(Vertex v) const {
  mpq_class total = 0;
  for (Vertex u : graph_.neighbors(v)) total += weights_[graph_.edge_index(u, v)];
  return total;
}

WeightedGraph unit_weights(const Graph& g) {
  return WeightedGraph(g, std::vector<mpq_class>(static_cast<std::size_t>(g.size()), mpq_class(1)));
}

WeightedGraph parse_weighted_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long n = -1;
  std::vector<std::pair<Edge, mpq_class>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> toks;
    for (std::string t; fields >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    auto to_long = [&](const std::string& t) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw Error(ErrorCode::MalformedEdgeList, where + "'" + t + "' is not an integer");
      }
      return value;
    };
    if (n < 0) {
      if (toks.size() != 1) throw Error(ErrorCode::MalformedEdgeList, where + "expected the vertex count");
      n = to_long(toks[0]);
      if (n < 0) throw Error(ErrorCode::MalformedEdgeList, where + "negative vertex count");
      continue;
    }
    if (toks.size() != 3) throw Error(ErrorCode::MalformedEdgeList, where + "expected 'u v w'");
    const long u = to_long(toks[0]);
    const long v = to_long(toks[1]);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::EndpointOutOfRange, where + "endpoint out of range");
    }
    mpq_class w;
    if (toks[2].find_first_not_of("+-0123456789/") != std::string::npos || w.set_str(toks[2], 10) != 0 ||
        sgn(w.get_den()) == 0) {
      throw Error(ErrorCode::MalformedEdgeList, where + "'" + toks[2] + "' is not a rational weight");
    }
    w.canonicalize();
    entries.push_back({{static_cast<int>(u), static_cast<int>(v)}, w});
  }
  if (n < 0) throw Error(ErrorCode::MalformedEdgeList, "missing vertex count");

  std::vector<Edge> edges;
  for (const auto& [e, w] : entries) edges.push_back(e);
  Graph g(static_cast<int>(n), std::move(edges));
  std::vector<mpq_class> weights(static_cast<std::size_t>(g.size()));
  for (const auto& [e, w] : entries) weights[g.edge_index(e.u, e.v)] = w;
  return WeightedGraph(std::move(g), std::move(weights));
}

namespace {

struct WeightedSummation {
  const WeightedGraph& wg;
  std::vector<mpq_class> vertex_weight;
  std::vector<bool> matched;
  RatPoly total;

  explicit WeightedSummation(const WeightedGraph& w)
      : wg(w), matched(w.graph().order(), false) {
    for (Vertex v = 0; v < w.graph().order(); ++v) vertex_weight.push_back(w.vertex_weight(v));
  }

  // Same walk as the unweighted summation; a matched edge contributes -w(e)^2.
  void run(Vertex v, const RatPoly& carry) {
    const Graph& g = wg.graph();
    while (v < g.order() && matched[v]) ++v;
    if (v == g.order()) {
      total += carry;
      return;
    }
    RatPoly next = carry;
    next.multiply_linear(vertex_weight[v]);
    run(v + 1, next);
    for (Vertex u : g.neighbors(v)) {
      if (u <= v || matched[u]) continue;
      const mpq_class& w = wg.weight(g.edge_index(v, u));
      matched[u] = true;
      run(v + 1, carry * mpq_class(-w * w));
      matched[u] = false;
    }
  }
};

}  // namespace

RatPoly weighted_beta(const WeightedGraph& wg) {
  WeightedSummation sum(wg);
  sum.run(0, RatPoly{1});
  return sum.total;
}

}  // namespace lappoly
