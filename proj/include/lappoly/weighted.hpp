#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "lappoly/graph.hpp"
#include "lappoly/polynomial.hpp"

namespace lappoly {

/// A graph with a positive rational weight on every edge; weights are indexed
/// like graph.edges().
class WeightedGraph {
 public:
  /// Throws NonpositiveWeight, or BadParameter if the counts differ.
  WeightedGraph(Graph graph, std::vector<mpq_class> weights);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<mpq_class>& weights() const noexcept { return weights_; }
  const mpq_class& weight(int edge_index) const { return weights_.at(edge_index); }
  /// Sum of the weights of edges incident with v.
  mpq_class vertex_weight(Vertex v) const;

 private:
  Graph graph_;
  std::vector<mpq_class> weights_;
};

WeightedGraph unit_weights(const Graph& g);

/// First non-blank line "n", then one "u v w" line per edge with w an integer
/// or a fraction p/q.
WeightedGraph parse_weighted_edge_list(std::string_view text);

/// sum over matchings M of (-1)^|M| prod_{e in M} w(e)^2 prod_{v unmatched} (x - w(v)).
RatPoly weighted_beta(const WeightedGraph& wg);

}  // namespace lappoly
