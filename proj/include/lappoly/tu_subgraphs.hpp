#pragma once

#include <gmpxx.h>

#include <vector>

#include "lappoly/graph.hpp"

namespace lappoly {

/// An edge subset of G whose edge-induced subgraph has only tree and
/// unicyclic components. Weight is 2^c * prod |V(T_i)| over the c unicyclic
/// components and the tree components T_i.
struct TuSubgraph {
  std::vector<int> edge_set;  // sorted edge indices into G.edges()
  std::vector<ComponentKind> component_kinds;
  mpz_class weight;
};

/// All TU-subgraphs with r edges, in lexicographic order of edge set.
std::vector<TuSubgraph> enumerate_tu(const Graph& g, int r);

/// Weight of the subgraph of g spanned by edge_set; isolated vertices of the
/// edge-induced subgraph are ignored. Throws NotTuSubgraph.
mpz_class tu_weight(const Graph& g, const std::vector<int>& edge_set);

/// Weight of a whole graph read as an edge-induced subgraph.
mpz_class tu_weight(const Graph& h);

/// sum of w(H) over TU-subgraphs H with r edges.
mpz_class coefficient_via_tu(const Graph& g, int r);

/// coefficient_via_tu for r = 0..n from a single enumeration pass.
std::vector<mpz_class> tu_coefficients(const Graph& g);

/// chi: the TU-subgraph of G spanned by {e(f) : f in matching}. The matching
/// is given as edges of s.graph.
TuSubgraph chi(const SubdivisionGraph& s, const std::vector<Edge>& matching);

struct Fiber {
  std::vector<int> edge_set;
  mpz_class weight;
  long size = 0;  // |chi^-1(H)|
  bool pass = false;
};

struct FiberReport {
  int r = 0;
  std::vector<Fiber> fibers;  // one per TU-subgraph with r edges
  long matchings = 0;    // p(S_G, r)
  bool pass = false;
};

/// Groups every r-matching of S_G by its image under chi.
FiberReport fiber_size_check(const Graph& g, int r);

struct MaxMatchingReport {
  ComponentKind kind = ComponentKind::Tree;
  mpz_class max_matchings;  // p(S_X, |E(X)|)
  mpz_class expected;       // |V| for trees, 2 for unicyclic
  /// Trees only: number of perfect matchings of S_T - v, per vertex v.
  std::vector<mpz_class> perfect_after_deletion;
  bool pass = false;
};

/// Maximum-matching counts of the subdivision of a tree or a connected
/// unicyclic graph, plus the unique perfect matching of S_T - v for trees.
MaxMatchingReport tree_unicyclic_max_matching_check(const Graph& x);

}  // namespace lappoly
