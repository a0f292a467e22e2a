#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lappoly {

using Vertex = int;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; the
/// constructor rejects loops, duplicates and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<Edge> edges = {});

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  /// Neighbours of v in increasing order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  bool has_edge(Vertex a, Vertex b) const;
  /// Index of {a, b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;

  int min_degree() const;
  int max_degree() const;

  bool is_connected() const;
  bool is_forest() const;
  bool is_tree() const { return is_connected() && size() == order() - 1; }
  /// K_{1,k} for some k >= 1 (K2 included).
  bool is_star() const;

  VertexSet vertices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Result of deleting a vertex set: the induced subgraph on the survivors,
/// relabelled densely in increasing order, with the map back to G.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original_of;  // new label -> label in G
};

InducedSubgraph induced_delete(const Graph& g, const VertexSet& removed);
InducedSubgraph induced_keep(const Graph& g, const VertexSet& kept);

/// V(G) \ W.
VertexSet complement(const Graph& g, const VertexSet& w);

/// S_G: vertices 0..n-1 are the originals, n+i is the vertex inserted into
/// edge i of G. Edge i = {u, v} becomes {u, n+i} and {v, n+i}.
struct SubdivisionGraph {
  Graph graph;
  int original_order = 0;
  std::vector<Vertex> edge_vertex_of;  // edge index of G -> vertex of S_G
  std::vector<int> original_edge_of;   // vertex of S_G -> edge index of G, -1 for originals

  /// e(f): the edge of G that the S_G edge f came from.
  int original_edge(const Edge& f) const;
};

SubdivisionGraph subdivision(const Graph& g);

enum class ComponentKind { Tree, Unicyclic, Other };

std::string_view to_string(ComponentKind kind) noexcept;

struct ComponentReport {
  std::vector<VertexSet> components;  // ordered by smallest vertex
  std::vector<ComponentKind> kinds;
  std::vector<int> edge_counts;
  int trees = 0;
  int unicyclic = 0;
  int other = 0;
};

ComponentReport components(const Graph& g);

struct TwoRegularSubgraph {
  std::vector<int> edge_set;  // sorted edge indices into G.edges()
  VertexSet vertices;
  int omega = 0;  // number of cycles
};

/// Every nonempty 2-regular edge subset, sorted lexicographically by edge set.
std::vector<TwoRegularSubgraph> enumerate_two_regular(const Graph& g);

/// Degrees sorted nonincreasing.
std::vector<int> degree_sequence(const Graph& g);

// ---------------------------------------------------------------------------
// Ingestion and emission

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// First non-blank line holds n, every further non-blank line "u v".
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// ---------------------------------------------------------------------------
// Generators

enum class Family { Path, Cycle, Star, Complete, CompleteBipartite };

/// path n, cycle n (n >= 3), star k (K_{1,k}, centre 0), complete n,
/// complete_bipartite a b (parts 0..a-1 and a..a+b-1).
Graph generate_family(Family family, const std::vector<int>& params);

/// Parses "cycle:3", "complete_bipartite:2,3", ...
Graph generate_family(std::string_view spec);

/// G(n, p). Pairs (i, j), i < j, are visited in lexicographic order and each
/// draws one 64-bit word w from std::mt19937_64 seeded with `seed`; the pair
/// is kept iff (w >> 11) * 2^-53 < p.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Uniform labelled tree on n >= 1 vertices via a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Random tree on n >= 3 vertices plus one extra edge (a connected
/// unicyclic graph).
Graph random_unicyclic(int n, std::uint64_t seed);

/// Graph on n vertices whose edge set is {edges of K_n at the set bits of mask},
/// with K_n's edges indexed lexicographically. Used by exhaustive sweeps.
Graph graph_from_mask(int n, std::uint64_t mask);

/// SplitMix64 finaliser; derives independent per-item seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) noexcept;

}  // namespace lappoly
