#include "lappoly/graph.hpp"

#include <algorithm>
#include <numeric>

#include "lappoly/error.hpp"
#include "union_find.hpp"

namespace lappoly {

namespace {

void check_vertex_set(const Graph& g, const VertexSet& w) {
  for (Vertex v : w) {
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in graph of order " +
                      std::to_string(g.order()));
    }
  }
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw Error(ErrorCode::EndpointOutOfRange,
                  "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                      " out of range for n = " + std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }
  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return components(*this).components.size() == 1;
}

bool Graph::is_forest() const {
  for (ComponentKind k : components(*this).kinds) {
    if (k != ComponentKind::Tree) return false;
  }
  return true;
}

bool Graph::is_star() const {
  if (n_ < 2 || size() != n_ - 1 || !is_connected()) return false;
  return max_degree() == n_ - 1;
}

VertexSet Graph::vertices() const {
  VertexSet all(n_);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

VertexSet complement(const Graph& g, const VertexSet& w) {
  check_vertex_set(g, w);
  std::vector<bool> drop(g.order(), false);
  for (Vertex v : w) drop[v] = true;
  VertexSet rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop[v]) rest.push_back(v);
  }
  return rest;
}

InducedSubgraph induced_keep(const Graph& g, const VertexSet& kept) {
  check_vertex_set(g, kept);
  std::vector<int> new_label(g.order(), -1);
  InducedSubgraph out;
  VertexSet sorted = kept;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    new_label[v] = static_cast<int>(out.original_of.size());
    out.original_of.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (new_label[e.u] >= 0 && new_label[e.v] >= 0) {
      edges.push_back({new_label[e.u], new_label[e.v]});
    }
  }
  out.graph = Graph(static_cast<int>(sorted.size()), std::move(edges));
  return out;
}

InducedSubgraph induced_delete(const Graph& g, const VertexSet& removed) {
  return induced_keep(g, complement(g, removed));
}

int SubdivisionGraph::original_edge(const Edge& f) const {
  int a = original_edge_of.at(f.u);
  return a >= 0 ? a : original_edge_of.at(f.v);
}

SubdivisionGraph subdivision(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  SubdivisionGraph s;
  s.original_order = n;
  s.edge_vertex_of.resize(m);
  s.original_edge_of.assign(n + m, -1);
  std::vector<Edge> edges;
  edges.reserve(2 * m);
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    s.edge_vertex_of[i] = n + i;
    s.original_edge_of[n + i] = i;
    edges.push_back({e.u, n + i});
    edges.push_back({e.v, n + i});
  }
  s.graph = Graph(n + m, std::move(edges));
  return s;
}

std::string_view to_string(ComponentKind kind) noexcept {
  switch (kind) {
    case ComponentKind::Tree: return "tree";
    case ComponentKind::Unicyclic: return "unicyclic";
    case ComponentKind::Other: return "other";
  }
  return "other";
}

ComponentReport components(const Graph& g) {
  ComponentReport report;
  std::vector<int> label(g.order(), -1);
  for (Vertex start = 0; start < g.order(); ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(report.components.size());
    VertexSet comp{start};
    label[start] = id;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (label[w] < 0) {
          label[w] = id;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    report.components.push_back(std::move(comp));
  }
  report.edge_counts.assign(report.components.size(), 0);
  for (const Edge& e : g.edges()) ++report.edge_counts[label[e.u]];
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    const int nv = static_cast<int>(report.components[c].size());
    const int ne = report.edge_counts[c];
    ComponentKind kind = ne == nv - 1 ? ComponentKind::Tree
                         : ne == nv   ? ComponentKind::Unicyclic
                                      : ComponentKind::Other;
    report.kinds.push_back(kind);
    switch (kind) {
      case ComponentKind::Tree: ++report.trees; break;
      case ComponentKind::Unicyclic: ++report.unicyclic; break;
      case ComponentKind::Other: ++report.other; break;
    }
  }
  return report;
}

namespace {

struct TwoRegularSearch {
  const Graph& g;
  std::vector<int> degree;     // degree inside the chosen subset
  std::vector<int> undecided;  // incident edges not yet decided
  std::vector<int> chosen;
  std::vector<std::vector<int>> found;

  explicit TwoRegularSearch(const Graph& graph)
      : g(graph), degree(graph.order(), 0), undecided(graph.order(), 0) {
    for (const Edge& e : g.edges()) {
      ++undecided[e.u];
      ++undecided[e.v];
    }
  }

  // A touched vertex must still be able to reach degree exactly 2.
  bool viable(Vertex v) const {
    return degree[v] <= 2 && !(degree[v] == 1 && undecided[v] == 0);
  }

  void run(int index) {
    if (index == g.size()) {
      if (!chosen.empty()) found.push_back(chosen);
      return;
    }
    const Edge& e = g.edges()[index];
    --undecided[e.u];
    --undecided[e.v];

    ++degree[e.u];
    ++degree[e.v];
    chosen.push_back(index);
    if (viable(e.u) && viable(e.v)) run(index + 1);
    chosen.pop_back();
    --degree[e.u];
    --degree[e.v];

    if (viable(e.u) && viable(e.v)) run(index + 1);

    ++undecided[e.u];
    ++undecided[e.v];
  }
};

}  // namespace

std::vector<TwoRegularSubgraph> enumerate_two_regular(const Graph& g) {
  TwoRegularSearch search(g);
  search.run(0);
  std::sort(search.found.begin(), search.found.end());

  std::vector<TwoRegularSubgraph> out;
  out.reserve(search.found.size());
  for (auto& edge_set : search.found) {
    TwoRegularSubgraph c;
    detail::RollbackUnionFind uf(g.order());
    std::vector<bool> touched(g.order(), false);
    int merges = 0;
    for (int i : edge_set) {
      const Edge& e = g.edges()[i];
      touched[e.u] = touched[e.v] = true;
      if (uf.find(e.u) != uf.find(e.v)) ++merges;
      uf.add_edge(e.u, e.v);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (touched[v]) c.vertices.push_back(v);
    }
    c.omega = static_cast<int>(c.vertices.size()) - merges;
    c.edge_set = std::move(edge_set);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> seq(g.order());
  for (Vertex v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

}  // namespace lappoly
