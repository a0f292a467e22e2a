#include "lappoly/tu_subgraphs.hpp"

#include <algorithm>
#include <map>

#include "lappoly/error.hpp"
#include "lappoly/matchings.hpp"
#include "union_find.hpp"

namespace lappoly {

namespace {

struct Classified {
  std::vector<ComponentKind> kinds;
  mpz_class weight = 1;
  bool tu = true;
};

Classified classify_edge_set(const Graph& g, const std::vector<int>& edge_set) {
  detail::RollbackUnionFind uf(g.order());
  std::vector<bool> touched(g.order(), false);
  for (int i : edge_set) {
    if (i < 0 || i >= g.size()) throw Error(ErrorCode::BadParameter, "edge index out of range");
    const Edge& e = g.edges()[i];
    touched[e.u] = touched[e.v] = true;
    uf.add_edge(e.u, e.v);
  }
  Classified out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!touched[v] || uf.find(v) != v) continue;
    const int nv = uf.vertex_count(v);
    const int ne = uf.edge_count(v);
    if (ne == nv - 1) {
      out.kinds.push_back(ComponentKind::Tree);
      out.weight *= nv;
    } else if (ne == nv) {
      out.kinds.push_back(ComponentKind::Unicyclic);
      out.weight *= 2;
    } else {
      out.kinds.push_back(ComponentKind::Other);
      out.tu = false;
    }
  }
  return out;
}

// Depth-first search over edge subsets, abandoning any branch in which a
// component gains a second independent cycle.
class TuSearch {
 public:
  explicit TuSearch(const Graph& g) : g_(g), uf_(g.order()), touched_(g.order(), 0) {}

  template <typename Visit>
  void run(int max_edges, Visit&& visit) {
    max_edges_ = max_edges;
    descend(0, visit);
  }

  const std::vector<int>& chosen() const { return chosen_; }

  mpz_class weight() const {
    mpz_class w = 1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (touched_[v] == 0 || uf_.find(v) != v) continue;
      const int nv = uf_.vertex_count(v);
      w *= uf_.edge_count(v) == nv ? 2 : nv;
    }
    return w;
  }

 private:
  template <typename Visit>
  void descend(int index, Visit& visit) {
    if (index == g_.size() || static_cast<int>(chosen_.size()) == max_edges_) {
      visit(*this);
      return;
    }
    const Edge& e = g_.edges()[index];
    const int root = uf_.add_edge(e.u, e.v);
    if (uf_.edge_count(root) <= uf_.vertex_count(root)) {
      ++touched_[e.u];
      ++touched_[e.v];
      chosen_.push_back(index);
      descend(index + 1, visit);
      chosen_.pop_back();
      --touched_[e.u];
      --touched_[e.v];
    }
    uf_.undo();
    descend(index + 1, visit);
  }

  const Graph& g_;
  detail::RollbackUnionFind uf_;
  std::vector<int> touched_;
  std::vector<int> chosen_;
  int max_edges_ = 0;
};

}  // namespace

std::vector<TuSubgraph> enumerate_tu(const Graph& g, int r) {
  if (r < 0 || r > g.size()) {
    throw Error(ErrorCode::BadParameter, "edge count " + std::to_string(r) + " out of range");
  }
  std::vector<TuSubgraph> out;
  TuSearch search(g);
  search.run(r, [&](const TuSearch& s) {
    if (static_cast<int>(s.chosen().size()) != r) return;
    TuSubgraph h;
    h.edge_set = s.chosen();
    Classified c = classify_edge_set(g, h.edge_set);
    h.component_kinds = std::move(c.kinds);
    h.weight = std::move(c.weight);
    out.push_back(std::move(h));
  });
  std::sort(out.begin(), out.end(),
            [](const TuSubgraph& a, const TuSubgraph& b) { return a.edge_set < b.edge_set; });
  return out;
}

mpz_class tu_weight(const Graph& g, const std::vector<int>& edge_set) {
  Classified c = classify_edge_set(g, edge_set);
  if (!c.tu) throw Error(ErrorCode::NotTuSubgraph, "a component has more edges than vertices");
  return c.weight;
}

mpz_class tu_weight(const Graph& h) {
  std::vector<int> all(h.size());
  for (int i = 0; i < h.size(); ++i) all[i] = i;
  return tu_weight(h, all);
}

std::vector<mpz_class> tu_coefficients(const Graph& g) {
  std::vector<mpz_class> a(static_cast<std::size_t>(g.order()) + 1);
  TuSearch search(g);
  search.run(g.size(), [&](const TuSearch& s) { a[s.chosen().size()] += s.weight(); });
  return a;
}

mpz_class coefficient_via_tu(const Graph& g, int r) {
  if (r < 0) throw Error(ErrorCode::BadParameter, "negative edge count");
  if (r > g.order() || r > g.size()) return 0;
  mpz_class total = 0;
  TuSearch search(g);
  search.run(r, [&](const TuSearch& s) {
    if (static_cast<int>(s.chosen().size()) == r) total += s.weight();
  });
  return total;
}

TuSubgraph chi(const SubdivisionGraph& s, const std::vector<Edge>& matching) {
  std::vector<bool> used(s.graph.order(), false);
  std::vector<int> edge_set;
  for (Edge f : matching) {
    if (f.u > f.v) std::swap(f.u, f.v);
    if (f.u < 0 || f.v >= s.graph.order() || !s.graph.has_edge(f.u, f.v)) {
      throw Error(ErrorCode::BadParameter, "not an edge of the subdivision graph");
    }
    if (used[f.u] || used[f.v]) throw Error(ErrorCode::BadParameter, "edges share an endpoint");
    used[f.u] = used[f.v] = true;
    edge_set.push_back(s.original_edge(f));
  }
  std::sort(edge_set.begin(), edge_set.end());

  // Rebuild G from S_G: edge-vertex n+i joins the two endpoints of edge i.
  std::vector<Edge> original(s.edge_vertex_of.size());
  for (std::size_t i = 0; i < s.edge_vertex_of.size(); ++i) {
    const auto& nb = s.graph.neighbors(s.edge_vertex_of[i]);
    original[i] = {nb[0], nb[1]};
  }
  const Graph g(s.original_order, std::move(original));

  Classified c = classify_edge_set(g, edge_set);
  if (!c.tu) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "image of a matching of S_G has a component with more edges than vertices");
  }
  return TuSubgraph{std::move(edge_set), std::move(c.kinds), std::move(c.weight)};
}

FiberReport fiber_size_check(const Graph& g, int r) {
  if (r < 0) throw Error(ErrorCode::BadParameter, "negative matching size");
  const SubdivisionGraph s = subdivision(g);
  const auto& edges = s.graph.edges();

  std::map<std::vector<int>, long> fibers;
  std::vector<bool> used(s.graph.order(), false);
  std::vector<Edge> current;
  long total = 0;
  auto descend = [&](auto&& self, std::size_t index) -> void {
    if (static_cast<int>(current.size()) == r) {
      ++total;
      ++fibers[chi(s, current).edge_set];
      return;
    }
    if (index == edges.size()) return;
    if (static_cast<int>(edges.size() - index) < r - static_cast<int>(current.size())) return;
    const Edge& f = edges[index];
    if (!used[f.u] && !used[f.v]) {
      used[f.u] = used[f.v] = true;
      current.push_back(f);
      self(self, index + 1);
      current.pop_back();
      used[f.u] = used[f.v] = false;
    }
    self(self, index + 1);
  };
  descend(descend, 0);

  FiberReport report;
  report.r = r;
  report.matchings = total;
  report.pass = true;
  const std::vector<TuSubgraph> tus = r <= g.size() ? enumerate_tu(g, r) : std::vector<TuSubgraph>{};
  for (const TuSubgraph& h : tus) {
    Fiber f;
    f.edge_set = h.edge_set;
    f.weight = h.weight;
    auto it = fibers.find(h.edge_set);
    f.size = it == fibers.end() ? 0 : it->second;
    f.pass = f.weight == f.size;
    report.pass = report.pass && f.pass;
    report.fibers.push_back(std::move(f));
  }
  // Every image must be one of the enumerated TU-subgraphs.
  if (fibers.size() != tus.size()) report.pass = false;
  return report;
}

MaxMatchingReport tree_unicyclic_max_matching_check(const Graph& x) {
  const ComponentReport comps = components(x);
  if (comps.components.size() != 1 || comps.kinds[0] == ComponentKind::Other) {
    throw Error(ErrorCode::NotTreeOrUnicyclic, "input must be a tree or a connected unicyclic graph");
  }
  MaxMatchingReport report;
  report.kind = comps.kinds[0];
  const SubdivisionGraph s = subdivision(x);
  report.max_matchings = match_counts(s.graph).at(x.size());
  report.expected = report.kind == ComponentKind::Tree ? x.order() : 2;
  report.pass = report.max_matchings == report.expected;
  if (report.kind == ComponentKind::Tree) {
    for (Vertex v = 0; v < x.order(); ++v) {
      const Graph rest = induced_delete(s.graph, {v}).graph;
      mpz_class perfect = match_counts(rest).at(x.size());
      report.pass = report.pass && perfect == 1;
      report.perfect_after_deletion.push_back(std::move(perfect));
    }
  }
  return report;
}

}  // namespace lappoly
