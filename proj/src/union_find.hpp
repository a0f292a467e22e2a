#pragma once

#include <utility>
#include <vector>

namespace lappoly::detail {

// Union-find without path compression so that unions can be undone in LIFO
// order. Each root tracks the vertex and edge counts of its component.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), vertices_(n, 1), edges_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Adds the edge {a, b}; returns the root of the resulting component.
  int add_edge(int a, int b) {
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) {
      ++edges_[ra];
      history_.push_back({ra, -1});
      return ra;
    }
    if (vertices_[ra] < vertices_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    vertices_[ra] += vertices_[rb];
    edges_[ra] += edges_[rb] + 1;
    history_.push_back({ra, rb});
    return ra;
  }

  void undo() {
    auto [ra, rb] = history_.back();
    history_.pop_back();
    if (rb < 0) {
      --edges_[ra];
      return;
    }
    parent_[rb] = rb;
    vertices_[ra] -= vertices_[rb];
    edges_[ra] -= edges_[rb] + 1;
  }

  int vertex_count(int root) const { return vertices_[root]; }
  int edge_count(int root) const { return edges_[root]; }

 private:
  std::vector<int> parent_;
  std::vector<int> vertices_;
  std::vector<int> edges_;
  std::vector<std::pair<int, int>> history_;
};

}  // namespace lappoly::detail
