#pragma once

#include <cstdint>
#include <functional>

#include "lappoly/graph.hpp"

namespace testing_support {

/// Calls f on every labelled graph with exactly n vertices.
inline void for_each_graph(int n, const std::function<void(const lappoly::Graph&)>& f) {
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    f(lappoly::graph_from_mask(n, mask));
  }
}

/// Calls f on every labelled graph with 1..max_n vertices.
inline void for_each_graph_up_to(int max_n, const std::function<void(const lappoly::Graph&)>& f) {
  for (int n = 1; n <= max_n; ++n) for_each_graph(n, f);
}

/// Calls f on every subset of {0..n-1}, as a sorted vertex list.
inline void for_each_subset(int n, const std::function<void(const lappoly::VertexSet&)>& f) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    lappoly::VertexSet s;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) s.push_back(v);
    f(s);
  }
}

}  // namespace testing_support
