#include <algorithm>
#include <charconv>
#include <random>
#include <set>

#include "lappoly/error.hpp"
#include "lappoly/graph.hpp"

namespace lappoly {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw uniform and platform independent.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t w;
  do {
    w = rng();
  } while (w >= limit);
  return w % bound;
}

}  // namespace

Graph generate_family(Family family, const std::vector<int>& params) {
  std::vector<Edge> edges;
  switch (family) {
    case Family::Path: {
      require(params.size() == 1 && params[0] >= 1, "path needs one size >= 1");
      const int n = params[0];
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return Graph(n, std::move(edges));
    }
    case Family::Cycle: {
      require(params.size() == 1 && params[0] >= 3, "cycle needs one size >= 3");
      const int n = params[0];
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, n - 1});
      return Graph(n, std::move(edges));
    }
    case Family::Star: {
      require(params.size() == 1 && params[0] >= 1, "star needs one leaf count >= 1");
      for (int i = 1; i <= params[0]; ++i) edges.push_back({0, i});
      return Graph(params[0] + 1, std::move(edges));
    }
    case Family::Complete: {
      require(params.size() == 1 && params[0] >= 1, "complete needs one size >= 1");
      const int n = params[0];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      return Graph(n, std::move(edges));
    }
    case Family::CompleteBipartite: {
      require(params.size() == 2 && params[0] >= 1 && params[1] >= 1,
              "complete_bipartite needs two part sizes >= 1");
      const int a = params[0];
      const int b = params[1];
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
      return Graph(a + b, std::move(edges));
    }
  }
  throw Error(ErrorCode::BadParameter, "unknown family");
}

Graph generate_family(std::string_view spec) {
  const auto colon = spec.find(':');
  require(colon != std::string_view::npos, "family spec must look like name:params");
  const std::string_view name = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);

  std::vector<int> params;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    require(ec == std::errc() && ptr == tok.data() + tok.size() && !tok.empty(),
            "bad family parameter '" + std::string(tok) + "'");
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }

  Family family;
  if (name == "path") family = Family::Path;
  else if (name == "cycle") family = Family::Cycle;
  else if (name == "star") family = Family::Star;
  else if (name == "complete") family = Family::Complete;
  else if (name == "complete_bipartite") family = Family::CompleteBipartite;
  else throw Error(ErrorCode::BadParameter, "unknown family '" + std::string(name) + "'");
  return generate_family(family, params);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  require(n >= 0, "random graph needs n >= 0");
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit_draw(rng) < p) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n)));

  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  for (int x : pruefer) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, x});
    if (--degree[x] == 1) leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

Graph random_unicyclic(int n, std::uint64_t seed) {
  require(n >= 3, "random unicyclic graph needs n >= 3");
  const Graph tree = random_tree(n, seed);
  std::vector<Edge> missing;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!tree.has_edge(i, j)) missing.push_back({i, j});
  std::mt19937_64 rng(mix_seed(seed, 1));
  std::vector<Edge> edges = tree.edges();
  edges.push_back(missing[draw_below(rng, missing.size())]);
  return Graph(n, std::move(edges));
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace lappoly
