#include <random>
#include <set>

#include "doctest.h"
#include "lappoly/error.hpp"
#include "lappoly/graph.hpp"
#include "oracles.hpp"
#include "sweep.hpp"

using namespace lappoly;
using testing_support::for_each_graph;
using testing_support::for_each_graph_up_to;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInvariantViolation;
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

// Two-colours by BFS; returns false if some edge joins equal colours.
bool is_bipartite(const Graph& g, std::vector<int>& colour) {
  colour.assign(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("graph construction validates edges") {
  CHECK(code_of([] { Graph(3, {{0, 0}}); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { Graph(2, {{0, 2}}); }) == ErrorCode::EndpointOutOfRange);
  Graph g(4, {{2, 1}, {0, 3}});
  CHECK(g.edges()[0] == Edge{0, 3});
  CHECK(g.edges()[1] == Edge{1, 2});
  CHECK(g.edge_index(2, 1) == 1);
  CHECK(g.edge_index(0, 1) == -1);
}

TEST_CASE("degrees match the edge set on every small graph") {
  for_each_graph_up_to(5, [](const Graph& g) {
    std::vector<int> count(g.order(), 0);
    for (const Edge& e : g.edges()) ++count[e.u], ++count[e.v];
    for (int v = 0; v < g.order(); ++v) REQUIRE(g.degree(v) == count[v]);
    int sum = 0;
    for (int d : degree_sequence(g)) sum += d;
    REQUIRE(sum == 2 * g.size());
  });
}

TEST_CASE("parse_graph6") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.has_edge(0, 1));
  CHECK(code_of([] { parse_graph6(""); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("A"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("A__"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("A~"); }) == ErrorCode::MalformedGraph6);  // padding bits set
  CHECK(code_of([] { parse_graph6("A\x7f"); }) == ErrorCode::MalformedGraph6);
  CHECK(parse_graph6(">>graph6<<A_\n") == k2);
  CHECK(parse_graph6("@").order() == 1);
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 agrees with an independent decoder on random graphs") {
  for (int n = 2; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Graph g = random_graph(n, 0.45, mix_seed(1234, seed * 11 + n));
      const std::string text = to_graph6(g);
      CHECK(oracle::decode_graph6(text) == edge_pairs(g));
      Graph back = parse_graph6(text);
      CHECK(back.size() == static_cast<int>(oracle::decode_graph6(text).size()));
      CHECK(back == g);
    }
  }
}

TEST_CASE("graph6 round-trips every labelled graph up to 7 vertices") {
  long checked = 0;
  for (int n = 0; n <= 7; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      REQUIRE(parse_graph6(to_graph6(g)) == g);
      ++checked;
    });
  }
  CHECK(checked > (1L << 21));
}

TEST_CASE("graph6 long order form") {
  Graph g = generate_family(Family::Path, {70});
  const std::string text = to_graph6(g);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == g);
}

TEST_CASE("parse_edge_list") {
  Graph p3 = parse_edge_list("3\n0 1\n1 2");
  CHECK(p3 == generate_family(Family::Path, {3}));
  CHECK(code_of([] { parse_edge_list("3\n0 1\n0 1"); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { parse_edge_list("2\n0 2"); }) == ErrorCode::EndpointOutOfRange);
  CHECK(code_of([] { parse_edge_list("2\n1 1"); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { parse_edge_list("x\n0 1"); }) == ErrorCode::MalformedEdgeList);
  CHECK(code_of([] { parse_edge_list("3\n0 1 2"); }) == ErrorCode::MalformedEdgeList);
  CHECK(code_of([] { parse_edge_list(""); }) == ErrorCode::MalformedEdgeList);
  CHECK(parse_edge_list(to_edge_list(p3)) == p3);
  CHECK(parse_edge_list("\n4\n\n2 3\n").size() == 1);
}

TEST_CASE("generate_family") {
  Graph c3 = generate_family(Family::Cycle, {3});
  CHECK(edge_pairs(c3) == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  Graph star = generate_family(Family::Star, {3});
  CHECK(star.order() == 4);
  CHECK(star.degree(0) == 3);
  CHECK(star.is_star());
  CHECK(code_of([] { generate_family(Family::Cycle, {2}); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { generate_family(Family::Path, {0}); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { generate_family("wheel:5"); }) == ErrorCode::BadParameter);
  CHECK(generate_family("complete_bipartite:2,3").size() == 6);
  CHECK(generate_family("complete:5").size() == 10);
  CHECK(generate_family("cycle:3") == c3);
}

TEST_CASE("random generators") {
  CHECK(random_graph(5, 0.0, 99).size() == 0);
  CHECK(random_graph(5, 1.0, 99).size() == 10);
  CHECK(random_graph(8, 0.5, 42) == random_graph(8, 0.5, 42));
  CHECK(code_of([] { random_graph(5, 1.5, 1); }) == ErrorCode::BadParameter);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const int n = 1 + static_cast<int>(s % 12);
    Graph t = random_tree(n, s);
    CHECK(t.is_tree());
    CHECK(t == random_tree(n, s));
    if (n >= 3) {
      Graph u = random_unicyclic(n, s);
      CHECK(u.is_connected());
      CHECK(u.size() == n);
    }
  }
  CHECK(mix_seed(7, 0) != mix_seed(7, 1));
}

TEST_CASE("subdivision") {
  Graph c3 = generate_family(Family::Cycle, {3});
  SubdivisionGraph s = subdivision(c3);
  CHECK(s.graph.order() == 6);
  CHECK(s.graph.size() == 6);
  for (int v = 0; v < 6; ++v) CHECK(s.graph.degree(v) == 2);
  CHECK(s.graph.is_connected());

  SubdivisionGraph p = subdivision(generate_family(Family::Path, {3}));
  CHECK(p.graph.is_tree());
  CHECK(degree_sequence(p.graph) == std::vector<int>{2, 2, 2, 1, 1});

  SubdivisionGraph k = subdivision(generate_family(Family::Complete, {4}));
  CHECK(k.graph.order() == 10);
  CHECK(k.graph.size() == 12);
}

TEST_CASE("subdivision is bipartite with degree-2 edge vertices for all graphs n <= 6") {
  for_each_graph_up_to(6, [](const Graph& g) {
    SubdivisionGraph s = subdivision(g);
    REQUIRE(s.graph.order() == g.order() + g.size());
    REQUIRE(s.graph.size() == 2 * g.size());
    for (const Edge& f : s.graph.edges()) {
      REQUIRE(f.u < g.order());
      REQUIRE(f.v >= g.order());
    }
    for (int i = 0; i < g.size(); ++i) {
      const int ev = s.edge_vertex_of[i];
      REQUIRE(s.graph.degree(ev) == 2);
      REQUIRE(s.original_edge_of[ev] == i);
      REQUIRE(s.graph.has_edge(ev, g.edges()[i].u));
      REQUIRE(s.graph.has_edge(ev, g.edges()[i].v));
    }
    std::vector<int> colour;
    REQUIRE(is_bipartite(s.graph, colour));
  });
}

TEST_CASE("induced_delete") {
  Graph p3 = generate_family(Family::Path, {3});
  InducedSubgraph r = induced_delete(p3, {1});
  CHECK(r.graph.order() == 2);
  CHECK(r.graph.size() == 0);
  CHECK(r.original_of == std::vector<int>{0, 2});
  Graph c3 = generate_family(Family::Cycle, {3});
  CHECK(induced_delete(c3, {}).graph == c3);
  Graph c4 = generate_family(Family::Cycle, {4});
  InducedSubgraph q = induced_delete(c4, {2});
  CHECK(q.graph.is_tree());
  CHECK(q.graph.max_degree() == 2);
  CHECK(code_of([&] { induced_delete(c4, {4}); }) == ErrorCode::VertexOutOfRange);
  CHECK(induced_keep(c4, {0, 1}).graph.size() == 1);
  CHECK(complement(c4, {1, 3}) == VertexSet{0, 2});
}

TEST_CASE("components") {
  ComponentReport p3 = components(generate_family(Family::Path, {3}));
  CHECK(p3.components.size() == 1);
  CHECK(p3.kinds[0] == ComponentKind::Tree);
  CHECK(components(generate_family(Family::Cycle, {3})).kinds[0] == ComponentKind::Unicyclic);
  CHECK(components(generate_family(Family::Complete, {4})).kinds[0] == ComponentKind::Other);

  for_each_graph_up_to(6, [](const Graph& g) {
    ComponentReport rep = components(g);
    std::vector<int> seen(g.order(), 0);
    for (std::size_t i = 0; i < rep.components.size(); ++i) {
      for (int v : rep.components[i]) ++seen[v];
      const int nv = static_cast<int>(rep.components[i].size());
      const int cycles = rep.edge_counts[i] - nv + 1;
      const ComponentKind want =
          cycles == 0 ? ComponentKind::Tree : cycles == 1 ? ComponentKind::Unicyclic : ComponentKind::Other;
      REQUIRE(rep.kinds[i] == want);
    }
    for (int c : seen) REQUIRE(c == 1);
  });
}

TEST_CASE("enumerate_two_regular") {
  CHECK(enumerate_two_regular(generate_family(Family::Path, {5})).empty());
  auto c4 = enumerate_two_regular(generate_family(Family::Cycle, {4}));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].omega == 1);
  auto k4 = enumerate_two_regular(generate_family(Family::Complete, {4}));
  CHECK(k4.size() == 7);
  int triangles = 0;
  for (const auto& c : k4) {
    CHECK(c.omega == 1);
    if (c.edge_set.size() == 3) ++triangles;
  }
  CHECK(triangles == 4);
  // Two disjoint triangles plus the union.
  Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto t = enumerate_two_regular(two);
  REQUIRE(t.size() == 3);
  CHECK(t[0].omega == 1);
  CHECK(t[1].omega == 2);
  CHECK(t[2].omega == 1);
}

TEST_CASE("enumerate_two_regular equals the brute-force filter for all graphs n <= 6") {
  for_each_graph_up_to(6, [](const Graph& g) {
    auto fast = enumerate_two_regular(g);
    auto slow = oracle::two_regular(g);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      REQUIRE(fast[i].edge_set == slow[i]);
      int touched = 0;
      for (int v : fast[i].vertices) (void)v, ++touched;
      // A union of cycles has as many edges as vertices.
      REQUIRE(touched == static_cast<int>(slow[i].size()));
      std::uint64_t mask = 0;
      for (int e : slow[i]) mask |= std::uint64_t{1} << e;
      REQUIRE(fast[i].omega == static_cast<int>(oracle::edge_induced_components(g, mask).size()));
    }
  });
}

TEST_CASE("degree_sequence") {
  CHECK(degree_sequence(generate_family(Family::Cycle, {3})) == std::vector<int>{2, 2, 2});
  CHECK(degree_sequence(generate_family(Family::Star, {3})) == std::vector<int>{3, 1, 1, 1});
  CHECK(degree_sequence(Graph(4)) == std::vector<int>{0, 0, 0, 0});
}
