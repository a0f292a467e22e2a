#include <random>

#include "doctest.h"
#include "lappoly/error.hpp"
#include "lappoly/matchings.hpp"
#include "lappoly/roots.hpp"
#include "lappoly/weighted.hpp"
#include "sweep.hpp"

using namespace lappoly;
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

}  // namespace

TEST_CASE("weighted_beta examples") {
  Graph k2 = generate_family(Family::Complete, {2});
  WeightedGraph w(k2, {mpq_class(3, 2)});
  CHECK(weighted_beta(w) == to_rational(IntPoly{0, -3, 1}));
  CHECK(w.vertex_weight(0) == mpq_class(3, 2));
  CHECK(weighted_beta(unit_weights(Graph(3))) == to_rational(IntPoly{0, 0, 0, 1}));
  CHECK(code_of([&] { WeightedGraph(k2, {mpq_class(0)}); }) == ErrorCode::NonpositiveWeight);
  CHECK(code_of([&] { WeightedGraph(k2, {mpq_class(-1, 3)}); }) == ErrorCode::NonpositiveWeight);
  CHECK(code_of([&] { WeightedGraph(k2, {}); }) == ErrorCode::BadParameter);
}

TEST_CASE("parse_weighted_edge_list") {
  WeightedGraph w = parse_weighted_edge_list("3\n0 1 3/2\n1 2 2\n");
  CHECK(w.graph().size() == 2);
  CHECK(w.weight(w.graph().edge_index(0, 1)) == mpq_class(3, 2));
  CHECK(w.vertex_weight(1) == mpq_class(7, 2));
  CHECK(code_of([] { parse_weighted_edge_list("2\n0 1 -1"); }) == ErrorCode::NonpositiveWeight);
  CHECK(code_of([] { parse_weighted_edge_list("2\n0 1"); }) == ErrorCode::MalformedEdgeList);
  CHECK(code_of([] { parse_weighted_edge_list("2\n0 1 1/0"); }) == ErrorCode::MalformedEdgeList);
}

TEST_CASE("unit weights reproduce beta on all graphs n <= 5") {
  for_each_graph_up_to(5, [](const Graph& g) {
    REQUIRE(weighted_beta(unit_weights(g)) == to_rational(laplacian_matching_polynomial(g)));
  });
}

TEST_CASE("weighted_beta is real-rooted for random positive rational weights") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<long> den(1, 5);
  for (std::uint64_t s = 0; s < 150; ++s) {
    Graph g = random_graph(2 + static_cast<int>(s % 5), 0.6, mix_seed(5, s));
    std::vector<mpq_class> weights;
    for (int i = 0; i < g.size(); ++i) {
      mpq_class q(num(rng), den(rng));
      q.canonicalize();
      weights.push_back(q);
    }
    WeightedGraph wg(g, weights);
    const IntPoly cleared = primitive_part(weighted_beta(wg));
    REQUIRE(real_roots(cleared).count() == g.order());
  }
}
