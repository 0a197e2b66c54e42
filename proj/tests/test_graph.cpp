#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hullcert/graph.hpp"
#include "hullcert/sampling.hpp"
#include "oracles/oracles.hpp"

using namespace hullcert;

TEST_CASE("wheel structure") {
  const Graph g = Graph::wheel(6);
  CHECK(g.n() == 7);
  CHECK(g.edges().size() == 12);
  CHECK(g.hub() == 7);
  CHECK(g.rim_size() == 6);
  CHECK(g.rim_successor(6) == 1);
  CHECK(g.rim_predecessor(1) == 6);
  CHECK(g.has_edge(6, 1));
  CHECK(g.has_edge(3, 7));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK(g.neighbors(7).size() == 6);
  CHECK(cyclic_next(6, 6) == 1);
  CHECK(cyclic_prev(1, 6) == 6);
  CHECK_THROWS_AS(Graph::wheel(2), std::invalid_argument);
}

TEST_CASE("complete split structure") {
  const Graph g = Graph::complete_split(3, 2);
  CHECK(g.n() == 5);
  CHECK(g.edges().size() == 3 + 6);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(2, 5));
  CHECK_FALSE(g.has_edge(4, 5));
  CHECK(g.params() == std::vector<int>{3, 2});
  CHECK(Graph::complete_split(1, 0).edges().empty());
}

TEST_CASE("generic graphs are validated") {
  CHECK_THROWS_AS(Graph::generic(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::generic(3, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::generic(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  const Graph g = Graph::generic(3, {{3, 1}, {1, 2}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}});
}

TEST_CASE("json round trip and mismatch detection") {
  for (const Graph& g : {Graph::wheel(5), Graph::complete_split(2, 3), Graph::generic(4, {{1, 2}, {3, 4}})}) {
    const Graph back = Graph::from_json(g.to_json());
    CHECK(back.edges() == g.edges());
    CHECK(back.family() == g.family());
  }
  auto j = Graph::wheel(4).to_json();
  j["edges"].erase(0);
  CHECK_THROWS_AS(Graph::from_json(j), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_json({{"family", "petersen"}}), std::invalid_argument);
}

TEST_CASE("triangles and bipartiteness match brute force") {
  Sampler s(5);
  for (int k = 0; k < 300; ++k) {
    const int n = static_cast<int>(s.between(1, 8));
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (s.chance(1, 3)) edges.push_back({u, v});
      }
    }
    const Graph g = Graph::generic(n, edges);
    CHECK(triangles(g) == oracle::triangles(g));
    const Bipartition b = is_bipartite(g);
    CHECK(b.bipartite == oracle::two_colourable(g));
    if (b.bipartite) {
      for (const auto& e : g.edges()) CHECK(b.colour[static_cast<size_t>(e.u)] != b.colour[static_cast<size_t>(e.v)]);
    } else {
      CHECK(oracle::is_odd_cycle(g, b.odd_cycle));
    }
  }
}

TEST_CASE("random bipartite graphs are bipartite") {
  Sampler s(9);
  for (int k = 0; k < 100; ++k) {
    const Graph g = random_bipartite(s, static_cast<int>(s.between(2, 8)));
    CHECK(oracle::two_colourable(g));
  }
}
