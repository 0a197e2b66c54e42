#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hullcert/envelope.hpp"
#include "hullcert/lp.hpp"
#include "hullcert/sampling.hpp"
#include "oracles/oracles.hpp"

using namespace hullcert;

namespace {

Graph random_graph(Sampler& s, int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (s.chance(1, 2)) edges.push_back({i, j});
    }
  }
  return Graph::generic(n, edges);
}

std::vector<int> bits(std::uint64_t mask, int n) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(static_cast<int>((mask >> i) & 1U));
  return v;
}

}  // namespace

TEST_CASE("envelope matches the dual LP and its support is a valid decomposition") {
  Sampler s(5);
  for (int k = 0; k < 80; ++k) {
    const int n = static_cast<int>(s.between(2, 4));
    const Graph g = random_graph(s, n);
    const auto x = s.point_with_boundary(n, 1, 5);
    const EnvelopeResult env = envelope(g, x);
    CAPTURE(k);
    CHECK(env.value == oracle::envelope_dual(g, x));

    Rational mass, fsum;
    std::vector<Rational> mean(static_cast<size_t>(n));
    for (const auto& [mask, w] : env.support) {
      CHECK(w.sign() > 0);
      mass += w;
      const auto v = bits(mask, n);
      for (int i = 0; i < n; ++i) mean[static_cast<size_t>(i)] += w * v[static_cast<size_t>(i)];
      fsum += w * oracle::f_vertex(oracle::edge_list(g), v);
    }
    CHECK(mass == Rational(1));
    CHECK(mean == x);
    CHECK(fsum == env.value);
    CHECK(env.value <= f_at(g, x));
  }
}

TEST_CASE("envelope at cube vertices is the function value") {
  Sampler s(9);
  for (int k = 0; k < 30; ++k) {
    const int n = static_cast<int>(s.between(2, 6));
    const Graph g = random_graph(s, n);
    std::vector<int> v;
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) {
      v.push_back(s.chance(1, 2) ? 1 : 0);
      x.push_back(v.back());
    }
    CHECK(envelope_value(g, x) == oracle::f_vertex(oracle::edge_list(g), v));
    CHECK(f_value(g, v) == oracle::f_vertex(oracle::edge_list(g), v));
  }
}

TEST_CASE("triangle at the centre") {
  const Graph k3 = Graph::generic(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(envelope_value(k3, std::vector<Rational>(3, Rational(1, 2))) == Rational(1, 2));
  CHECK(f_at(k3, std::vector<Rational>(3, Rational(1, 2))) == Rational(3, 4));
}

TEST_CASE("size guard") {
  const Graph big = Graph::wheel(16);
  const std::vector<Rational> x(17, Rational(1, 2));
  CHECK_THROWS_AS(envelope(big, x), std::invalid_argument);
  CHECK_THROWS_AS(envelope(Graph::wheel(4), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(envelope(Graph::wheel(4), std::vector<Rational>(5, 2)), std::invalid_argument);
  // With the guard lifted, pinned 0/1 coordinates keep the LP small.
  std::vector<Rational> pinned(17, Rational(0));
  pinned[0] = Rational(1, 3);
  pinned[16] = Rational(2, 3);
  CHECK(envelope(big, pinned, {.max_n = 16, .override_guard = true}).value == Rational(0));
}

TEST_CASE("upper boundary is the McCormick maximum of y(E)") {
  Sampler s(13);
  for (int k = 0; k < 40; ++k) {
    const int n = static_cast<int>(s.between(2, 5));
    const Graph g = random_graph(s, n);
    if (g.edges().empty()) continue;
    const auto x = s.point(n);
    Terms all;
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) all.push_back({e, 1});
    const FixedXResult up = optimize_at(mccormick(g, false), x, all, Sense::maximize);
    Rational expect;
    for (const auto& e : g.edges()) expect += std::min(x[static_cast<size_t>(e.u - 1)], x[static_cast<size_t>(e.v - 1)]);
    CHECK(up.value == expect);
    CHECK(upper_boundary(g, x) == expect);
  }
}
