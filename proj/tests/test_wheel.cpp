#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hullcert/envelope.hpp"
#include "hullcert/lp.hpp"
#include "hullcert/sampling.hpp"
#include "hullcert/wheel.hpp"
#include "oracles/oracles.hpp"

using namespace hullcert;

namespace {

bool maximal_and_bracketed(const std::vector<Rational>& x, std::uint32_t T) {
  const int m = static_cast<int>(x.size()) - 1;
  auto in = [&](int i) { return ((T >> (i - 1)) & 1U) != 0; };
  for (int i = 1; i <= m; ++i) {
    const Rational s = x[static_cast<size_t>(i - 1)] + x[static_cast<size_t>(oracle::rim_next(i, m) - 1)] + x.back();
    const bool bracketed = s >= 1 && s <= 2;
    if (in(i) && !bracketed) return false;
    const int prev = i == 1 ? m : i - 1;
    if (!in(i) && !in(prev) && !in(oracle::rim_next(i, m)) && bracketed) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("phi and the cycle DP agree with brute force") {
  Sampler s(21);
  for (int k = 0; k < 150; ++k) {
    const int m = static_cast<int>(s.between(3, 10));
    const auto x = s.point_with_boundary(m + 1, 1, 8);
    CAPTURE(k);
    const Rational star = oracle::phi_star(x);
    CHECK(phi_star(x) == star);
    for (std::uint32_t T = 0; T < (1U << m); T += 1 + static_cast<std::uint32_t>(s.below(5))) {
      if (oracle::independent(T, m)) {
        CHECK(phi(x, oracle::members(T, m)) == oracle::phi(x, T));
      } else {
        CHECK_THROWS_AS(phi(x, oracle::members(T, m)), std::invalid_argument);
      }
    }
    const auto lex = lex_optimal_T(x);
    CHECK(oracle::phi(x, oracle::mask_of(lex)) == star);
    const TSelection sel = optimal_T(x);
    CHECK(sel.phi == star);
    CHECK(is_normalized(x, sel.T));
    CHECK(maximal_and_bracketed(x, oracle::mask_of(sel.T)));

    const PhiDecomposition d = phi_decomposition(x);
    Rational via = d.base;
    for (int i : sel.T) via += d.weight[static_cast<size_t>(i)];
    CHECK(via == star);
  }
}

TEST_CASE("certificates on even wheels") {
  Sampler s(44);
  for (int k = 0; k < 60; ++k) {
    const int m = 2 * static_cast<int>(s.between(2, 4));
    const auto x = s.point_with_boundary(m + 1, 1, 10);
    CAPTURE(k);
    const WheelResult r = wheel_certificate(x, {.post_verify = m <= 6});
    REQUIRE(r.certificate);
    REQUIRE(r.ok());
    const auto& sets = r.certificate->sets;
    const Graph g = Graph::wheel(m);
    for (int i = 1; i <= m + 1; ++i) CHECK(oracle::measure(oracle::raw(sets[static_cast<size_t>(i - 1)])) == x[static_cast<size_t>(i - 1)]);
    const Rational star = oracle::phi_star(x);
    CHECK(oracle::edge_sum(oracle::edge_list(g), sets) == star);

    const std::uint32_t T = oracle::mask_of(r.selection.T);
    auto X = [&](int i) { return oracle::raw(sets[static_cast<size_t>(i - 1)]); };
    auto in = [&](int i) { return ((T >> (i - 1)) & 1U) != 0; };
    const int hub = m + 1;
    for (int i = 1; i <= m; ++i) {
      const int nx = oracle::rim_next(i, m);
      const int prev = i == 1 ? m : i - 1;
      const Rational xi = x[static_cast<size_t>(i - 1)], xn = x[static_cast<size_t>(nx - 1)], xh = x.back();
      if (in(i)) {
        CHECK(oracle::overlap(X(i), X(nx)) + oracle::overlap(X(i), X(hub)) + oracle::overlap(X(nx), X(hub)) ==
              xi + xn + xh - 1);
      } else {
        CHECK(oracle::overlap(X(i), X(nx)) == oracle::pos(xi + xn - 1));
      }
      if (!in(i) && !in(prev)) CHECK(oracle::overlap(X(i), X(hub)) == oracle::pos(xi + xh - 1));
    }
    if (r.lb) CHECK(*r.lb == star);
    if (r.envelope) CHECK(*r.envelope == star);
  }
}

TEST_CASE("no negative cycle at a normalized selection") {
  Sampler s(3);
  for (int k = 0; k < 100; ++k) {
    const int m = 2 * static_cast<int>(s.between(2, 5));
    const auto x = s.point(m + 1);
    const TSelection sel = optimal_T(x);
    const FlowNetwork net = build_network(x, sel.T);
    CHECK_FALSE(find_negative_cycle(net).negative);
    CHECK_FALSE(shortest_negative_cycle(net).negative);
    CHECK(feasible_point(z_system(x, sel)).feasible);
  }
}

TEST_CASE("improvement from suboptimal maximal selections") {
  Sampler s(8);
  int probed = 0;
  for (int k = 0; k < 200 && probed < 40; ++k) {
    const int m = 2 * static_cast<int>(s.between(2, 4));
    const auto x = s.point(m + 1);
    const Rational star = oracle::phi_star(x);
    for (std::uint32_t T = 0; T < (1U << m); ++T) {
      if (!oracle::independent(T, m) || !maximal_and_bracketed(x, T)) continue;
      if (oracle::phi(x, T) >= star) continue;
      const auto members = oracle::members(T, m);
      const FlowNetwork net = build_network(x, members);
      const CycleReport cyc = shortest_negative_cycle(net);
      REQUIRE(cyc.negative);
      CHECK_FALSE(feasible_point(z_system_unchecked(x, members)).feasible);
      const auto better = improved_T(x, members, net, cyc);
      REQUIRE(better);
      CHECK(oracle::independent(oracle::mask_of(*better), m));
      CHECK(oracle::phi(x, oracle::mask_of(*better)) > oracle::phi(x, T));
      ++probed;
    }
  }
  CHECK(probed > 0);
}

TEST_CASE("reflection") {
  Sampler s(17);
  for (int k = 0; k < 50; ++k) {
    const int m = 2 * static_cast<int>(s.between(2, 5));
    const auto x = s.point(m + 1);
    const auto rx = reflect_point(x);
    CHECK(reflect_point(rx) == x);
    CHECK(rx.back() == x.back());
    CHECK(oracle::phi_star(rx) == oracle::phi_star(x));
    for (std::uint32_t T = 0; T < (1U << m); ++T) {
      if (!oracle::independent(T, m)) continue;
      const auto members = oracle::members(T, m);
      const auto rT = reflect_T(members, m);
      CHECK(reflect_T(rT, m) == members);
      CHECK(oracle::phi(rx, oracle::mask_of(rT)) == oracle::phi(x, T));
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(wheel_certificate(std::vector<Rational>(6, Rational(1, 2))), std::invalid_argument);
  CHECK_THROWS_AS(wheel_certificate({Rational(1, 2), 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(wheel_certificate({2, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_network(std::vector<Rational>(6, Rational(1, 2)), {}), std::invalid_argument);
  const std::vector<Rational> x(5, Rational(1, 2));
  CHECK_THROWS_AS(z_system(x, {{1, 2}, 0, false}), std::invalid_argument);
}

TEST_CASE("hub at one with an empty rim") {
  std::vector<Rational> x(7, Rational(0));
  x[6] = 1;
  const WheelResult r = wheel_certificate(x);
  CHECK(r.ok());
  CHECK(r.phi_star == Rational(0));
}
