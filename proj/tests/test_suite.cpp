#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hullcert/sampling.hpp"
#include "hullcert/suite.hpp"
#include "oracles/oracles.hpp"

using namespace hullcert;

TEST_CASE("sampler reproducibility and ranges") {
  Sampler a(42), b(42), c(43);
  std::vector<std::uint64_t> va, vb, vc;
  for (int k = 0; k < 20; ++k) {
    va.push_back(a.next());
    vb.push_back(b.next());
    vc.push_back(c.next());
  }
  CHECK(va == vb);
  CHECK(va != vc);

  Sampler s(1);
  for (int k = 0; k < 2000; ++k) {
    CHECK(s.below(7) < 7);
    const long v = s.between(-3, 3);
    CHECK((v >= -3 && v <= 3));
    const Rational u = s.unit_rational(12);
    CHECK((u >= 0 && u <= 1));
    CHECK(u.denominator() <= 12);
    const Rational i = s.interior_rational();
    CHECK((i > 0 && i < 1));
  }
  CHECK_THROWS(s.below(0));

  Sampler e(3);
  int boundary = 0;
  for (int k = 0; k < 200; ++k) {
    for (const auto& v : e.point_with_boundary(5, 1, 4)) boundary += (v == 0 || v == 1) ? 1 : 0;
  }
  CHECK(boundary > 150);
  CHECK(boundary < 350);
}

TEST_CASE("per-sample streams") {
  auto first = [](std::uint64_t seed, const char* stream, std::uint64_t i) { return Sampler::for_sample(seed, stream, i).next(); };
  CHECK(first(7, "W_4", 3) == first(7, "W_4", 3));
  CHECK(first(7, "W_4", 3) != first(7, "W_4", 4));
  CHECK(first(7, "W_4", 3) != first(7, "W_6", 3));
  CHECK(first(7, "W_4", 3) != first(8, "W_4", 3));
}

TEST_CASE("random bipartite graphs") {
  Sampler s(5);
  for (int k = 0; k < 100; ++k) {
    const int n = static_cast<int>(s.between(2, 8));
    const Graph g = random_bipartite(s, n);
    CHECK(g.n() == n);
    CHECK(oracle::two_colourable(g));
  }
}

TEST_CASE("run_samples ordering and failures") {
  for (unsigned threads : {1U, 2U, 5U}) {
    const auto recs = run_samples(40, threads, [](std::size_t i) {
      if (i == 13) throw std::runtime_error("boom");
      return SampleRecord{i, i % 7 != 0, {{"i", i}}};
    });
    REQUIRE(recs.size() == 40);
    for (std::size_t i = 0; i < recs.size(); ++i) {
      CHECK(recs[i].index == i);
      if (i == 13) {
        CHECK_FALSE(recs[i].ok);
        CHECK(recs[i].detail.dump().find("boom") != std::string::npos);
      } else {
        CHECK(recs[i].ok == (i % 7 != 0));
      }
    }
  }
  SuiteGroup g{"g", run_samples(10, 3, [](std::size_t i) { return SampleRecord{i, i != 4, {}}; })};
  CHECK(g.passed() == 9);
  CHECK_FALSE(g.ok());
  const auto j = to_json(g, false);
  CHECK(j.at("failures").size() == 1);
  CHECK(j.at("ok") == false);
}

TEST_CASE("groups pass and do not depend on the thread count") {
  const SuiteOptions one{11, 12, 1};
  const SuiteOptions many{11, 12, 4};
  const auto w1 = even_wheel_group(4, one);
  const auto w4 = even_wheel_group(4, many);
  CHECK(w1.ok());
  CHECK(to_json(w1, true).dump() == to_json(w4, true).dump());

  const auto s1 = split_group(3, 2, one);
  CHECK(s1.ok());
  CHECK(to_json(s1, true).dump() == to_json(split_group(3, 2, many), true).dump());

  CHECK(triangle_group(one).ok());
  const auto b = bipartite_group(5, 3, one);
  CHECK(b.ok());
  CHECK(b.records.size() == 12);
  CHECK(to_json(b, true).dump() == to_json(bipartite_group(5, 3, many), true).dump());

  CHECK(to_json(even_wheel_group(4, {12, 12, 1}), true).dump() != to_json(w1, true).dump());
}
