#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hullcert/interval_set.hpp"
#include "hullcert/sampling.hpp"
#include "oracles/oracles.hpp"

using namespace hullcert;

namespace {

IntervalSet random_set(Sampler& s) {
  std::vector<Interval> parts;
  const auto count = s.below(4);
  for (std::uint64_t k = 0; k < count; ++k) {
    Rational a = s.unit_rational(12), b = s.unit_rational(12);
    if (b < a) std::swap(a, b);
    parts.push_back({a, b});
  }
  return IntervalSet::make(parts);
}

}  // namespace

TEST_CASE("normal form merges, sorts and drops empties") {
  const auto s = IntervalSet::make({{Rational(1, 2), Rational(3, 4)},
                                    {Rational(0), Rational(1, 4)},
                                    {Rational(1, 4), Rational(1, 3)},
                                    {Rational(3, 5), Rational(3, 5)},
                                    {Rational(2, 3), Rational(4, 5)}});
  REQUIRE(s.intervals().size() == 2);
  CHECK(s.intervals()[0] == Interval{Rational(0), Rational(1, 3)});
  CHECK(s.intervals()[1] == Interval{Rational(1, 2), Rational(4, 5)});
  CHECK(s.measure() == Rational(1, 3) + Rational(3, 10));
}

TEST_CASE("bad intervals are rejected") {
  CHECK_THROWS_AS(IntervalSet::make({{Rational(-1, 10), Rational(1, 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::make({{Rational(1, 2), Rational(11, 10)}}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::make({{Rational(1, 2), Rational(1, 3)}}), std::invalid_argument);
}

TEST_CASE("half-open membership") {
  const auto s = IntervalSet::range(Rational(1, 4), Rational(1, 2));
  CHECK(s.contains(Rational(1, 4)));
  CHECK_FALSE(s.contains(Rational(1, 2)));
  CHECK(IntervalSet::full().contains(0));
  CHECK_FALSE(IntervalSet::full().contains(1));
  CHECK(IntervalSet().empty());
  CHECK(IntervalSet::range(Rational(1, 3), Rational(1, 3)).empty());
}

TEST_CASE("set operations on a fixed pair") {
  const auto a = IntervalSet::make({{Rational(3, 10), Rational(1)}, {Rational(1, 10), Rational(1, 4)}});
  const auto b = IntervalSet::range(Rational(0), Rational(1, 2));
  CHECK(intersect(a, b) == IntervalSet::make({{Rational(1, 10), Rational(1, 4)}, {Rational(3, 10), Rational(1, 2)}}));
  CHECK(overlap(a, b) == Rational(7, 20));
  CHECK(unite(a, b) == IntervalSet::full());
  CHECK(complement(a) == IntervalSet::make({{Rational(0), Rational(1, 10)}, {Rational(1, 4), Rational(3, 10)}}));
  CHECK(difference(b, a) == complement(a));
  std::ostringstream os;
  os << a;
  CHECK(os.str() == "[1/10, 1/4) u [3/10, 1/1)");
}

TEST_CASE("random pairs agree with endpoint refinement") {
  Sampler s(2024);
  for (int k = 0; k < 2000; ++k) {
    const auto a = random_set(s), b = random_set(s);
    const auto pa = oracle::raw(a), pb = oracle::raw(b);
    CHECK(overlap(a, b) == oracle::overlap(pa, pb));
    CHECK(intersect(a, b).measure() == oracle::overlap(pa, pb));
    CHECK(unite(a, b).measure() ==
          oracle::refined_measure({pa, pb}, [](const std::vector<bool>& in) { return in[0] || in[1]; }));
    CHECK(difference(a, b).measure() ==
          oracle::refined_measure({pa, pb}, [](const std::vector<bool>& in) { return in[0] && !in[1]; }));
    CHECK(complement(a).measure() == 1 - oracle::measure(pa));
    CHECK(IntervalSet::make(a.intervals()) == a);
    CHECK(complement(complement(a)) == a);
  }
}
