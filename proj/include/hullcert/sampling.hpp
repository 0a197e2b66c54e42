#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "hullcert/graph.hpp"
#include "hullcert/rational.hpp"

namespace hullcert {

/// Seeded random source. Draws use only the raw mt19937_64 stream with
/// rejection, so a seed gives the same values on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  /// Independent stream for sample `index` of a named suite.
  static Sampler for_sample(std::uint64_t seed, std::string_view stream, std::uint64_t index);

  std::uint64_t next() { return rng_(); }
  /// Uniform on [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  long between(long lo, long hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// p/q with q uniform on [1, max_den] and p uniform on [0, q].
  Rational unit_rational(long max_den = 24);
  /// Open-interval variant: p uniform on [1, q-1], q >= 2.
  Rational interior_rational(long max_den = 24);
  std::vector<Rational> point(int n, long max_den = 24);
  /// Each coordinate is 0 or 1 (even odds) with probability num/den, else interior.
  std::vector<Rational> point_with_boundary(int n, std::uint64_t num, std::uint64_t den, long max_den = 24);

 private:
  std::mt19937_64 rng_;
};

/// Random bipartite graph on n vertices: random 2-colouring, each bichromatic
/// pair kept with probability 1/2.
Graph random_bipartite(Sampler& s, int n);

}  // namespace hullcert
