#include "hullcert/sampling.hpp"

#include <limits>
#include <stdexcept>

namespace hullcert {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a.
std::uint64_t hash_name(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Sampler Sampler::for_sample(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  return Sampler(splitmix(splitmix(seed) ^ hash_name(stream)) ^ splitmix(index + 1));
}

std::uint64_t Sampler::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = rng_();
  } while (v >= limit);
  return v % n;
}

long Sampler::between(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Sampler::unit_rational(long max_den) {
  const long q = between(1, max_den);
  return Rational(between(0, q), q);
}

Rational Sampler::interior_rational(long max_den) {
  if (max_den < 2) throw std::invalid_argument("interior rationals need max_den >= 2");
  const long q = between(2, max_den);
  return Rational(between(1, q - 1), q);
}

std::vector<Rational> Sampler::point(int n, long max_den) {
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) x.push_back(unit_rational(max_den));
  return x;
}

std::vector<Rational> Sampler::point_with_boundary(int n, std::uint64_t num, std::uint64_t den, long max_den) {
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) {
    if (chance(num, den)) {
      x.push_back(Rational(static_cast<long>(below(2))));
    } else {
      x.push_back(interior_rational(max_den));
    }
  }
  return x;
}

Graph random_bipartite(Sampler& s, int n) {
  std::vector<int> colour(static_cast<size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) colour[static_cast<size_t>(v)] = static_cast<int>(s.below(2));
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (colour[static_cast<size_t>(u)] != colour[static_cast<size_t>(v)] && s.chance(1, 2)) edges.push_back({u, v});
    }
  }
  return Graph::generic(n, std::move(edges));
}

}  // namespace hullcert
