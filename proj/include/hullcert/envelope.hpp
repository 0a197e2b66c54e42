#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hullcert/graph.hpp"
#include "hullcert/rational.hpp"

namespace hullcert {

/// Number of edges with both endpoints set in the 0/1 vector v (v[i-1] is vertex i).
Rational f_value(const Graph& g, const std::vector<int>& v);
/// sum over edges of x_i x_j at a fractional point.
Rational f_at(const Graph& g, const std::vector<Rational>& x);

struct EnvelopeOptions {
  int max_n = 16;
  bool override_guard = false;
};

struct EnvelopeResult {
  Rational value;
  /// Hypercube vertices (bit i-1 is vertex i) with their positive weights.
  std::vector<std::pair<std::uint64_t, Rational>> support;
};

/// Lower convex envelope of f at x: the LP over the hypercube vertices.
/// Vertices that disagree with a 0/1 coordinate of x are pruned up front.
/// Throws std::invalid_argument beyond the size guard.
EnvelopeResult envelope(const Graph& g, const std::vector<Rational>& x, const EnvelopeOptions& options = {});
Rational envelope_value(const Graph& g, const std::vector<Rational>& x, const EnvelopeOptions& options = {});

/// sum over edges of min(x_i, x_j).
Rational upper_boundary(const Graph& g, const std::vector<Rational>& x);

}  // namespace hullcert
