#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hullcert/certificate.hpp"
#include "hullcert/interval_set.hpp"
#include "hullcert/linear_system.hpp"
#include "hullcert/rational.hpp"

namespace hullcert {

// Points on the wheel W_m are vectors of length m+1: x[i-1] is rim vertex i,
// x[m] is the hub. Rim-indexed arrays below are 1-based with slot 0 unused.

/// Rim size of a wheel point; throws when x.size() < 4.
int wheel_rim(const std::vector<Rational>& x);

struct WheelBounds {
  std::vector<Rational> m, M, mp, Mp;
};

WheelBounds wheel_bounds(const std::vector<Rational>& x);

/// x_i + x_{i+1} + x_n for rim pair i.
Rational triple_sum(const std::vector<Rational>& x, int i);

bool cyclically_independent(const std::vector<int>& T, int m);

/// Direct three-sum evaluation. Throws std::invalid_argument if T has neighbours.
Rational phi(const std::vector<Rational>& x, const std::vector<int>& T);

/// phi(T) = base + sum_{i in T} weight_i.
struct PhiDecomposition {
  Rational base;                // sum A_i + sum B_i
  std::vector<Rational> weight;  // C_i - A_i - B_i - B_{i+1}
};
PhiDecomposition phi_decomposition(const std::vector<Rational>& x);

/// Phi*: the maximum of phi over cyclically independent T (cycle DP).
Rational phi_star(const std::vector<Rational>& x);

/// Lexicographically smallest maximizer of phi before any normalization.
std::vector<int> lex_optimal_T(const std::vector<Rational>& x);

/// Drop pairs with triple sum < 1, then add free pairs with triple sum in
/// [1,2] in ascending order, until nothing changes. phi never decreases;
/// a violation throws std::logic_error.
std::vector<int> normalize_T(const std::vector<Rational>& x, std::vector<int> T);

struct TSelection {
  std::vector<int> T;
  Rational phi;
  bool normalized = false;
};

/// Independence, phi(T) = phi_star, triple sums in [1,2] on T, maximality.
bool is_normalized(const std::vector<Rational>& x, const std::vector<int>& T);

TSelection optimal_T(const std::vector<Rational>& x);

/// The z-system for a normalized selection; throws if T is not normalized.
LinearSystem z_system(const std::vector<Rational>& x, const TSelection& sel);
/// Same rows for any independent T (used to probe suboptimal selections).
LinearSystem z_system_unchecked(const std::vector<Rational>& x, const std::vector<int>& T);

/// X_n = [0,x_n), odd i: [x_n, x_n+z_i) ∪ [0, x_i-z_i), even i: [1-z_i, 1) ∪ [x_n-x_i+z_i, x_n).
/// Throws std::invalid_argument when z violates the z-system or m is odd.
std::vector<IntervalSet> build_intervals_wheel(const std::vector<Rational>& x, const std::vector<int>& T,
                                               const std::vector<Rational>& z);

struct WheelTargetReport {
  bool measures_ok = true;
  Rational edge_sum;
  Rational phi;
  bool sum_equals_phi = false;
  std::vector<int> triangle_failures;  // i in T
  std::vector<int> rim_failures;       // i not in T
  std::vector<int> spoke_failures;     // i not in T ∪ (T+1)
  bool ok() const {
    return measures_ok && sum_equals_phi && triangle_failures.empty() && rim_failures.empty() && spoke_failures.empty();
  }
};

WheelTargetReport verify_eq_target(const std::vector<Rational>& x, const std::vector<int>& T,
                                   const std::vector<IntervalSet>& sets);

enum class ArcKind { pi_plus, pi_minus, sigma_plus, sigma_minus };

struct Arc {
  int from = 0;  // node 0 is O, rim nodes are 1..m
  int to = 0;
  Rational cost;
  ArcKind kind = ArcKind::pi_plus;
  int index = 0;      // the i of the multiplier
  std::string label;  // symbolic cost such as "-M'_3"
};

struct FlowNetwork {
  int m = 0;
  std::vector<Arc> arcs;
};

/// Arc costs follow the parity and membership case tables. Requires even m.
FlowNetwork build_network(const std::vector<Rational>& x, const std::vector<int>& T);

struct CycleReport {
  bool negative = false;
  std::vector<int> arcs;  // indices into FlowNetwork::arcs, in cycle order
  Rational cost;
};

/// Bellman–Ford from a virtual source over all nodes.
CycleReport find_negative_cycle(const FlowNetwork& net);
/// A negative cycle with the fewest arcs (exact-length walk DP).
CycleReport shortest_negative_cycle(const FlowNetwork& net);

/// Reflection i -> -i (mod m) of a wheel point; the hub stays.
std::vector<Rational> reflect_point(const std::vector<Rational>& x);
/// Image of T under the reflection (pair i goes to pair r(i+1)).
std::vector<int> reflect_T(const std::vector<int>& T, int m);

/// The selection derived from a shortest negative cycle: the full forward rim
/// cycle swaps to the even pairs with triple sum in [1,2]; a path
/// O, i, ..., j+1, O swaps T on [i,j] the same way. Backward cycles are
/// handled by reflecting. Returns nullopt if the cycle has another shape or
/// the result is not independent.
std::optional<std::vector<int>> improved_T(const std::vector<Rational>& x, const std::vector<int>& T,
                                           const FlowNetwork& net, const CycleReport& cycle);

struct WheelOptions {
  /// Also compute lb(T(W)) and the envelope value.
  bool post_verify = true;
};

struct WheelResult {
  std::vector<Rational> x;
  TSelection selection;
  Rational phi_star;
  bool z_feasible = false;
  std::vector<Rational> z;
  std::vector<Rational> z_witness;
  CycleReport cycle;
  WheelTargetReport target;
  std::optional<Certificate> certificate;
  std::optional<Rational> lb;
  std::optional<Rational> envelope;
  /// Phi* = edge sum = lb = envelope, plus every structural check.
  bool ok() const;
};

/// The full even-wheel pipeline. Throws std::invalid_argument for odd m.
WheelResult wheel_certificate(const std::vector<Rational>& x, const WheelOptions& options = {});

nlohmann::json to_json(const WheelResult& r);

}  // namespace hullcert
