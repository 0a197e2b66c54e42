#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "hullcert/certificate.hpp"
#include "hullcert/interval_set.hpp"
#include "hullcert/rational.hpp"

namespace hullcert {

// Complete split graphs: clique V1 = 1..n1, independent set V2 = n1+1..n1+n2.

struct SplitStep {
  int vertex = 0;
  int p = 0;
  IntervalSet X;
  std::vector<Rational> a;             // a_0..a_L after the step
  std::vector<std::vector<int>> A;     // A_1..A_L after the step (index 0 unused)
};

/// Staircase state of the greedy construction. a[0] = 1; entries 1..L are
/// live. The last entry is always the sentinel (0, {n+1}); a fresh sentinel
/// is appended whenever a step absorbs the previous one.
struct SplitState {
  std::vector<Rational> a;
  std::vector<std::vector<int>> A;
  std::vector<SplitStep> trace;
};

struct SplitConstruction {
  std::vector<IntervalSet> sets;  // sets[v-1] is X_v
  SplitState state;
};

/// Greedy construction on sorted interior input:
/// 1 > x_1 >= ... >= x_n1 > 0 and 1 > x_{n1+1} >= ... >= x_n > 0.
/// Throws std::invalid_argument on a precondition violation.
SplitConstruction construct_split(int n1, int n2, const std::vector<Rational>& x);

struct SDerivation {
  int k = 0;
  std::vector<int> j;  // j[1..k], slot 0 unused
  std::optional<int> p0;
  std::optional<int> j_star;
  std::vector<int> S;
  int case_tag = 2;
  /// The sandwich chain between the a values and the x_{j_p}, including the
  /// a_{p0} <= x_{j*} <= a_{p0-1} link whenever j* is left out of S.
  bool chain_ok = true;
  /// The j* link on its own. It can fail when j* stays in S (x = (0.7, 0.5, 0.2), n1 = 2).
  bool j_star_bracketed = true;
};

SDerivation derive_S(const SplitState& state, int n1, int n2, const std::vector<Rational>& x);

/// Step function t -> |{i in members : t in X_i}| on [0,1).
struct HeightFunction {
  std::vector<Rational> starts;  // starts[0] = 0; the rest are breakpoints
  std::vector<int> values;       // value on [starts[k], starts[k+1])
  std::vector<int> distinct_values() const;
};

HeightFunction height(const std::vector<IntervalSet>& sets, const std::vector<int>& members);

struct SplitChecks {
  bool size_ok = false;
  std::vector<std::pair<int, int>> intersection_failures;
  int alpha = 0;
  HeightFunction h;
  bool height_ok = false;
  bool ok() const { return size_ok && intersection_failures.empty() && height_ok; }
};

SplitChecks check_S_properties(int n1, int n2, const std::vector<Rational>& x, const std::vector<IntervalSet>& sets,
                               const std::vector<int>& S);

/// 0 -> eps, 1 -> 1-eps with eps = (smallest positive gap among {0, 1, x_i, 1-x_i}) / (4 n^2).
struct Interiorized {
  std::vector<Rational> x;
  Rational epsilon;
  std::vector<int> zeros;  // vertices with x = 0
  std::vector<int> ones;   // vertices with x = 1
};

Interiorized interiorize(const std::vector<Rational>& x);
/// Replaces X_i by ∅ on the zero vertices and by [0,1) on the one vertices.
std::vector<IntervalSet> restore(const Interiorized& info, std::vector<IntervalSet> sets);

enum class BoundaryMode {
  /// Drop 0/1 coordinates, build on the interior complete split graph, then
  /// give 0-vertices ∅ and 1-vertices [0,1).
  reduce,
  /// Move 0/1 coordinates inward by eps, build, then restore.
  perturb,
};

struct SplitOptions {
  BoundaryMode boundary = BoundaryMode::reduce;
  bool post_verify = true;
};

struct SplitResult {
  int n1 = 0;
  int n2 = 0;
  std::vector<Rational> x;
  BoundaryMode boundary = BoundaryMode::reduce;
  Rational epsilon;

  // The instance the greedy construction ran on, in sorted order.
  int inner_n1 = 0;
  int inner_n2 = 0;
  std::vector<int> order;  // order[k] = caller vertex at sorted position k+1
  std::vector<Rational> inner_x;
  std::optional<SplitConstruction> construction;
  SDerivation derivation;
  SplitChecks checks;
  Rational inner_edge_sum;
  Rational decomposition;
  bool decomposition_ok = true;

  std::vector<int> S;  // caller coordinates
  std::optional<Certificate> certificate;
  Rational edge_sum;
  bool measures_ok = false;
  std::optional<Rational> lb;
  std::optional<Rational> envelope;

  /// In perturb mode lb and the envelope need only match the edge sum to within n(n-1) eps.
  bool ok() const;
};

SplitResult split_certificate(int n1, int n2, const std::vector<Rational>& x, const SplitOptions& options = {});

nlohmann::json to_json(const SplitResult& r);

}  // namespace hullcert
