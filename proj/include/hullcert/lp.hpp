#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hullcert/graph.hpp"
#include "hullcert/linear_system.hpp"
#include "hullcert/rational.hpp"

namespace hullcert {

enum class Domain { nonneg, free };
enum class Sense { minimize, maximize };
enum class LPStatus { optimal, infeasible, unbounded };

std::string to_string(LPStatus s);

struct LPRow {
  Terms terms;
  Relation rel = Relation::le;
  Rational rhs;
};

struct LPProblem {
  int nvars = 0;
  std::vector<Domain> domain;  // one per variable
  Sense sense = Sense::minimize;
  std::vector<Rational> objective;  // dense, one per variable
  std::vector<LPRow> rows;
};

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  std::vector<Rational> point;
  /// Rows with zero slack at the returned point.
  std::vector<int> tight_rows;
  /// When infeasible: one multiplier per row. Inequality rows are taken in <=
  /// orientation with nonnegative weights, equality rows as written with any
  /// sign; the combination has rhs -1 and a left side that no admissible point
  /// can make negative.
  std::vector<Rational> farkas;
  long pivots = 0;
};

struct SolveOptions {
  /// Text trace of every pivot, for debugging.
  std::ostream* trace = nullptr;
};

/// Two-phase primal simplex over exact rationals with Bland's rule.
///
/// Single-variable rows are presolved down to the tightest bound on each side.
/// An optimal point is re-substituted into every row before it is returned;
/// a failure there throws std::logic_error.
LPResult solve(const LPProblem& problem, const SolveOptions& options = {});

bool satisfies(const LPProblem& problem, const std::vector<Rational>& point);
bool is_farkas_witness(const LPProblem& problem, const std::vector<Rational>& w);

/// Optimize a linear function of the pair variables with x fixed.
struct FixedXResult {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  std::vector<Rational> y;  // one per declared pair
  /// Indices into sys.rows() with zero slack at (x, y).
  std::vector<int> tight_rows;
  /// Infeasible: indices of rows that are violated by x alone (no pair terms).
  std::vector<int> violated_constant_rows;
  long pivots = 0;
};

FixedXResult optimize_at(const LinearSystem& sys, const std::vector<Rational>& x,
                         const std::vector<std::pair<int, Rational>>& pair_objective, Sense sense);

/// min sum_{ij in E} y_ij over sys at x. Throws std::runtime_error when the
/// system is infeasible at x.
FixedXResult lower_bound(const LinearSystem& sys, const Graph& g, const std::vector<Rational>& x);
Rational lb(const LinearSystem& sys, const Graph& g, const std::vector<Rational>& x);

struct Feasibility {
  bool feasible = false;
  std::vector<Rational> point;
  /// Per row of the system, see LPResult::farkas.
  std::vector<Rational> witness;
};

/// Phase-1 feasibility for a system whose variables are all free.
Feasibility feasible_point(const LinearSystem& sys);

/// The LP that feasible_point solves, exposed so witnesses can be re-checked.
LPProblem free_problem(const LinearSystem& sys);

}  // namespace hullcert
