#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hullcert/graph.hpp"
#include "hullcert/rational.hpp"

namespace hullcert {

enum class Relation { le, ge, eq };

std::string to_string(Relation r);

enum class RowFamily {
  mccormick_lb,
  mccormick_ub,
  box,
  triangle,
  clique,
  wheel_extra_1,
  wheel_extra_2,
  // Rows of the wheel z-system.
  z_lower,
  z_upper,
  z_pair_lower,
  z_pair_upper,
};

std::string to_string(RowFamily f);

/// Sparse coefficient list: (variable index, coefficient).
using Terms = std::vector<std::pair<int, Rational>>;

struct SystemRow {
  Terms terms;
  Relation rel = Relation::ge;
  Rational rhs;
  RowFamily family = RowFamily::box;
  /// Human-readable origin, e.g. "clique W={1,2,3} alpha=1".
  std::string note;

  Rational lhs(const std::vector<Rational>& values) const;
  bool satisfied_by(const std::vector<Rational>& values) const;
  /// rhs - lhs for <= rows, lhs - rhs for >= rows (nonnegative iff satisfied);
  /// for equality rows the signed difference lhs - rhs.
  Rational slack(const std::vector<Rational>& values) const;
};

/// Inequality system over x_1..x_nx followed by one variable per declared pair.
///
/// Variable index i-1 is x_i; index nx+p is the pair variable for pairs()[p].
/// The x block may be renamed (the wheel z-system uses "z").
class LinearSystem {
 public:
  LinearSystem(int nx, std::vector<Edge> pairs, std::string x_name = "x");

  int nx() const { return nx_; }
  int num_vars() const { return nx_ + static_cast<int>(pairs_.size()); }
  const std::vector<Edge>& pairs() const { return pairs_; }
  const std::vector<SystemRow>& rows() const { return rows_; }
  const std::string& x_name() const { return x_name_; }

  int x_var(int i) const;
  /// Pair variable index or -1 when {i,j} is not declared.
  int find_pair(int i, int j) const;
  int y_var(int i, int j) const;
  std::string var_name(int v) const;

  /// Validates variable indices; throws std::invalid_argument.
  void add(SystemRow row);
  void append(const LinearSystem& other);

  /// Full variable vector (x then y) with the given pair values.
  std::vector<Rational> assemble(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  std::string render_row(const SystemRow& row) const;
  nlohmann::json to_json() const;

 private:
  int nx_;
  std::vector<Edge> pairs_;
  std::vector<int> pair_lookup_;
  std::string x_name_;
  std::vector<SystemRow> rows_;
};

/// All pairs {i,j} of [n] with i < j.
std::vector<Edge> all_pairs(int n);

LinearSystem mccormick(const Graph& g, bool full);
LinearSystem triangle_relaxation(const Graph& g);
/// y(E*(W)) >= alpha x(W) - C(alpha+1, 2) over the pairs of sys.
SystemRow clique_inequality(const LinearSystem& sys, const std::vector<int>& W, int alpha);
LinearSystem split_relaxation(int n1, int n2);
/// The two extra rows for the odd wheel W_m, as rows over triangle_relaxation(wheel(m)).
std::vector<SystemRow> wheel_extra_inequalities(const LinearSystem& sys, int m);

}  // namespace hullcert
