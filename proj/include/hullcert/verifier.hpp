#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hullcert/certificate.hpp"
#include "hullcert/graph.hpp"
#include "hullcert/linear_system.hpp"
#include "hullcert/rational.hpp"

namespace hullcert {

/// Relaxation by name: "mccormick", "mccormick-full", "triangle", "split".
/// "split" needs a complete split graph. Throws std::invalid_argument.
LinearSystem relaxation_for(const Graph& g, const std::string& id);

struct RowSlack {
  int row = 0;
  std::string family;
  std::string note;
  Rational slack;
};

/// Every row of sys that the full vector (x then pair values) violates.
std::vector<RowSlack> violated_rows(const LinearSystem& sys, const std::vector<Rational>& values);

struct CertificateCheck {
  bool measures_ok = true;
  std::vector<int> measure_failures;
  Rational edge_sum;
  Rational lb;
  bool lb_covers = false;  // lb >= edge sum
  bool equality = false;
  bool claim_matches = false;  // claimed_lb == edge sum
  /// Family tags of the rows that are tight at the LP optimum, deduplicated.
  std::vector<std::string> tight_families;

  bool ok() const { return measures_ok && lb_covers; }
};

CertificateCheck check_certificate(const Certificate& cert);

struct UpperFailure {
  Edge edge;
  /// Empty when y_ij is unbounded above.
  std::optional<Rational> max;
  Rational bound;
};

struct PreconditionCheck {
  std::vector<UpperFailure> upper_failures;
  /// Rows violated at y_ij = min(x_i,x_j) on edges, max(0, x_i+x_j-1) elsewhere.
  std::vector<RowSlack> min_point_violations;
  bool feasible_at_x = true;

  bool upper_ok() const { return feasible_at_x && upper_failures.empty(); }
  bool min_point_ok() const { return min_point_violations.empty(); }
  bool ok() const { return upper_ok() && min_point_ok(); }
};

PreconditionCheck check_preconditions(const LinearSystem& P, const Graph& g, const std::vector<Rational>& x);

struct ExactnessVerdict {
  bool exact = false;
  Rational lb;
  Rational envelope;
};

ExactnessVerdict exactness_verdict(const LinearSystem& P, const Graph& g, const std::vector<Rational>& x);

struct FiveWheelPoint {
  std::string name;
  std::vector<Rational> x;
  /// Pair values over all pairs of the 6 vertices, in all_pairs order.
  std::vector<Rational> y;
  Rational projection;
  Rational expected_projection;
  std::vector<RowSlack> triangle_violations;
  Rational extra1_slack;
  Rational extra2_slack;
  Rational lb_with_extras;
  Rational envelope;
};

struct FiveWheelReport {
  FiveWheelPoint left;
  FiveWheelPoint right;

  bool ok() const;
};

FiveWheelReport five_wheel_counterexample();

nlohmann::json to_json(const RowSlack& r);
nlohmann::json to_json(const CertificateCheck& c);
nlohmann::json to_json(const PreconditionCheck& c);
nlohmann::json to_json(const ExactnessVerdict& v);
nlohmann::json to_json(const FiveWheelReport& r);

}  // namespace hullcert
