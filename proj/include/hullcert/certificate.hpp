#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hullcert/graph.hpp"
#include "hullcert/interval_set.hpp"
#include "hullcert/rational.hpp"

namespace hullcert {

/// Sets X_1..X_n with the lower bound they are meant to witness.
struct Certificate {
  Graph graph;
  std::vector<Rational> x;
  std::vector<IntervalSet> sets;  // sets[i-1] is X_i
  Rational claimed_lb;
  /// Which relaxation the bound refers to: "triangle", "split", ...
  std::string relaxation;
  nlohmann::json metadata = nlohmann::json::object();
};

/// sum over edges of mu(X_i ∩ X_j).
Rational edge_sum(const Graph& g, const std::vector<IntervalSet>& sets);

nlohmann::json to_json(const IntervalSet& s);
nlohmann::json to_json(const std::vector<Rational>& v);
nlohmann::json to_json(const Certificate& c);

/// Inverse of the to_json functions. Entries may be "p/q" strings or integers.
/// Throws std::invalid_argument (or nlohmann::json errors) on malformed input.
Rational rational_from_json(const nlohmann::json& j);
std::vector<Rational> rationals_from_json(const nlohmann::json& j);
IntervalSet interval_set_from_json(const nlohmann::json& j);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace hullcert
