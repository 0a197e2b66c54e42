#include "hullcert/certificate.hpp"

#include <stdexcept>

namespace hullcert {

Rational edge_sum(const Graph& g, const std::vector<IntervalSet>& sets) {
  if (static_cast<int>(sets.size()) != g.n()) throw std::invalid_argument("one set per vertex expected");
  Rational s;
  for (const auto& e : g.edges()) s += overlap(sets[static_cast<size_t>(e.u - 1)], sets[static_cast<size_t>(e.v - 1)]);
  return s;
}

nlohmann::json to_json(const IntervalSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& iv : s.intervals()) out.push_back({iv.lo.str(), iv.hi.str()});
  return out;
}

nlohmann::json to_json(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& s : c.sets) sets.push_back(to_json(s));
  return {{"graph", c.graph.to_json()},
          {"x", to_json(c.x)},
          {"intervals", sets},
          {"claimed_lb", c.claimed_lb.str()},
          {"relaxation", c.relaxation},
          {"metadata", c.metadata}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("rational must be a string or an integer, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

IntervalSet interval_set_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("interval set must be an array of [lo, hi] pairs");
  std::vector<Interval> parts;
  for (const auto& iv : j) {
    if (!iv.is_array() || iv.size() != 2) throw std::invalid_argument("interval must be a [lo, hi] pair");
    parts.push_back({rational_from_json(iv[0]), rational_from_json(iv[1])});
  }
  return IntervalSet::make(std::move(parts));
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c{Graph::from_json(j.at("graph")), rationals_from_json(j.at("x")), {}, 0, j.at("relaxation").get<std::string>()};
  for (const auto& s : j.at("intervals")) c.sets.push_back(interval_set_from_json(s));
  if (static_cast<int>(c.x.size()) != c.graph.n() || static_cast<int>(c.sets.size()) != c.graph.n()) {
    throw std::invalid_argument("certificate needs one x value and one interval set per vertex");
  }
  c.claimed_lb = j.contains("claimed_lb") ? rational_from_json(j.at("claimed_lb")) : edge_sum(c.graph, c.sets);
  if (j.contains("metadata")) c.metadata = j.at("metadata");
  return c;
}

}  // namespace hullcert
