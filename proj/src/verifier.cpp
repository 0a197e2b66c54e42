#include "hullcert/verifier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hullcert/envelope.hpp"
#include "hullcert/lp.hpp"

namespace hullcert {

namespace {

Rational pos(const Rational& r) { return r.sign() > 0 ? r : Rational(0); }

bool row_holds(const SystemRow& row, const std::vector<Rational>& values) {
  const Rational s = row.slack(values);
  return row.rel == Relation::eq ? s.is_zero() : s.sign() >= 0;
}

}  // namespace

LinearSystem relaxation_for(const Graph& g, const std::string& id) {
  if (id == "mccormick") return mccormick(g, false);
  if (id == "mccormick-full") return mccormick(g, true);
  if (id == "triangle") return triangle_relaxation(g);
  if (id == "split") {
    if (g.family() != Family::complete_split) throw std::invalid_argument("split relaxation needs a complete split graph");
    return split_relaxation(g.params()[0], g.params()[1]);
  }
  throw std::invalid_argument("unknown relaxation '" + id + "'");
}

std::vector<RowSlack> violated_rows(const LinearSystem& sys, const std::vector<Rational>& values) {
  std::vector<RowSlack> out;
  for (size_t r = 0; r < sys.rows().size(); ++r) {
    const auto& row = sys.rows()[r];
    if (row_holds(row, values)) continue;
    out.push_back({static_cast<int>(r), to_string(row.family), row.note, row.slack(values)});
  }
  return out;
}

CertificateCheck check_certificate(const Certificate& cert) {
  const Graph& g = cert.graph;
  if (static_cast<int>(cert.x.size()) != g.n() || static_cast<int>(cert.sets.size()) != g.n()) {
    throw std::invalid_argument("certificate dimensions do not match the graph");
  }
  CertificateCheck c;
  for (int v = 1; v <= g.n(); ++v) {
    if (cert.sets[static_cast<size_t>(v - 1)].measure() != cert.x[static_cast<size_t>(v - 1)]) {
      c.measures_ok = false;
      c.measure_failures.push_back(v);
    }
  }
  c.edge_sum = edge_sum(g, cert.sets);
  c.claim_matches = cert.claimed_lb == c.edge_sum;
  const LinearSystem sys = relaxation_for(g, cert.relaxation);
  const FixedXResult res = lower_bound(sys, g, cert.x);
  c.lb = res.value;
  c.lb_covers = c.lb >= c.edge_sum;
  c.equality = c.lb == c.edge_sum;
  std::set<std::string> fams;
  for (int r : res.tight_rows) fams.insert(to_string(sys.rows()[static_cast<size_t>(r)].family));
  c.tight_families.assign(fams.begin(), fams.end());
  return c;
}

PreconditionCheck check_preconditions(const LinearSystem& P, const Graph& g, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != P.nx() || P.nx() != g.n()) throw std::invalid_argument("x, system and graph sizes differ");
  PreconditionCheck c;
  for (const auto& e : g.edges()) {
    const int p = P.find_pair(e.u, e.v);
    if (p < 0) throw std::invalid_argument("edge without a pair variable in the system");
    const Rational bound = std::min(x[static_cast<size_t>(e.u - 1)], x[static_cast<size_t>(e.v - 1)]);
    const FixedXResult res = optimize_at(P, x, {{p, 1}}, Sense::maximize);
    if (res.status == LPStatus::infeasible) {
      c.feasible_at_x = false;
      break;
    }
    if (res.status == LPStatus::unbounded) {
      c.upper_failures.push_back({e, std::nullopt, bound});
    } else if (res.value > bound) {
      c.upper_failures.push_back({e, res.value, bound});
    }
  }
  std::vector<Rational> y;
  for (const auto& e : P.pairs()) {
    const Rational& xi = x[static_cast<size_t>(e.u - 1)];
    const Rational& xj = x[static_cast<size_t>(e.v - 1)];
    y.push_back(g.has_edge(e.u, e.v) ? std::min(xi, xj) : pos(xi + xj - 1));
  }
  c.min_point_violations = violated_rows(P, P.assemble(x, y));
  return c;
}

ExactnessVerdict exactness_verdict(const LinearSystem& P, const Graph& g, const std::vector<Rational>& x) {
  ExactnessVerdict v;
  v.lb = lb(P, g, x);
  v.envelope = envelope_value(g, x);
  v.exact = v.lb == v.envelope;
  return v;
}

namespace {

FiveWheelPoint wheel_point(const std::string& name, const Rational& rim_x, const Rational& hub_x, const Rational& spoke_y,
                           const Rational& rim_y, const Rational& chord_y, const Rational& expected) {
  const int m = 5;
  const Graph g = Graph::wheel(m);
  FiveWheelPoint p;
  p.name = name;
  p.x.assign(static_cast<size_t>(m), rim_x);
  p.x.push_back(hub_x);
  for (const auto& e : all_pairs(g.n())) {
    if (e.v == g.hub()) {
      p.y.push_back(spoke_y);
    } else if (g.has_edge(e.u, e.v)) {
      p.y.push_back(rim_y);
    } else {
      p.y.push_back(chord_y);
    }
  }
  p.expected_projection = expected;

  LinearSystem sys = triangle_relaxation(g);
  std::vector<Rational> edge_y;
  for (const auto& e : sys.pairs()) edge_y.push_back(e.v == g.hub() ? spoke_y : rim_y);
  for (const auto& v : edge_y) p.projection += v;
  const auto values = sys.assemble(p.x, edge_y);
  p.triangle_violations = violated_rows(sys, values);
  const auto extras = wheel_extra_inequalities(sys, m);
  p.extra1_slack = extras[0].slack(values);
  p.extra2_slack = extras[1].slack(values);
  for (const auto& row : extras) sys.add(row);
  p.lb_with_extras = lb(sys, g, p.x);
  p.envelope = envelope_value(g, p.x);
  return p;
}

}  // namespace

bool FiveWheelReport::ok() const {
  const Rational sixth(1, 6);
  auto common = [](const FiveWheelPoint& p) {
    return p.projection == p.expected_projection && p.triangle_violations.empty() && p.lb_with_extras == p.envelope;
  };
  return common(left) && common(right) && left.extra1_slack == -sixth && left.extra2_slack.sign() >= 0 &&
         right.extra2_slack == -sixth && right.extra1_slack.sign() >= 0;
}

FiveWheelReport five_wheel_counterexample() {
  FiveWheelReport r;
  r.left = wheel_point("left", Rational(1, 3), Rational(2, 3), Rational(1, 6), 0, Rational(1, 6), Rational(5, 6));
  r.right = wheel_point("right", Rational(2, 3), Rational(1, 3), Rational(1, 6), Rational(1, 3), Rational(1, 2),
                        Rational(5, 2));
  return r;
}

nlohmann::json to_json(const RowSlack& r) {
  return {{"row", r.row}, {"family", r.family}, {"note", r.note}, {"slack", r.slack.str()}};
}

namespace {

nlohmann::json slack_list(const std::vector<RowSlack>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

}  // namespace

nlohmann::json to_json(const CertificateCheck& c) {
  return {{"measures_ok", c.measures_ok},
          {"measure_failures", c.measure_failures},
          {"edge_sum", c.edge_sum.str()},
          {"lb", c.lb.str()},
          {"lb_covers", c.lb_covers},
          {"equality", c.equality},
          {"claim_matches", c.claim_matches},
          {"tight_families", c.tight_families},
          {"ok", c.ok()}};
}

nlohmann::json to_json(const PreconditionCheck& c) {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : c.upper_failures) {
    fails.push_back({{"edge", {f.edge.u, f.edge.v}},
                     {"max", f.max ? nlohmann::json(f.max->str()) : nlohmann::json("unbounded")},
                     {"bound", f.bound.str()}});
  }
  return {{"feasible_at_x", c.feasible_at_x},
          {"upper_ok", c.upper_ok()},
          {"upper_failures", fails},
          {"min_point_ok", c.min_point_ok()},
          {"min_point_violations", slack_list(c.min_point_violations)},
          {"ok", c.ok()}};
}

nlohmann::json to_json(const ExactnessVerdict& v) {
  nlohmann::json j{{"lb", v.lb.str()}, {"envelope", v.envelope.str()}};
  j["verdict"] = v.exact ? "exact_at_x" : "gap";
  if (!v.exact) j["gap"] = (v.envelope - v.lb).str();
  return j;
}

nlohmann::json to_json(const FiveWheelReport& r) {
  auto point = [](const FiveWheelPoint& p) {
    return nlohmann::json{{"x", to_json(p.x)},
                          {"y_all_pairs", to_json(p.y)},
                          {"projection", p.projection.str()},
                          {"expected_projection", p.expected_projection.str()},
                          {"triangle_violations", slack_list(p.triangle_violations)},
                          {"extra1_slack", p.extra1_slack.str()},
                          {"extra2_slack", p.extra2_slack.str()},
                          {"lb_with_extras", p.lb_with_extras.str()},
                          {"envelope", p.envelope.str()}};
  };
  return {{"left", point(r.left)}, {"right", point(r.right)}, {"ok", r.ok()}};
}

}  // namespace hullcert
