#include "hullcert/split.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hullcert/envelope.hpp"
#include "hullcert/graph.hpp"
#include "hullcert/linear_system.hpp"
#include "hullcert/lp.hpp"

namespace hullcert {

namespace {

std::vector<int> merge_sets(const std::vector<int>& a, const std::vector<int>& b, int extra) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  out.push_back(extra);
  std::sort(out.begin(), out.end());
  return out;
}

bool pure_sentinel(const SplitState& s, int n) {
  return s.a.back().is_zero() && s.A.back() == std::vector<int>{n + 1};
}

void check_sorted_block(const std::vector<Rational>& x, int from, int to, const char* name) {
  for (int v = from; v <= to; ++v) {
    const Rational& xv = x[static_cast<size_t>(v - 1)];
    if (xv.sign() <= 0 || xv >= 1) throw std::invalid_argument(std::string(name) + " coordinate outside (0,1)");
    if (v > from && xv > x[static_cast<size_t>(v - 2)]) throw std::invalid_argument(std::string(name) + " is not sorted descending");
  }
}

Rational pos(const Rational& r) { return r.sign() > 0 ? r : Rational(0); }

}  // namespace

SplitConstruction construct_split(int n1, int n2, const std::vector<Rational>& x) {
  if (n1 < 1 || n2 < 0) throw std::invalid_argument("construction needs n1 >= 1 and n2 >= 0");
  const int n = n1 + n2;
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("x has the wrong dimension");
  check_sorted_block(x, 1, n1, "V1");
  check_sorted_block(x, n1 + 1, n, "V2");

  SplitConstruction out;
  out.sets.resize(static_cast<size_t>(n));
  auto& st = out.state;
  st.a.push_back(1);
  st.A.emplace_back();
  for (int j = n1 + 1; j <= n; ++j) {
    out.sets[static_cast<size_t>(j - 1)] = IntervalSet::range(0, x[static_cast<size_t>(j - 1)]);
    st.a.push_back(x[static_cast<size_t>(j - 1)]);
    st.A.push_back({j});
  }
  st.a.push_back(0);
  st.A.push_back({n + 1});

  for (int i = 1; i <= n1; ++i) {
    const Rational& xi = x[static_cast<size_t>(i - 1)];
    size_t p = 1;
    while (!(st.a[p] + xi < 1)) ++p;  // the trailing 0 always qualifies
    const Rational& hi = st.a[p - 1];
    const Rational& lo = st.a[p];
    IntervalSet X = IntervalSet::make({{hi, 1}, {lo, lo + hi + xi - 1}});
    if (X.measure() != xi) throw std::logic_error("greedy step produced a set of the wrong measure");
    if (p == 1) {
      st.a[1] += xi;
      st.A[1] = merge_sets(st.A[1], {}, i);
    } else {
      st.a[p - 1] = lo + hi + xi - 1;
      st.A[p - 1] = merge_sets(st.A[p], st.A[p - 1], i);
      st.a.erase(st.a.begin() + static_cast<std::ptrdiff_t>(p));
      st.A.erase(st.A.begin() + static_cast<std::ptrdiff_t>(p));
    }
    if (!pure_sentinel(st, n)) {
      st.a.push_back(0);
      st.A.push_back({n + 1});
    }
    for (size_t k = 1; k < st.a.size(); ++k) {
      if (st.a[k] > st.a[k - 1]) throw std::logic_error("staircase lost monotonicity");
    }
    out.sets[static_cast<size_t>(i - 1)] = X;
    st.trace.push_back({i, static_cast<int>(p), std::move(X), st.a, st.A});
  }
  return out;
}

SDerivation derive_S(const SplitState& state, int n1, int n2, const std::vector<Rational>& x) {
  const int n = n1 + n2;
  auto in_V2 = [&](int v) { return v > n1 && v <= n; };
  auto xv = [&](int v) { return v == n + 1 ? Rational(0) : x[static_cast<size_t>(v - 1)]; };
  const int L = static_cast<int>(state.a.size()) - 1;
  SDerivation d;
  d.j.push_back(0);
  for (int p = 1; p <= L; ++p) {
    const auto& A = state.A[static_cast<size_t>(p)];
    if (std::any_of(A.begin(), A.end(), in_V2)) {
      if (p != d.k + 1) throw std::logic_error("entries meeting V2 do not form a prefix");
      d.k = p;
      d.j.push_back(A.back());
    }
  }
  if (d.k == 0) return d;
  for (int p = 1; p <= L; ++p) {
    if (state.A[static_cast<size_t>(p)].size() > 1) {
      d.p0 = p;
      break;
    }
  }
  const auto& A1 = state.A[1];
  // The sentinel n+1 counts on the V2 side here.
  const auto v2_count = std::count_if(A1.begin(), A1.end(), [&](int v) { return v > n1; });
  const auto v1_count = std::count_if(A1.begin(), A1.end(), [&](int v) { return v <= n1; });
  std::set<int> removed(d.j.begin() + 1, d.j.end());
  if (d.p0) {
    const auto& Ap0 = state.A[static_cast<size_t>(*d.p0)];
    const auto it = std::find_if(Ap0.begin(), Ap0.end(), in_V2);
    if (it != Ap0.end()) d.j_star = *it;
    d.case_tag = (*d.p0 >= 2 || v2_count == v1_count + 1) ? 1 : 2;
  }
  if (d.case_tag == 1 && d.j_star) removed.insert(*d.j_star);
  for (int v = n1 + 1; v <= n; ++v) {
    if (!removed.count(v)) d.S.push_back(v);
  }

  // Sandwich chain, with a_{k+1} read off the staircase (0 for the sentinel).
  auto a = [&](int p) { return p <= L ? state.a[static_cast<size_t>(p)] : Rational(0); };
  const int p0 = d.p0.value_or(d.k + 1);
  for (int p = 1; p <= d.k; ++p) {
    const Rational xj = xv(d.j[static_cast<size_t>(p)]);
    if (p < p0) {
      if (xj != a(p)) d.chain_ok = false;
    } else if (!(a(p + 1) <= xj && xj <= a(p))) {
      d.chain_ok = false;
    }
  }
  if (d.j_star && d.p0 && *d.p0 <= d.k) {
    const Rational xs = xv(*d.j_star);
    d.j_star_bracketed = a(*d.p0) <= xs && xs <= a(*d.p0 - 1);
    if (d.case_tag == 1 && !d.j_star_bracketed) d.chain_ok = false;
  }
  return d;
}

std::vector<int> HeightFunction::distinct_values() const {
  std::vector<int> v = values;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

HeightFunction height(const std::vector<IntervalSet>& sets, const std::vector<int>& members) {
  std::vector<Rational> cuts{0, 1};
  for (int v : members) {
    for (const auto& iv : sets.at(static_cast<size_t>(v - 1)).intervals()) {
      cuts.push_back(iv.lo);
      cuts.push_back(iv.hi);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  HeightFunction h;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational& t = cuts[k];
    int count = 0;
    for (int v : members) count += sets[static_cast<size_t>(v - 1)].contains(t) ? 1 : 0;
    if (!h.values.empty() && h.values.back() == count) continue;
    h.starts.push_back(t);
    h.values.push_back(count);
  }
  return h;
}

SplitChecks check_S_properties(int n1, int n2, const std::vector<Rational>& x, const std::vector<IntervalSet>& sets,
                               const std::vector<int>& S) {
  SplitChecks c;
  const int n = n1 + n2;
  c.size_ok = static_cast<int>(S.size()) <= n1 - 1;
  const std::set<int> in_S(S.begin(), S.end());
  for (int i = 1; i <= n1; ++i) {
    for (int j = n1 + 1; j <= n; ++j) {
      if (in_S.count(j)) continue;
      const Rational want = pos(x[static_cast<size_t>(i - 1)] + x[static_cast<size_t>(j - 1)] - 1);
      if (overlap(sets[static_cast<size_t>(i - 1)], sets[static_cast<size_t>(j - 1)]) != want) {
        c.intersection_failures.push_back({i, j});
      }
    }
  }
  std::vector<int> members(static_cast<size_t>(n1));
  std::iota(members.begin(), members.end(), 1);
  members.insert(members.end(), S.begin(), S.end());
  Rational total;
  for (int v : members) total += x[static_cast<size_t>(v - 1)];
  c.alpha = static_cast<int>(total.floor().get_si());
  c.h = height(sets, members);
  c.height_ok = std::all_of(c.h.values.begin(), c.h.values.end(), [&](int v) { return v == c.alpha || v == c.alpha + 1; });
  return c;
}

Interiorized interiorize(const std::vector<Rational>& x) {
  Interiorized out;
  const auto n = static_cast<long>(x.size());
  std::vector<Rational> pts{0, 1};
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > 1) throw std::invalid_argument("x must lie in [0,1]^n");
    pts.push_back(x[i]);
    pts.push_back(1 - x[i]);
    if (x[i].is_zero()) out.zeros.push_back(static_cast<int>(i + 1));
    if (x[i] == 1) out.ones.push_back(static_cast<int>(i + 1));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Rational gap = 1;
  for (size_t k = 1; k < pts.size(); ++k) gap = std::min(gap, pts[k] - pts[k - 1]);
  out.epsilon = gap / Rational(4 * n * n);
  out.x = x;
  for (int v : out.zeros) out.x[static_cast<size_t>(v - 1)] = out.epsilon;
  for (int v : out.ones) out.x[static_cast<size_t>(v - 1)] = 1 - out.epsilon;
  return out;
}

std::vector<IntervalSet> restore(const Interiorized& info, std::vector<IntervalSet> sets) {
  for (int v : info.zeros) sets.at(static_cast<size_t>(v - 1)) = IntervalSet();
  for (int v : info.ones) sets.at(static_cast<size_t>(v - 1)) = IntervalSet::full();
  return sets;
}

bool SplitResult::ok() const {
  if (!measures_ok || !derivation.chain_ok || !decomposition_ok || !certificate) return false;
  if (construction && !checks.ok()) return false;
  // Perturbed certificates may sit above the bound by up to n(n-1) eps.
  const long n = n1 + n2;
  const Rational tol = boundary == BoundaryMode::perturb ? epsilon * Rational(n * (n - 1)) : Rational(0);
  if (lb && abs(*lb - edge_sum) > tol) return false;
  if (envelope && abs(*envelope - edge_sum) > tol) return false;
  return true;
}

SplitResult split_certificate(int n1, int n2, const std::vector<Rational>& x, const SplitOptions& options) {
  if (n1 < 1 || n2 < 0) throw std::invalid_argument("complete split graph needs n1 >= 1 and n2 >= 0");
  const int n = n1 + n2;
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("x has the wrong dimension");
  SplitResult r;
  r.n1 = n1;
  r.n2 = n2;
  r.x = x;
  r.boundary = options.boundary;

  Interiorized info = interiorize(x);
  r.epsilon = info.epsilon;
  const std::vector<Rational>& work = options.boundary == BoundaryMode::perturb ? info.x : x;
  auto interior = [&](int v) {
    const Rational& xv = work[static_cast<size_t>(v - 1)];
    return xv.sign() > 0 && xv < 1;
  };

  // Sort each side by descending value, ties by caller index.
  auto sorted_side = [&](int from, int to) {
    std::vector<int> vs;
    for (int v = from; v <= to; ++v) {
      if (interior(v)) vs.push_back(v);
    }
    std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) { return work[static_cast<size_t>(a - 1)] > work[static_cast<size_t>(b - 1)]; });
    return vs;
  };
  const auto side1 = sorted_side(1, n1);
  const auto side2 = sorted_side(n1 + 1, n);
  r.inner_n1 = static_cast<int>(side1.size());
  r.inner_n2 = static_cast<int>(side2.size());
  r.order = side1;
  r.order.insert(r.order.end(), side2.begin(), side2.end());
  for (int v : r.order) r.inner_x.push_back(work[static_cast<size_t>(v - 1)]);

  std::vector<IntervalSet> sets(static_cast<size_t>(n));
  if (r.inner_n1 >= 1) {
    r.construction = construct_split(r.inner_n1, r.inner_n2, r.inner_x);
    const auto& inner_sets = r.construction->sets;
    r.derivation = derive_S(r.construction->state, r.inner_n1, r.inner_n2, r.inner_x);
    r.checks = check_S_properties(r.inner_n1, r.inner_n2, r.inner_x, inner_sets, r.derivation.S);
    r.inner_edge_sum = edge_sum(Graph::complete_split(r.inner_n1, r.inner_n2), inner_sets);

    // alpha x(V1 ∪ S) - C(alpha+1, 2) - sum (l-1) x_{s_l} + sum over V1 x (V2 \ S) of max(0, x_i + x_j - 1).
    const std::set<int> in_S(r.derivation.S.begin(), r.derivation.S.end());
    Rational xw;
    for (int v = 1; v <= r.inner_n1; ++v) xw += r.inner_x[static_cast<size_t>(v - 1)];
    for (int v : r.derivation.S) xw += r.inner_x[static_cast<size_t>(v - 1)];
    const int alpha = r.checks.alpha;
    r.decomposition = Rational(alpha) * xw - choose2(alpha + 1);
    for (size_t l = 0; l < r.derivation.S.size(); ++l) {
      r.decomposition -= Rational(static_cast<long>(l)) * r.inner_x[static_cast<size_t>(r.derivation.S[l] - 1)];
    }
    for (int i = 1; i <= r.inner_n1; ++i) {
      for (int j = r.inner_n1 + 1; j <= r.inner_n1 + r.inner_n2; ++j) {
        if (!in_S.count(j)) r.decomposition += pos(r.inner_x[static_cast<size_t>(i - 1)] + r.inner_x[static_cast<size_t>(j - 1)] - 1);
      }
    }
    r.decomposition_ok = r.decomposition == r.inner_edge_sum;
    for (size_t k = 0; k < r.order.size(); ++k) sets[static_cast<size_t>(r.order[k] - 1)] = inner_sets[k];
    for (int v : r.derivation.S) r.S.push_back(r.order[static_cast<size_t>(v - 1)]);
    std::sort(r.S.begin(), r.S.end());
  } else {
    for (int v : side2) sets[static_cast<size_t>(v - 1)] = IntervalSet::range(0, work[static_cast<size_t>(v - 1)]);
  }
  if (options.boundary == BoundaryMode::perturb) {
    sets = restore(info, std::move(sets));
  } else {
    for (int v : info.ones) sets[static_cast<size_t>(v - 1)] = IntervalSet::full();
  }

  const Graph g = Graph::complete_split(n1, n2);
  r.measures_ok = true;
  for (int v = 1; v <= n; ++v) {
    if (sets[static_cast<size_t>(v - 1)].measure() != x[static_cast<size_t>(v - 1)]) r.measures_ok = false;
  }
  r.edge_sum = edge_sum(g, sets);
  Certificate cert{g, x, sets, r.edge_sum, "split"};
  nlohmann::json S = r.S;
  cert.metadata = {{"construction", "complete-split"},
                   {"S", S},
                   {"alpha", r.checks.alpha},
                   {"case", r.derivation.case_tag},
                   {"boundary", options.boundary == BoundaryMode::reduce ? "reduce" : "perturb"}};
  r.certificate = std::move(cert);
  if (options.post_verify) {
    r.lb = lb(split_relaxation(n1, n2), g, x);
    r.envelope = envelope_value(g, x);
  }
  return r;
}

nlohmann::json to_json(const SplitResult& r) {
  nlohmann::json j;
  j["n1"] = r.n1;
  j["n2"] = r.n2;
  j["x"] = to_json(r.x);
  j["boundary"] = r.boundary == BoundaryMode::reduce ? "reduce" : "perturb";
  if (r.boundary == BoundaryMode::perturb) j["epsilon"] = r.epsilon.str();
  j["order"] = r.order;
  if (r.construction) {
    nlohmann::json a_trace = nlohmann::json::array(), A_trace = nlohmann::json::array(), p_trace = nlohmann::json::array();
    for (const auto& step : r.construction->state.trace) {
      a_trace.push_back(to_json(step.a));
      nlohmann::json As = nlohmann::json::array();
      for (size_t k = 1; k < step.A.size(); ++k) As.push_back(step.A[k]);
      A_trace.push_back(As);
      p_trace.push_back(step.p);
    }
    j["a_trace"] = a_trace;
    j["A_trace"] = A_trace;
    j["p_trace"] = p_trace;
    j["case"] = r.derivation.case_tag;
    j["k"] = r.derivation.k;
    j["alpha"] = r.checks.alpha;
    nlohmann::json h = nlohmann::json::array();
    for (size_t k = 0; k < r.checks.h.values.size(); ++k) h.push_back({r.checks.h.starts[k].str(), r.checks.h.values[k]});
    j["h"] = h;
    j["checks"] = {{"size", r.checks.size_ok},
                   {"small_intersections", r.checks.intersection_failures.empty()},
                   {"height", r.checks.height_ok},
                   {"chain", r.derivation.chain_ok},
                   {"j_star_bracketed", r.derivation.j_star_bracketed},
                   {"decomposition", r.decomposition_ok}};
    j["decomposition"] = r.decomposition.str();
  }
  j["S"] = r.S;
  j["measures_ok"] = r.measures_ok;
  j["edge_sum"] = r.edge_sum.str();
  if (r.certificate) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& s : r.certificate->sets) sets.push_back(to_json(s));
    j["intervals"] = sets;
  }
  if (r.lb) j["lb"] = r.lb->str();
  if (r.envelope) j["envelope"] = r.envelope->str();
  j["ok"] = r.ok();
  return j;
}

}  // namespace hullcert
