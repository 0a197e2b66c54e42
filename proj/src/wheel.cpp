#include "hullcert/wheel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hullcert/envelope.hpp"
#include "hullcert/graph.hpp"
#include "hullcert/lp.hpp"

namespace hullcert {

namespace {

const Rational& at(const std::vector<Rational>& x, int i) { return x[static_cast<size_t>(i - 1)]; }

Rational pos(const Rational& r) { return r.sign() > 0 ? r : Rational(0); }

bool contains(const std::vector<int>& T, int i) { return std::find(T.begin(), T.end(), i) != T.end(); }

void check_T(const std::vector<int>& T, int m) {
  for (int i : T) {
    if (i < 1 || i > m) throw std::invalid_argument("T element " + std::to_string(i) + " outside the rim");
  }
  if (!cyclically_independent(T, m)) throw std::invalid_argument("T contains cyclic neighbours");
}

// Forced state per rim pair for the constrained cycle DP.
enum class Force : char { any, in, out };

// Maximum of sum_{i in T} w_i over independent T respecting the forced states.
std::optional<Rational> cycle_best(const std::vector<Rational>& w, const std::vector<Force>& force, int m) {
  std::optional<Rational> best;
  for (int first = 0; first <= 1; ++first) {
    if (first == 1 && force[1] == Force::out) continue;
    if (first == 0 && force[1] == Force::in) continue;
    std::optional<Rational> in = first ? std::optional<Rational>(w[1]) : std::nullopt;
    std::optional<Rational> out = first ? std::nullopt : std::optional<Rational>(Rational(0));
    for (int i = 2; i <= m; ++i) {
      std::optional<Rational> nin, nout;
      if (force[static_cast<size_t>(i)] != Force::out && out && !(i == m && first)) nin = *out + w[static_cast<size_t>(i)];
      if (force[static_cast<size_t>(i)] != Force::in) {
        if (in && out) nout = std::max(*in, *out);
        else if (in) nout = in;
        else nout = out;
      }
      in = std::move(nin);
      out = std::move(nout);
    }
    for (const auto* c : {&in, &out}) {
      if (*c && (!best || **c > *best)) best = **c;
    }
  }
  return best;
}

}  // namespace

int wheel_rim(const std::vector<Rational>& x) {
  if (x.size() < 4) throw std::invalid_argument("a wheel point needs at least 3 rim coordinates and a hub");
  for (const auto& xi : x) {
    if (xi < 0 || xi > 1) throw std::invalid_argument("x must lie in [0,1]^n");
  }
  return static_cast<int>(x.size()) - 1;
}

WheelBounds wheel_bounds(const std::vector<Rational>& x) {
  const int m = wheel_rim(x);
  const Rational& xn = x.back();
  WheelBounds b;
  b.m.resize(static_cast<size_t>(m + 1));
  b.M.resize(static_cast<size_t>(m + 1));
  b.mp.resize(static_cast<size_t>(m + 1));
  b.Mp.resize(static_cast<size_t>(m + 1));
  for (int i = 1; i <= m; ++i) {
    const Rational& xi = at(x, i);
    const Rational pair = xi + at(x, cyclic_next(i, m));
    b.m[static_cast<size_t>(i)] = std::max(Rational(0), xi - xn);
    b.M[static_cast<size_t>(i)] = std::min(xi, 1 - xn);
    b.mp[static_cast<size_t>(i)] = std::min(Rational(1), pair) - xn;
    b.Mp[static_cast<size_t>(i)] = std::max(Rational(1), pair) - xn;
  }
  return b;
}

Rational triple_sum(const std::vector<Rational>& x, int i) {
  const int m = static_cast<int>(x.size()) - 1;
  return at(x, i) + at(x, cyclic_next(i, m)) + x.back();
}

bool cyclically_independent(const std::vector<int>& T, int m) {
  std::set<int> s(T.begin(), T.end());
  if (s.size() != T.size()) return false;
  return std::none_of(T.begin(), T.end(), [&](int i) { return s.count(cyclic_next(i, m)) > 0; });
}

Rational phi(const std::vector<Rational>& x, const std::vector<int>& T) {
  const int m = wheel_rim(x);
  check_T(T, m);
  const Rational& xn = x.back();
  Rational total;
  for (int i = 1; i <= m; ++i) {
    const int j = cyclic_next(i, m);
    const bool in_T = contains(T, i);
    const bool in_T1 = contains(T, cyclic_prev(i, m));
    if (!in_T) total += pos(at(x, i) + at(x, j) - 1);
    if (!in_T && !in_T1) total += pos(at(x, i) + xn - 1);
    if (in_T) total += pos(at(x, i) + at(x, j) + xn - 1);
  }
  return total;
}

PhiDecomposition phi_decomposition(const std::vector<Rational>& x) {
  const int m = wheel_rim(x);
  const Rational& xn = x.back();
  PhiDecomposition d;
  d.weight.resize(static_cast<size_t>(m + 1));
  for (int i = 1; i <= m; ++i) {
    const int j = cyclic_next(i, m);
    const Rational A = pos(at(x, i) + at(x, j) - 1);
    const Rational Bi = pos(at(x, i) + xn - 1);
    const Rational Bj = pos(at(x, j) + xn - 1);
    const Rational C = pos(at(x, i) + at(x, j) + xn - 1);
    d.base += A + Bi;
    d.weight[static_cast<size_t>(i)] = C - A - Bi - Bj;
  }
  return d;
}

Rational phi_star(const std::vector<Rational>& x) {
  const int m = wheel_rim(x);
  const auto d = phi_decomposition(x);
  return d.base + *cycle_best(d.weight, std::vector<Force>(static_cast<size_t>(m + 1), Force::any), m);
}

std::vector<int> lex_optimal_T(const std::vector<Rational>& x) {
  const int m = wheel_rim(x);
  const auto d = phi_decomposition(x);
  std::vector<Force> force(static_cast<size_t>(m + 1), Force::any);
  const Rational best = *cycle_best(d.weight, force, m);
  std::vector<int> T;
  int i = 1;
  while (i <= m) {
    auto stop = force;
    for (int k = i; k <= m; ++k) stop[static_cast<size_t>(k)] = Force::out;
    if (auto v = cycle_best(d.weight, stop, m); v && *v == best) break;
    bool placed = false;
    for (int j = i; j <= m && !placed; ++j) {
      auto trial = force;
      for (int k = i; k < j; ++k) trial[static_cast<size_t>(k)] = Force::out;
      trial[static_cast<size_t>(j)] = Force::in;
      if (auto v = cycle_best(d.weight, trial, m); v && *v == best) {
        force = std::move(trial);
        T.push_back(j);
        i = j + 1;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("lexicographic maximizer search lost the optimum");
  }
  return T;
}

std::vector<int> normalize_T(const std::vector<Rational>& x, std::vector<int> T) {
  const int m = wheel_rim(x);
  check_T(T, m);
  std::sort(T.begin(), T.end());
  Rational current = phi(x, T);
  auto guard = [&](const char* step) {
    const Rational next = phi(x, T);
    if (next < current) throw std::logic_error(std::string("phi decreased while normalizing (") + step + ")");
    current = next;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < T.size();) {
      if (triple_sum(x, T[k]) < 1) {
        T.erase(T.begin() + static_cast<std::ptrdiff_t>(k));
        guard("removal");
        changed = true;
      } else {
        ++k;
      }
    }
    for (int i : T) {
      if (triple_sum(x, i) > 2) throw std::logic_error("selected pair has triple sum above 2");
    }
    for (int i = 1; i <= m; ++i) {
      const Rational s = triple_sum(x, i);
      if (s < 1 || s > 2) continue;
      if (contains(T, cyclic_prev(i, m)) || contains(T, i) || contains(T, cyclic_next(i, m))) continue;
      T.insert(std::upper_bound(T.begin(), T.end(), i), i);
      guard("addition");
      changed = true;
    }
  }
  return T;
}

bool is_normalized(const std::vector<Rational>& x, const std::vector<int>& T) {
  const int m = wheel_rim(x);
  if (!cyclically_independent(T, m)) return false;
  for (int i : T) {
    if (i < 1 || i > m) return false;
  }
  if (phi(x, T) != phi_star(x)) return false;
  for (int i : T) {
    const Rational s = triple_sum(x, i);
    if (s < 1 || s > 2) return false;
  }
  for (int i = 1; i <= m; ++i) {
    const Rational s = triple_sum(x, i);
    if (s < 1 || s > 2) continue;
    if (!contains(T, cyclic_prev(i, m)) && !contains(T, i) && !contains(T, cyclic_next(i, m))) return false;
  }
  return true;
}

TSelection optimal_T(const std::vector<Rational>& x) {
  TSelection sel;
  sel.T = normalize_T(x, lex_optimal_T(x));
  sel.phi = phi(x, sel.T);
  sel.normalized = is_normalized(x, sel.T);
  if (!sel.normalized) throw std::logic_error("normalized selection fails its own conditions");
  return sel;
}

LinearSystem z_system_unchecked(const std::vector<Rational>& x, const std::vector<int>& T) {
  const int m = wheel_rim(x);
  check_T(T, m);
  const WheelBounds b = wheel_bounds(x);
  LinearSystem sys(m, {}, "z");
  auto z = [&](int i) { return sys.x_var(i); };
  auto idx = [](int i) { return static_cast<size_t>(i); };
  for (int i = 1; i <= m; ++i) {
    const bool near = contains(T, i) || contains(T, cyclic_prev(i, m));
    if (near) sys.add({{{z(i), 1}}, Relation::ge, b.m[idx(i)], RowFamily::z_lower, "near T: z" + std::to_string(i) + " >= m_i"});
    else sys.add({{{z(i), 1}}, Relation::ge, b.M[idx(i)], RowFamily::z_lower, "off T: z" + std::to_string(i) + " >= M_i"});
  }
  for (int i = 1; i <= m; ++i) {
    sys.add({{{z(i), 1}}, Relation::le, b.M[idx(i)], RowFamily::z_upper, "z" + std::to_string(i) + " <= M_i"});
  }
  for (int i = 1; i <= m; ++i) {
    const int j = cyclic_next(i, m);
    const std::string tag = "z" + std::to_string(i) + " + z" + std::to_string(j);
    if (contains(T, i)) {
      sys.add({{{z(i), 1}, {z(j), 1}}, Relation::ge, b.Mp[idx(i)], RowFamily::z_pair_lower, "in T: " + tag + " >= M'_i"});
    } else {
      sys.add({{{z(i), 1}, {z(j), 1}}, Relation::ge, b.mp[idx(i)], RowFamily::z_pair_lower, "not in T: " + tag + " >= m'_i"});
      sys.add({{{z(i), 1}, {z(j), 1}}, Relation::le, b.Mp[idx(i)], RowFamily::z_pair_upper, "not in T: " + tag + " <= M'_i"});
    }
  }
  return sys;
}

LinearSystem z_system(const std::vector<Rational>& x, const TSelection& sel) {
  if (!sel.normalized || !is_normalized(x, sel.T)) throw std::invalid_argument("z-system needs a normalized selection");
  return z_system_unchecked(x, sel.T);
}

std::vector<IntervalSet> build_intervals_wheel(const std::vector<Rational>& x, const std::vector<int>& T,
                                               const std::vector<Rational>& z) {
  const int m = wheel_rim(x);
  if (m % 2 != 0) throw std::invalid_argument("interval construction needs an even rim");
  if (static_cast<int>(z.size()) != m) throw std::invalid_argument("z has the wrong dimension");
  const LinearSystem sys = z_system_unchecked(x, T);
  for (const auto& row : sys.rows()) {
    if (!row.satisfied_by(z)) throw std::invalid_argument("z violates " + row.note);
  }
  const Rational& xn = x.back();
  std::vector<IntervalSet> sets(x.size());
  sets[static_cast<size_t>(m)] = IntervalSet::range(0, xn);
  for (int i = 1; i <= m; ++i) {
    const Rational& xi = at(x, i);
    const Rational& zi = z[static_cast<size_t>(i - 1)];
    if (i % 2 == 1) sets[static_cast<size_t>(i - 1)] = IntervalSet::make({{xn, xn + zi}, {0, xi - zi}});
    else sets[static_cast<size_t>(i - 1)] = IntervalSet::make({{1 - zi, 1}, {xn - xi + zi, xn}});
  }
  return sets;
}

WheelTargetReport verify_eq_target(const std::vector<Rational>& x, const std::vector<int>& T,
                                   const std::vector<IntervalSet>& sets) {
  const int m = wheel_rim(x);
  check_T(T, m);
  if (sets.size() != x.size()) throw std::invalid_argument("one set per vertex expected");
  WheelTargetReport rep;
  for (size_t i = 0; i < x.size(); ++i) {
    if (sets[i].measure() != x[i]) rep.measures_ok = false;
  }
  const auto& Xn = sets.back();
  const Rational& xn = x.back();
  auto X = [&](int i) -> const IntervalSet& { return sets[static_cast<size_t>(i - 1)]; };
  for (int i = 1; i <= m; ++i) {
    const int j = cyclic_next(i, m);
    const Rational rim = overlap(X(i), X(j));
    const Rational spoke = overlap(X(i), Xn);
    rep.edge_sum += rim + spoke;
    if (contains(T, i)) {
      if (rim + spoke + overlap(X(j), Xn) != pos(at(x, i) + at(x, j) + xn - 1)) rep.triangle_failures.push_back(i);
    } else if (rim != pos(at(x, i) + at(x, j) - 1)) {
      rep.rim_failures.push_back(i);
    }
    if (!contains(T, i) && !contains(T, cyclic_prev(i, m)) && spoke != pos(at(x, i) + xn - 1)) {
      rep.spoke_failures.push_back(i);
    }
  }
  rep.phi = phi(x, T);
  rep.sum_equals_phi = rep.edge_sum == rep.phi;
  return rep;
}

FlowNetwork build_network(const std::vector<Rational>& x, const std::vector<int>& T) {
  const int m = wheel_rim(x);
  if (m % 2 != 0) throw std::invalid_argument("the flow network is defined for even rims only");
  check_T(T, m);
  const WheelBounds b = wheel_bounds(x);
  FlowNetwork net;
  net.m = m;
  auto idx = [](int i) { return static_cast<size_t>(i); };
  auto name = [](const char* sym, int i) { return std::string(sym) + "_" + std::to_string(i); };
  for (int i = 1; i <= m; ++i) {
    const bool near = contains(T, i) || contains(T, cyclic_prev(i, m));
    const Rational& up = b.M[idx(i)];
    const Rational down = near ? b.m[idx(i)] : b.M[idx(i)];
    const std::string down_label = near ? name("-m", i) : name("-M", i);
    // pi+ carries M_i, pi- carries -m_i (or -M_i away from T); direction by parity.
    if (i % 2 == 1) {
      net.arcs.push_back({0, i, up, ArcKind::pi_plus, i, name("M", i)});
      net.arcs.push_back({i, 0, -down, ArcKind::pi_minus, i, down_label});
    } else {
      net.arcs.push_back({0, i, -down, ArcKind::pi_minus, i, down_label});
      net.arcs.push_back({i, 0, up, ArcKind::pi_plus, i, name("M", i)});
    }
  }
  for (int i = 1; i <= m; ++i) {
    const int j = cyclic_next(i, m);
    const bool odd = i % 2 == 1;
    if (contains(T, i)) {
      const Arc a{odd ? i : j, odd ? j : i, -b.Mp[idx(i)], ArcKind::sigma_minus, i, name("-M'", i)};
      net.arcs.push_back(a);
    } else {
      net.arcs.push_back({odd ? i : j, odd ? j : i, -b.mp[idx(i)], ArcKind::sigma_minus, i, name("-m'", i)});
      net.arcs.push_back({odd ? j : i, odd ? i : j, b.Mp[idx(i)], ArcKind::sigma_plus, i, name("M'", i)});
    }
  }
  return net;
}

CycleReport find_negative_cycle(const FlowNetwork& net) {
  const int N = net.m + 1;
  std::vector<Rational> dist(static_cast<size_t>(N));
  std::vector<int> pred(static_cast<size_t>(N), -1);
  int last = -1;
  for (int round = 0; round < N; ++round) {
    last = -1;
    for (size_t a = 0; a < net.arcs.size(); ++a) {
      const auto& arc = net.arcs[a];
      const Rational cand = dist[static_cast<size_t>(arc.from)] + arc.cost;
      if (cand < dist[static_cast<size_t>(arc.to)]) {
        dist[static_cast<size_t>(arc.to)] = cand;
        pred[static_cast<size_t>(arc.to)] = static_cast<int>(a);
        last = arc.to;
      }
    }
    if (last == -1) return {};
  }
  // Still relaxing after N rounds: walk back N steps to land on the cycle.
  int v = last;
  for (int k = 0; k < N; ++k) {
    const int a = pred[static_cast<size_t>(v)];
    if (a < 0) return shortest_negative_cycle(net);
    v = net.arcs[static_cast<size_t>(a)].from;
  }
  CycleReport rep;
  rep.negative = true;
  int u = v;
  do {
    const int a = pred[static_cast<size_t>(u)];
    rep.arcs.push_back(a);
    u = net.arcs[static_cast<size_t>(a)].from;
  } while (u != v);
  std::reverse(rep.arcs.begin(), rep.arcs.end());
  for (int a : rep.arcs) rep.cost += net.arcs[static_cast<size_t>(a)].cost;
  return rep;
}

CycleReport shortest_negative_cycle(const FlowNetwork& net) {
  const int N = net.m + 1;
  for (int k = 1; k <= N; ++k) {
    for (int s = 0; s < N; ++s) {
      // best[len][v]: cheapest walk with exactly len arcs from s to v.
      std::vector<std::vector<std::optional<Rational>>> best(static_cast<size_t>(k + 1),
                                                             std::vector<std::optional<Rational>>(static_cast<size_t>(N)));
      std::vector<std::vector<int>> via(static_cast<size_t>(k + 1), std::vector<int>(static_cast<size_t>(N), -1));
      best[0][static_cast<size_t>(s)] = Rational(0);
      for (int len = 1; len <= k; ++len) {
        for (size_t a = 0; a < net.arcs.size(); ++a) {
          const auto& arc = net.arcs[a];
          const auto& prev = best[static_cast<size_t>(len - 1)][static_cast<size_t>(arc.from)];
          if (!prev) continue;
          const Rational cand = *prev + arc.cost;
          auto& slot = best[static_cast<size_t>(len)][static_cast<size_t>(arc.to)];
          if (!slot || cand < *slot) {
            slot = cand;
            via[static_cast<size_t>(len)][static_cast<size_t>(arc.to)] = static_cast<int>(a);
          }
        }
      }
      const auto& closed = best[static_cast<size_t>(k)][static_cast<size_t>(s)];
      if (closed && closed->sign() < 0) {
        CycleReport rep;
        rep.negative = true;
        rep.cost = *closed;
        int v = s;
        for (int len = k; len >= 1; --len) {
          const int a = via[static_cast<size_t>(len)][static_cast<size_t>(v)];
          rep.arcs.push_back(a);
          v = net.arcs[static_cast<size_t>(a)].from;
        }
        std::reverse(rep.arcs.begin(), rep.arcs.end());
        return rep;
      }
    }
  }
  return {};
}

namespace {

int reflect_index(int i, int m) { return i == m ? m : m - i; }

// Pair index p with p -> p+1 matching the rim arc (from, to) in forward direction, or 0.
int forward_pair(int from, int to, int m) { return (from != 0 && to == cyclic_next(from, m)) ? from : 0; }

std::optional<std::vector<int>> improve_forward(const std::vector<Rational>& x, const std::vector<int>& T,
                                                const FlowNetwork& net, const std::vector<int>& cycle) {
  const int m = net.m;
  auto eligible_even = [&](int k) {
    const Rational s = triple_sum(x, k);
    return k % 2 == 0 && s >= 1 && s <= 2;
  };
  std::vector<int> rim_pairs;
  int o_arcs = 0;
  for (int a : cycle) {
    const auto& arc = net.arcs[static_cast<size_t>(a)];
    if (arc.from == 0 || arc.to == 0) {
      ++o_arcs;
      continue;
    }
    const int p = forward_pair(arc.from, arc.to, m);
    if (p == 0) return std::nullopt;
    rim_pairs.push_back(p);
  }
  std::vector<int> out;
  if (o_arcs == 0) {
    if (static_cast<int>(rim_pairs.size()) != m) return std::nullopt;
    for (int k = 1; k <= m; ++k) {
      if (eligible_even(k)) out.push_back(k);
    }
  } else {
    if (o_arcs != 2 || rim_pairs.empty()) return std::nullopt;
    // Rotate so the cycle starts at O; the rim pairs are then i, i+1, ..., j.
    std::vector<int> range;
    size_t start = 0;
    while (net.arcs[static_cast<size_t>(cycle[start])].from != 0) ++start;
    for (size_t k = 1; k + 1 < cycle.size(); ++k) {
      const auto& arc = net.arcs[static_cast<size_t>(cycle[(start + k) % cycle.size()])];
      range.push_back(forward_pair(arc.from, arc.to, m));
    }
    std::set<int> in_range(range.begin(), range.end());
    for (int t : T) {
      if (!in_range.count(t)) out.push_back(t);
    }
    for (int k : range) {
      if (eligible_even(k)) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
  }
  if (!cyclically_independent(out, m)) return std::nullopt;
  return out;
}

}  // namespace

std::vector<Rational> reflect_point(const std::vector<Rational>& x) {
  const int m = wheel_rim(x);
  std::vector<Rational> out(x.size());
  for (int i = 1; i <= m; ++i) out[static_cast<size_t>(reflect_index(i, m) - 1)] = at(x, i);
  out.back() = x.back();
  return out;
}

std::vector<int> reflect_T(const std::vector<int>& T, int m) {
  std::vector<int> out;
  for (int i : T) out.push_back(reflect_index(cyclic_next(i, m), m));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> improved_T(const std::vector<Rational>& x, const std::vector<int>& T,
                                           const FlowNetwork& net, const CycleReport& cycle) {
  if (!cycle.negative || cycle.arcs.empty()) return std::nullopt;
  const int m = net.m;
  bool forward = false, backward = false;
  for (int a : cycle.arcs) {
    const auto& arc = net.arcs[static_cast<size_t>(a)];
    if (arc.from == 0 || arc.to == 0) continue;
    if (arc.to == cyclic_next(arc.from, m)) forward = true;
    else backward = true;
  }
  if (forward == backward) return std::nullopt;
  if (forward) return improve_forward(x, T, net, cycle.arcs);

  // Reflect, solve the forward case there, and map the pairs back.
  const auto xr = reflect_point(x);
  const auto Tr = reflect_T(T, m);
  const FlowNetwork rnet = build_network(xr, Tr);
  std::vector<int> mapped;
  for (int a : cycle.arcs) {
    const auto& arc = net.arcs[static_cast<size_t>(a)];
    const int from = arc.from == 0 ? 0 : reflect_index(arc.from, m);
    const int to = arc.to == 0 ? 0 : reflect_index(arc.to, m);
    int found = -1;
    for (size_t b = 0; b < rnet.arcs.size(); ++b) {
      const auto& c = rnet.arcs[b];
      if (c.from == from && c.to == to && c.kind == arc.kind && c.cost == arc.cost) {
        found = static_cast<int>(b);
        break;
      }
    }
    if (found < 0) throw std::logic_error("reflected network lacks the image of a cycle arc");
    mapped.push_back(found);
  }
  const auto result = improve_forward(xr, Tr, rnet, mapped);
  if (!result) return std::nullopt;
  std::vector<int> back;
  for (int p : *result) back.push_back(cyclic_prev(reflect_index(p, m), m));
  std::sort(back.begin(), back.end());
  return back;
}

bool WheelResult::ok() const {
  if (!selection.normalized || !z_feasible || cycle.negative || !target.ok() || !certificate) return false;
  if (selection.phi != phi_star || target.edge_sum != phi_star) return false;
  if (lb && *lb != phi_star) return false;
  if (envelope && *envelope != phi_star) return false;
  return true;
}

WheelResult wheel_certificate(const std::vector<Rational>& x, const WheelOptions& options) {
  const int m = wheel_rim(x);
  if (m % 2 != 0) throw std::invalid_argument("wheel certificates need an even rim, got m=" + std::to_string(m));
  WheelResult r;
  r.x = x;
  r.phi_star = phi_star(x);
  r.selection = optimal_T(x);
  const LinearSystem zsys = z_system(x, r.selection);
  const Feasibility feas = feasible_point(zsys);
  r.z_feasible = feas.feasible;
  r.cycle = find_negative_cycle(build_network(x, r.selection.T));
  const Graph g = Graph::wheel(m);
  if (options.post_verify) {
    r.lb = lb(triangle_relaxation(g), g, x);
    r.envelope = envelope_value(g, x);
  }
  if (!feas.feasible) {
    r.z_witness = feas.witness;
    return r;
  }
  r.z = feas.point;
  const auto sets = build_intervals_wheel(x, r.selection.T, r.z);
  r.target = verify_eq_target(x, r.selection.T, sets);
  Certificate cert{g, x, sets, r.phi_star, "triangle"};
  nlohmann::json T = r.selection.T;
  cert.metadata = {{"construction", "even-wheel"}, {"Tstar", T}, {"phi", r.selection.phi.str()}, {"z", to_json(r.z)}};
  r.certificate = std::move(cert);
  return r;
}

nlohmann::json to_json(const WheelResult& r) {
  nlohmann::json j;
  j["Tstar"] = r.selection.T;
  j["phi"] = r.selection.phi.str();
  j["phi_star"] = r.phi_star.str();
  j["z_feasible"] = r.z_feasible;
  j["z"] = to_json(r.z);
  if (!r.z_witness.empty()) j["z_witness"] = to_json(r.z_witness);
  j["negative_cycle"] = r.cycle.negative;
  nlohmann::json checks;
  checks["measures"] = r.target.measures_ok;
  checks["edge_sum_equals_phi"] = r.target.sum_equals_phi;
  checks["triangle_failures"] = r.target.triangle_failures;
  checks["rim_failures"] = r.target.rim_failures;
  checks["spoke_failures"] = r.target.spoke_failures;
  j["checks"] = checks;
  j["edge_sum"] = r.target.edge_sum.str();
  if (r.lb) j["lb"] = r.lb->str();
  if (r.envelope) j["envelope"] = r.envelope->str();
  if (r.certificate) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& s : r.certificate->sets) sets.push_back(to_json(s));
    j["intervals"] = sets;
  }
  j["x"] = to_json(r.x);
  j["ok"] = r.ok();
  return j;
}

}  // namespace hullcert
