#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls into the library algorithms they are compared against; they share the
// Rational type and the plain data structures.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hullcert/graph.hpp"
#include "hullcert/interval_set.hpp"
#include "hullcert/rational.hpp"

namespace oracle {

using hullcert::Rational;
using Pairs = std::vector<std::pair<Rational, Rational>>;

inline Pairs raw(const hullcert::IntervalSet& s) {
  Pairs out;
  for (const auto& iv : s.intervals()) out.emplace_back(iv.lo, iv.hi);
  return out;
}

inline bool member(const Pairs& p, const Rational& t) {
  for (const auto& [lo, hi] : p) {
    if (lo <= t && t < hi) return true;
  }
  return false;
}

/// Elementary cells [c_k, c_{k+1}) of [0,1) cut at every endpoint.
inline std::vector<Rational> cuts(const std::vector<Pairs>& sets) {
  std::vector<Rational> c{0, 1};
  for (const auto& s : sets) {
    for (const auto& [lo, hi] : s) {
      c.push_back(lo);
      c.push_back(hi);
    }
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

/// Measure of {t : pred(membership vector at t)} by endpoint refinement.
template <class Pred>
Rational refined_measure(const std::vector<Pairs>& sets, Pred pred) {
  const auto c = cuts(sets);
  Rational total;
  for (size_t k = 0; k + 1 < c.size(); ++k) {
    std::vector<bool> in;
    for (const auto& s : sets) in.push_back(member(s, c[k]));
    if (pred(in)) total += c[k + 1] - c[k];
  }
  return total;
}

inline Rational measure(const Pairs& a) {
  return refined_measure({a}, [](const std::vector<bool>& in) { return bool(in[0]); });
}

inline Rational overlap(const Pairs& a, const Pairs& b) {
  return refined_measure({a, b}, [](const std::vector<bool>& in) { return in[0] && in[1]; });
}

/// sum over edges of mu(X_u ∩ X_v), edges given explicitly.
inline Rational edge_sum(const std::vector<std::pair<int, int>>& edges, const std::vector<hullcert::IntervalSet>& sets) {
  Rational s;
  for (const auto& [u, v] : edges) s += overlap(raw(sets[static_cast<size_t>(u - 1)]), raw(sets[static_cast<size_t>(v - 1)]));
  return s;
}

/// The point distribution t ~ U[0,1) -> (1[t in X_i])_i, one atom per cell.
struct Atom {
  std::vector<int> v;
  Rational weight;
};

inline std::vector<Atom> distribution(const std::vector<hullcert::IntervalSet>& sets) {
  std::vector<Pairs> ps;
  for (const auto& s : sets) ps.push_back(raw(s));
  const auto c = cuts(ps);
  std::vector<Atom> out;
  for (size_t k = 0; k + 1 < c.size(); ++k) {
    Atom a;
    for (const auto& p : ps) a.v.push_back(member(p, c[k]) ? 1 : 0);
    a.weight = c[k + 1] - c[k];
    out.push_back(std::move(a));
  }
  return out;
}

inline Rational f_vertex(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& v) {
  Rational s;
  for (const auto& [a, b] : edges) s += v[static_cast<size_t>(a - 1)] * v[static_cast<size_t>(b - 1)];
  return s;
}

inline std::vector<std::pair<int, int>> edge_list(const hullcert::Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// ---- dense linear algebra and vertex enumeration ----

/// Solves the square system M z = r; nullopt when M is singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> M, std::vector<Rational> r) {
  const size_t n = r.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[piv], M[col]);
    std::swap(r[piv], r[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col].is_zero()) continue;
      const Rational f = M[row][col] / M[col][col];
      for (size_t k = col; k < n; ++k) M[row][k] -= f * M[col][k];
      r[row] -= f * r[col];
    }
  }
  std::vector<Rational> z(n);
  for (size_t i = 0; i < n; ++i) z[i] = r[i] / M[i][i];
  return z;
}

/// max c.z subject to A z <= b, by trying every basis of n tight rows.
/// Assumes the feasible region is pointed and the optimum is finite when it exists.
struct SmallLP {
  int n = 0;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct SmallLPResult {
  bool feasible = false;
  Rational value;
  std::vector<Rational> point;
};

inline SmallLPResult enumerate_vertices(const SmallLP& lp) {
  SmallLPResult best;
  const int rows = static_cast<int>(lp.A.size());
  const int n = lp.n;
  if (n == 0) {
    best.feasible = std::all_of(lp.b.begin(), lp.b.end(), [](const Rational& v) { return v.sign() >= 0; });
    return best;
  }
  if (rows < n) return best;
  std::vector<int> pick(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) pick[static_cast<size_t>(k)] = k;
  while (true) {
    std::vector<std::vector<Rational>> M;
    std::vector<Rational> r;
    for (int k : pick) {
      M.push_back(lp.A[static_cast<size_t>(k)]);
      r.push_back(lp.b[static_cast<size_t>(k)]);
    }
    if (auto z = solve_square(M, r)) {
      bool ok = true;
      for (int row = 0; row < rows && ok; ++row) {
        Rational lhs;
        for (int j = 0; j < n; ++j) lhs += lp.A[static_cast<size_t>(row)][static_cast<size_t>(j)] * (*z)[static_cast<size_t>(j)];
        if (lhs > lp.b[static_cast<size_t>(row)]) ok = false;
      }
      if (ok) {
        Rational val;
        for (int j = 0; j < n; ++j) val += lp.c[static_cast<size_t>(j)] * (*z)[static_cast<size_t>(j)];
        if (!best.feasible || val > best.value) {
          best.feasible = true;
          best.value = val;
          best.point = *z;
        }
      }
    }
    int k = n - 1;
    while (k >= 0 && pick[static_cast<size_t>(k)] == rows - n + k) --k;
    if (k < 0) break;
    ++pick[static_cast<size_t>(k)];
    for (int t = k + 1; t < n; ++t) pick[static_cast<size_t>(t)] = pick[static_cast<size_t>(t - 1)] + 1;
  }
  return best;
}

/// Envelope value through the dual: max a.x + b with a.v + b <= f(v) at every cube vertex.
inline Rational envelope_dual(const hullcert::Graph& g, const std::vector<Rational>& x) {
  const int n = g.n();
  const auto edges = edge_list(g);
  SmallLP lp;
  lp.n = n + 1;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> v;
    std::vector<Rational> row;
    for (int i = 0; i < n; ++i) {
      v.push_back(static_cast<int>((mask >> i) & 1U));
      row.push_back(v.back());
    }
    row.push_back(1);
    lp.A.push_back(row);
    lp.b.push_back(f_vertex(edges, v));
  }
  lp.c = x;
  lp.c.push_back(1);
  return enumerate_vertices(lp).value;
}

// ---- wheels ----

inline int rim_next(int i, int m) { return i == m ? 1 : i + 1; }

inline Rational pos(const Rational& r) { return r.sign() > 0 ? r : Rational(0); }

/// phi(T) straight from its three sums; T given as a bitmask over rim pairs 1..m.
inline Rational phi(const std::vector<Rational>& x, std::uint32_t T) {
  const int m = static_cast<int>(x.size()) - 1;
  const Rational& hub = x.back();
  auto in = [&](int i) { return ((T >> (i - 1)) & 1U) != 0; };
  auto X = [&](int i) { return x[static_cast<size_t>(i - 1)]; };
  Rational s;
  for (int i = 1; i <= m; ++i) {
    const int prev = i == 1 ? m : i - 1;
    if (!in(i)) s += pos(X(i) + X(rim_next(i, m)) - 1);
    if (!in(i) && !in(prev)) s += pos(X(i) + hub - 1);
    if (in(i)) s += pos(X(i) + X(rim_next(i, m)) + hub - 1);
  }
  return s;
}

inline bool independent(std::uint32_t T, int m) {
  for (int i = 1; i <= m; ++i) {
    if (((T >> (i - 1)) & 1U) && ((T >> (rim_next(i, m) - 1)) & 1U)) return false;
  }
  return true;
}

inline std::vector<int> members(std::uint32_t T, int m) {
  std::vector<int> out;
  for (int i = 1; i <= m; ++i) {
    if ((T >> (i - 1)) & 1U) out.push_back(i);
  }
  return out;
}

inline std::uint32_t mask_of(const std::vector<int>& T) {
  std::uint32_t mask = 0;
  for (int i : T) mask |= 1U << (i - 1);
  return mask;
}

/// Phi* by trying every independent T.
inline Rational phi_star(const std::vector<Rational>& x) {
  const int m = static_cast<int>(x.size()) - 1;
  Rational best;
  bool any = false;
  for (std::uint32_t T = 0; T < (1U << m); ++T) {
    if (!independent(T, m)) continue;
    const Rational v = phi(x, T);
    if (!any || v > best) best = v;
    any = true;
  }
  return best;
}

// ---- graphs ----

inline std::vector<std::array<int, 3>> triangles(const hullcert::Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) {
      for (int k = j + 1; k <= g.n(); ++k) {
        if (g.has_edge(i, j) && g.has_edge(i, k) && g.has_edge(j, k)) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

/// True when some 2-colouring makes every edge bichromatic (tries all of them).
inline bool two_colourable(const hullcert::Graph& g) {
  const int n = g.n();
  for (std::uint32_t c = 0; c < (1U << n); ++c) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (((c >> (e.u - 1)) & 1U) == ((c >> (e.v - 1)) & 1U)) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

/// Checks that cyc lists an odd simple cycle of g (consecutive vertices adjacent, closing edge included).
inline bool is_odd_cycle(const hullcert::Graph& g, const std::vector<int>& cyc) {
  if (cyc.size() < 3 || cyc.size() % 2 == 0) return false;
  std::vector<int> sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (size_t k = 0; k < cyc.size(); ++k) {
    if (!g.has_edge(cyc[k], cyc[(k + 1) % cyc.size()])) return false;
  }
  return true;
}

}  // namespace oracle
