#include "hullcert/linear_system.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hullcert {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::le:
      return "<=";
    case Relation::ge:
      return ">=";
    case Relation::eq:
      return "=";
  }
  return "?";
}

std::string to_string(RowFamily f) {
  switch (f) {
    case RowFamily::mccormick_lb:
      return "mccormick_lb";
    case RowFamily::mccormick_ub:
      return "mccormick_ub";
    case RowFamily::box:
      return "box";
    case RowFamily::triangle:
      return "triangle";
    case RowFamily::clique:
      return "clique";
    case RowFamily::wheel_extra_1:
      return "wheel_extra_1";
    case RowFamily::wheel_extra_2:
      return "wheel_extra_2";
    case RowFamily::z_lower:
      return "z_lower";
    case RowFamily::z_upper:
      return "z_upper";
    case RowFamily::z_pair_lower:
      return "z_pair_lower";
    case RowFamily::z_pair_upper:
      return "z_pair_upper";
  }
  return "?";
}

Rational SystemRow::lhs(const std::vector<Rational>& values) const {
  Rational s;
  for (const auto& [v, c] : terms) s += c * values.at(static_cast<size_t>(v));
  return s;
}

Rational SystemRow::slack(const std::vector<Rational>& values) const {
  const Rational l = lhs(values);
  switch (rel) {
    case Relation::le:
      return rhs - l;
    case Relation::ge:
    case Relation::eq:
      return l - rhs;
  }
  return l - rhs;
}

bool SystemRow::satisfied_by(const std::vector<Rational>& values) const {
  const Rational s = slack(values);
  return rel == Relation::eq ? s.is_zero() : s.sign() >= 0;
}

LinearSystem::LinearSystem(int nx, std::vector<Edge> pairs, std::string x_name)
    : nx_(nx), pairs_(std::move(pairs)), x_name_(std::move(x_name)) {
  if (nx_ < 0) throw std::invalid_argument("negative variable count");
  pair_lookup_.assign(static_cast<size_t>(nx_ + 1) * static_cast<size_t>(nx_ + 1), -1);
  for (size_t p = 0; p < pairs_.size(); ++p) {
    auto& e = pairs_[p];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > nx_ || e.u == e.v) throw std::invalid_argument("bad pair in linear system");
    int& slot = pair_lookup_[static_cast<size_t>(e.u) * static_cast<size_t>(nx_ + 1) + static_cast<size_t>(e.v)];
    if (slot != -1) throw std::invalid_argument("duplicate pair in linear system");
    slot = static_cast<int>(p);
  }
}

int LinearSystem::x_var(int i) const {
  if (i < 1 || i > nx_) throw std::out_of_range("x index " + std::to_string(i));
  return i - 1;
}

int LinearSystem::find_pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > nx_ || i == j) return -1;
  return pair_lookup_[static_cast<size_t>(i) * static_cast<size_t>(nx_ + 1) + static_cast<size_t>(j)];
}

int LinearSystem::y_var(int i, int j) const {
  const int p = find_pair(i, j);
  if (p < 0) throw std::out_of_range("pair {" + std::to_string(i) + "," + std::to_string(j) + "} not declared");
  return nx_ + p;
}

std::string LinearSystem::var_name(int v) const {
  if (v < nx_) return x_name_ + std::to_string(v + 1);
  const auto& e = pairs_.at(static_cast<size_t>(v - nx_));
  return "y" + std::to_string(e.u) + "_" + std::to_string(e.v);
}

void LinearSystem::add(SystemRow row) {
  for (const auto& [v, c] : row.terms) {
    if (v < 0 || v >= num_vars()) throw std::invalid_argument("row references unknown variable " + std::to_string(v));
  }
  std::sort(row.terms.begin(), row.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Merge repeated variables and drop zeros.
  Terms merged;
  for (auto& t : row.terms) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const auto& t) { return t.second.is_zero(); });
  row.terms = std::move(merged);
  rows_.push_back(std::move(row));
}

void LinearSystem::append(const LinearSystem& other) {
  if (other.nx_ != nx_ || other.pairs_ != pairs_) throw std::invalid_argument("appending an incompatible system");
  for (const auto& r : other.rows_) rows_.push_back(r);
}

std::vector<Rational> LinearSystem::assemble(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  if (static_cast<int>(x.size()) != nx_ || y.size() != pairs_.size()) {
    throw std::invalid_argument("assemble: dimension mismatch");
  }
  std::vector<Rational> v = x;
  v.insert(v.end(), y.begin(), y.end());
  return v;
}

std::string LinearSystem::render_row(const SystemRow& row) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : row.terms) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational mag = abs(c);
    if (mag != 1) os << mag << "*";
    os << var_name(v);
    first = false;
  }
  if (first) os << "0";
  os << " " << to_string(row.rel) << " " << row.rhs;
  return os.str();
}

nlohmann::json LinearSystem::to_json() const {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& e : pairs_) pairs.push_back({e.u, e.v});
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rows_) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [v, c] : r.terms) terms.push_back({var_name(v), c.str()});
    rows.push_back({{"terms", terms},
                    {"rel", to_string(r.rel)},
                    {"rhs", r.rhs.str()},
                    {"family", to_string(r.family)},
                    {"note", r.note}});
  }
  return {{"nx", nx_}, {"x_name", x_name_}, {"pairs", pairs}, {"rows", rows}};
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  }
  return out;
}

namespace {

std::string pair_note(const char* what, const Edge& e) {
  return std::string(what) + " {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

void add_box(LinearSystem& sys) {
  for (int i = 1; i <= sys.nx(); ++i) {
    sys.add({{{sys.x_var(i), 1}}, Relation::ge, 0, RowFamily::box, "x" + std::to_string(i) + " >= 0"});
    sys.add({{{sys.x_var(i), 1}}, Relation::le, 1, RowFamily::box, "x" + std::to_string(i) + " <= 1"});
  }
}

void add_nonneg(LinearSystem& sys, const Edge& e) {
  sys.add({{{sys.y_var(e.u, e.v), 1}}, Relation::ge, 0, RowFamily::mccormick_lb, pair_note("y >= 0", e)});
}

void add_lb(LinearSystem& sys, const Edge& e) {
  sys.add({{{sys.y_var(e.u, e.v), 1}, {sys.x_var(e.u), -1}, {sys.x_var(e.v), -1}},
           Relation::ge,
           -1,
           RowFamily::mccormick_lb,
           pair_note("y >= xi + xj - 1", e)});
}

void add_ub(LinearSystem& sys, const Edge& e) {
  sys.add({{{sys.y_var(e.u, e.v), 1}, {sys.x_var(e.u), -1}},
           Relation::le,
           0,
           RowFamily::mccormick_ub,
           pair_note("y <= xi", e)});
  sys.add({{{sys.y_var(e.u, e.v), 1}, {sys.x_var(e.v), -1}},
           Relation::le,
           0,
           RowFamily::mccormick_ub,
           pair_note("y <= xj", e)});
}

std::string set_text(const std::vector<int>& W) {
  std::string s = "{";
  for (size_t k = 0; k < W.size(); ++k) s += (k ? "," : "") + std::to_string(W[k]);
  return s + "}";
}

}  // namespace

LinearSystem mccormick(const Graph& g, bool full) {
  LinearSystem sys(g.n(), full ? all_pairs(g.n()) : g.edges());
  add_box(sys);
  for (const auto& e : sys.pairs()) {
    add_nonneg(sys, e);
    add_lb(sys, e);
  }
  for (const auto& e : sys.pairs()) add_ub(sys, e);
  return sys;
}

LinearSystem triangle_relaxation(const Graph& g) {
  LinearSystem sys = mccormick(g, false);
  for (const auto& t : triangles(g)) {
    const auto [i, j, k] = t;
    sys.add({{{sys.y_var(i, j), 1},
              {sys.y_var(i, k), 1},
              {sys.y_var(j, k), 1},
              {sys.x_var(i), -1},
              {sys.x_var(j), -1},
              {sys.x_var(k), -1}},
             Relation::ge,
             -1,
             RowFamily::triangle,
             "triangle " + set_text({i, j, k})});
  }
  return sys;
}

SystemRow clique_inequality(const LinearSystem& sys, const std::vector<int>& W_in, int alpha) {
  std::vector<int> W = W_in;
  std::sort(W.begin(), W.end());
  if (std::adjacent_find(W.begin(), W.end()) != W.end()) throw std::invalid_argument("clique set has repeats");
  const int w = static_cast<int>(W.size());
  if (w < 2) throw std::invalid_argument("clique inequality needs |W| >= 2");
  if (alpha < 1 || alpha > w - 1) {
    throw std::invalid_argument("clique alpha " + std::to_string(alpha) + " outside [1, " + std::to_string(w - 1) + "]");
  }
  SystemRow row;
  for (size_t a = 0; a < W.size(); ++a) {
    for (size_t b = a + 1; b < W.size(); ++b) row.terms.push_back({sys.y_var(W[a], W[b]), 1});
  }
  for (int i : W) row.terms.push_back({sys.x_var(i), -alpha});
  row.rel = Relation::ge;
  row.rhs = -choose2(alpha + 1);
  row.family = RowFamily::clique;
  row.note = "clique W=" + set_text(W) + " alpha=" + std::to_string(alpha);
  return row;
}

LinearSystem split_relaxation(int n1, int n2) {
  if (n1 < 1) throw std::invalid_argument("split relaxation needs n1 >= 1");
  if (n2 < 0) throw std::invalid_argument("split relaxation needs n2 >= 0");
  const int n = n1 + n2;
  LinearSystem sys(n, all_pairs(n));
  add_box(sys);
  for (const auto& e : sys.pairs()) {
    add_nonneg(sys, e);
    if (e.u <= n1 && e.v > n1) add_lb(sys, e);
  }
  for (const auto& e : sys.pairs()) add_ub(sys, e);

  // Subsets S of V2 with |S| <= n1-1, in order of size then lexicographically.
  std::vector<std::vector<int>> subsets{{}};
  for (int size = 1; size <= std::min(n1 - 1, n2); ++size) {
    std::vector<int> pick(static_cast<size_t>(size));
    for (int k = 0; k < size; ++k) pick[static_cast<size_t>(k)] = n1 + 1 + k;
    while (true) {
      subsets.push_back(pick);
      int k = size - 1;
      while (k >= 0 && pick[static_cast<size_t>(k)] == n - (size - 1 - k)) --k;
      if (k < 0) break;
      ++pick[static_cast<size_t>(k)];
      for (int t = k + 1; t < size; ++t) pick[static_cast<size_t>(t)] = pick[static_cast<size_t>(t - 1)] + 1;
    }
  }
  for (const auto& S : subsets) {
    std::vector<int> W;
    for (int i = 1; i <= n1; ++i) W.push_back(i);
    W.insert(W.end(), S.begin(), S.end());
    if (W.size() < 2) continue;
    for (int alpha = 1; alpha <= n1 - 1; ++alpha) sys.add(clique_inequality(sys, W, alpha));
  }
  return sys;
}

std::vector<SystemRow> wheel_extra_inequalities(const LinearSystem& sys, int m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("extra wheel rows need an odd rim size >= 3");
  const int n = m + 1;
  if (sys.nx() != n) throw std::invalid_argument("system does not match the wheel size");
  const Graph g = Graph::wheel(m);
  auto edge_terms = [&] {
    Terms t;
    for (const auto& e : g.edges()) t.push_back({sys.y_var(e.u, e.v), 1});
    return t;
  };
  SystemRow first{edge_terms(), Relation::ge, -Rational((m - 1) / 2), RowFamily::wheel_extra_1,
                  "odd wheel extra row 1"};
  first.terms.push_back({sys.x_var(n), -Rational((m - 1) / 2)});
  for (int i = 1; i <= m; ++i) first.terms.push_back({sys.x_var(i), -1});
  SystemRow second{edge_terms(), Relation::ge, -Rational(m), RowFamily::wheel_extra_2, "odd wheel extra row 2"};
  second.terms.push_back({sys.x_var(n), -Rational((m + 1) / 2)});
  for (int i = 1; i <= m; ++i) second.terms.push_back({sys.x_var(i), -2});
  return {first, second};
}

}  // namespace hullcert
