#include "hullcert/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace hullcert {

std::string to_string(Family f) {
  switch (f) {
    case Family::wheel:
      return "wheel";
    case Family::complete_split:
      return "complete_split";
    case Family::generic:
      return "generic";
  }
  return "generic";
}

Graph::Graph(int n, std::vector<Edge> edges, Family family, std::vector<int> params)
    : n_(n), edges_(std::move(edges)), family_(family), params_(std::move(params)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<size_t>(n_ + 1) * static_cast<size_t>(n_ + 1), 0);
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has an endpoint outside [1," + std::to_string(n_) + "]");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    char& cell = adj_[static_cast<size_t>(e.u) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(e.v)];
    if (cell) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    cell = 1;
    adj_[static_cast<size_t>(e.v) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(e.u)] = 1;
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::wheel(int m) {
  if (m < 3) throw std::invalid_argument("wheel needs at least 3 rim vertices, got " + std::to_string(m));
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) edges.push_back({i, cyclic_next(i, m)});
  for (int i = 1; i <= m; ++i) edges.push_back({i, m + 1});
  return Graph(m + 1, std::move(edges), Family::wheel, {m});
}

Graph Graph::complete_split(int n1, int n2) {
  if (n1 < 1) throw std::invalid_argument("complete split graph needs n1 >= 1");
  if (n2 < 0) throw std::invalid_argument("complete split graph needs n2 >= 0");
  std::vector<Edge> edges;
  for (int i = 1; i <= n1; ++i) {
    for (int j = i + 1; j <= n1 + n2; ++j) edges.push_back({i, j});
  }
  return Graph(n1 + n2, std::move(edges), Family::complete_split, {n1, n2});
}

Graph Graph::generic(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges), Family::generic, {}); }

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) return false;
  return adj_[static_cast<size_t>(i) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(j)] != 0;
}

std::vector<int> Graph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j) {
    if (has_edge(i, j)) out.push_back(j);
  }
  return out;
}

int Graph::rim_size() const {
  if (family_ != Family::wheel) throw std::logic_error("rim queries need a wheel");
  return params_.front();
}

int Graph::rim_successor(int i) const { return cyclic_next(i, rim_size()); }
int Graph::rim_predecessor(int i) const { return cyclic_prev(i, rim_size()); }

nlohmann::json Graph::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : edges_) edges.push_back({e.u, e.v});
  return {{"n", n_}, {"edges", edges}, {"family", to_string(family_)}, {"params", params_}};
}

Graph Graph::from_json(const nlohmann::json& j) {
  const std::string family = j.value("family", std::string("generic"));
  const auto params = j.value("params", std::vector<int>{});
  Graph g = [&] {
    if (family == "wheel") {
      if (params.size() != 1) throw std::invalid_argument("wheel graph needs params [m]");
      return wheel(params[0]);
    }
    if (family == "complete_split") {
      if (params.size() != 2) throw std::invalid_argument("complete_split graph needs params [n1, n2]");
      return complete_split(params[0], params[1]);
    }
    if (family != "generic") throw std::invalid_argument("unknown graph family '" + family + "'");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return generic(j.at("n").get<int>(), std::move(edges));
  }();
  if (j.contains("n") && j.at("n").get<int>() != g.n()) {
    throw std::invalid_argument("graph 'n' disagrees with its family parameters");
  }
  if (j.contains("edges") && family != "generic") {
    std::vector<Edge> listed;
    for (const auto& e : j.at("edges")) listed.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    if (Graph::generic(g.n(), listed).edges() != g.edges()) {
      throw std::invalid_argument("graph edge list disagrees with its family");
    }
  }
  return g;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (const auto& e : g.edges()) {
    for (int k = e.v + 1; k <= g.n(); ++k) {
      if (g.has_edge(e.u, k) && g.has_edge(e.v, k)) out.push_back({e.u, e.v, k});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Bipartition is_bipartite(const Graph& g) {
  const int n = g.n();
  std::vector<int> colour(static_cast<size_t>(n + 1), -1);
  std::vector<int> parent(static_cast<size_t>(n + 1), 0);
  std::vector<int> depth(static_cast<size_t>(n + 1), 0);
  for (int s = 1; s <= n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (colour[v] == colour[u]) {
          // Walk both tree paths up to their meeting point.
          std::vector<int> left{u}, right{v};
          int a = u, b = v;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          return {false, {}, left};
        }
      }
    }
  }
  colour[0] = 0;
  return {true, colour, {}};
}

}  // namespace hullcert
