#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hullcert {

/// Unordered vertex pair, stored with u < v. Vertices are 1-based.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Family { wheel, complete_split, generic };

std::string to_string(Family f);

/// Simple undirected graph on vertices 1..n.
///
/// Wheels W_m have rim 1..m (cycle, indices taken mod m) and hub m+1.
/// Complete split graphs have clique V1 = 1..n1 joined to the independent
/// set V2 = n1+1..n1+n2.
class Graph {
 public:
  static Graph wheel(int m);
  static Graph complete_split(int n1, int n2);
  /// Validates endpoints, self-loops and duplicates; throws std::invalid_argument.
  static Graph generic(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Family family() const { return family_; }
  /// wheel: {m}; complete_split: {n1, n2}; generic: {}.
  const std::vector<int>& params() const { return params_; }

  bool has_edge(int i, int j) const;
  std::vector<int> neighbors(int i) const;

  /// Rim successor i mod m + 1 for a wheel W_m.
  int rim_successor(int i) const;
  int rim_predecessor(int i) const;
  int rim_size() const;
  int hub() const { return n_; }

  nlohmann::json to_json() const;
  static Graph from_json(const nlohmann::json& j);

 private:
  Graph(int n, std::vector<Edge> edges, Family family, std::vector<int> params);

  int n_ = 0;
  std::vector<Edge> edges_;
  Family family_ = Family::generic;
  std::vector<int> params_;
  std::vector<char> adj_;
};

/// Cyclic successor on 1..m.
inline int cyclic_next(int i, int m) { return i % m + 1; }
inline int cyclic_prev(int i, int m) { return (i + m - 2) % m + 1; }

/// All 3-cliques (i < j < k), lexicographically sorted.
std::vector<std::array<int, 3>> triangles(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  /// 0/1 colour per vertex (index 0 unused) when bipartite.
  std::vector<int> colour;
  /// A closed odd walk's vertices (simple odd cycle) when not bipartite.
  std::vector<int> odd_cycle;
};

Bipartition is_bipartite(const Graph& g);

}  // namespace hullcert
