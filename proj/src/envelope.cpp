#include "hullcert/envelope.hpp"

#include <algorithm>
#include <stdexcept>

#include "hullcert/lp.hpp"

namespace hullcert {

namespace {

void check_point(const Graph& g, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != g.n()) throw std::invalid_argument("x has the wrong dimension");
  for (const auto& xi : x) {
    if (xi < 0 || xi > 1) throw std::invalid_argument("x must lie in [0,1]^n");
  }
}

int bits_edges(const Graph& g, std::uint64_t mask) {
  int count = 0;
  for (const auto& e : g.edges()) {
    if ((mask >> (e.u - 1) & 1U) && (mask >> (e.v - 1) & 1U)) ++count;
  }
  return count;
}

}  // namespace

Rational f_value(const Graph& g, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != g.n()) throw std::invalid_argument("vertex vector has the wrong dimension");
  int count = 0;
  for (const auto& e : g.edges()) {
    const int a = v[static_cast<size_t>(e.u - 1)];
    const int b = v[static_cast<size_t>(e.v - 1)];
    if ((a != 0 && a != 1) || (b != 0 && b != 1)) throw std::invalid_argument("f_value needs a 0/1 vector");
    count += a * b;
  }
  return count;
}

Rational f_at(const Graph& g, const std::vector<Rational>& x) {
  Rational s;
  for (const auto& e : g.edges()) s += x.at(static_cast<size_t>(e.u - 1)) * x.at(static_cast<size_t>(e.v - 1));
  return s;
}

EnvelopeResult envelope(const Graph& g, const std::vector<Rational>& x, const EnvelopeOptions& options) {
  check_point(g, x);
  const int n = g.n();
  if (n > 62) throw std::invalid_argument("envelope oracle cannot enumerate more than 2^62 vertices");
  if (n > options.max_n && !options.override_guard) {
    throw std::invalid_argument("envelope oracle guard: n=" + std::to_string(n) + " exceeds " +
                                std::to_string(options.max_n) + " (pass the override to force)");
  }
  std::uint64_t fixed_one = 0, free_bits = 0;
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<size_t>(i)] == 1) fixed_one |= std::uint64_t{1} << i;
    else if (x[static_cast<size_t>(i)].sign() > 0) free_bits |= std::uint64_t{1} << i;
  }

  // Enumerate the subsets of the free coordinates.
  std::vector<std::uint64_t> columns;
  std::uint64_t sub = 0;
  do {
    columns.push_back(fixed_one | sub);
    sub = (sub - free_bits) & free_bits;
  } while (sub != 0);

  LPProblem lp;
  lp.nvars = static_cast<int>(columns.size());
  lp.domain.assign(columns.size(), Domain::nonneg);
  lp.sense = Sense::minimize;
  for (auto mask : columns) lp.objective.emplace_back(bits_edges(g, mask));
  for (int i = 0; i < n; ++i) {
    if (!(free_bits >> i & 1U)) continue;
    LPRow row{{}, Relation::eq, x[static_cast<size_t>(i)]};
    for (size_t c = 0; c < columns.size(); ++c) {
      if (columns[c] >> i & 1U) row.terms.push_back({static_cast<int>(c), 1});
    }
    lp.rows.push_back(std::move(row));
  }
  LPRow convex{{}, Relation::eq, 1};
  for (size_t c = 0; c < columns.size(); ++c) convex.terms.push_back({static_cast<int>(c), 1});
  lp.rows.push_back(std::move(convex));

  const LPResult res = solve(lp);
  if (res.status != LPStatus::optimal) throw std::logic_error("envelope LP is not optimal; x outside the cube?");
  EnvelopeResult out;
  out.value = res.value;
  for (size_t c = 0; c < columns.size(); ++c) {
    if (res.point[c].sign() > 0) out.support.push_back({columns[c], res.point[c]});
  }
  return out;
}

Rational envelope_value(const Graph& g, const std::vector<Rational>& x, const EnvelopeOptions& options) {
  return envelope(g, x, options).value;
}

Rational upper_boundary(const Graph& g, const std::vector<Rational>& x) {
  check_point(g, x);
  Rational s;
  for (const auto& e : g.edges()) {
    s += std::min(x[static_cast<size_t>(e.u - 1)], x[static_cast<size_t>(e.v - 1)]);
  }
  return s;
}

}  // namespace hullcert
