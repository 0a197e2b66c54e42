#include "hullcert/lp.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace hullcert {

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal:
      return "optimal";
    case LPStatus::infeasible:
      return "infeasible";
    case LPStatus::unbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

void validate(const LPProblem& p) {
  if (p.nvars < 0) throw std::invalid_argument("negative variable count");
  if (static_cast<int>(p.domain.size()) != p.nvars || static_cast<int>(p.objective.size()) != p.nvars) {
    throw std::invalid_argument("LP domain/objective size does not match nvars");
  }
  for (const auto& r : p.rows) {
    for (const auto& [v, c] : r.terms) {
      if (v < 0 || v >= p.nvars) throw std::invalid_argument("LP row references unknown variable");
    }
  }
}

Rational row_lhs(const LPRow& r, const std::vector<Rational>& point) {
  Rational s;
  for (const auto& [v, c] : r.terms) s += c * point[static_cast<size_t>(v)];
  return s;
}

bool row_ok(const LPRow& r, const std::vector<Rational>& point) {
  const Rational l = row_lhs(r, point);
  switch (r.rel) {
    case Relation::le:
      return l <= r.rhs;
    case Relation::ge:
      return l >= r.rhs;
    case Relation::eq:
      return l == r.rhs;
  }
  return false;
}

// Row in <= orientation: sign such that sign*(terms) <= sign*rhs.
int le_sign(Relation rel) { return rel == Relation::ge ? -1 : 1; }

// Index of the only variable with a nonzero coefficient, or -1.
int single_var(const LPRow& r) {
  int v = -1;
  for (const auto& [var, c] : r.terms) {
    if (c.is_zero()) continue;
    if (v != -1 && v != var) return -2;
    v = var;
  }
  return v;
}

Rational single_coeff(const LPRow& r) {
  Rational a;
  for (const auto& t : r.terms) a += t.second;
  return a;
}

class Tableau {
 public:
  Tableau(size_t rows, size_t cols) : t_(rows, std::vector<mpq_class>(cols + 1)), obj_(cols + 1), basis_(rows, 0) {}

  mpq_class& at(size_t r, size_t c) { return t_[r][c]; }
  mpq_class& rhs(size_t r) { return t_[r].back(); }
  std::vector<mpq_class>& obj() { return obj_; }
  std::vector<size_t>& basis() { return basis_; }
  size_t rows() const { return t_.size(); }
  size_t cols() const { return obj_.size() - 1; }

  void pivot(size_t r, size_t e, const std::vector<char>& active) {
    auto& pr = t_[r];
    const mpq_class inv = 1 / pr[e];
    std::vector<size_t> nz;
    for (size_t j = 0; j < pr.size(); ++j) {
      if (j < active.size() && !active[j]) continue;
      if (sgn(pr[j]) != 0) {
        pr[j] *= inv;
        nz.push_back(j);
      }
    }
    mpq_class f, tmp;
    auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[e]) == 0) return;
      f = row[e];
      for (size_t j : nz) {
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), pr[j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
      }
    };
    for (size_t i = 0; i < t_.size(); ++i) {
      if (i != r) eliminate(t_[i]);
    }
    eliminate(obj_);
    basis_[r] = e;
  }

  void erase_row(size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<mpq_class>> t_;
  std::vector<mpq_class> obj_;
  std::vector<size_t> basis_;
};

enum class Outcome { optimal, unbounded };

// Bland's rule on the current objective row.
Outcome run_simplex(Tableau& tab, const std::vector<char>& active, long& pivots, std::ostream* trace) {
  while (true) {
    size_t enter = tab.cols();
    for (size_t j = 0; j < tab.cols(); ++j) {
      if (active[j] && sgn(tab.obj()[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == tab.cols()) return Outcome::optimal;

    std::optional<size_t> leave;
    mpq_class best;
    for (size_t r = 0; r < tab.rows(); ++r) {
      const mpq_class& a = tab.at(r, enter);
      if (sgn(a) <= 0) continue;
      mpq_class ratio = tab.rhs(r) / a;
      if (!leave || ratio < best || (ratio == best && tab.basis()[r] < tab.basis()[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (!leave) return Outcome::unbounded;
    if (trace) {
      *trace << "pivot " << pivots << ": enter c" << enter << " leave c" << tab.basis()[*leave] << " (row " << *leave
             << "), ratio " << best.get_str() << "\n";
    }
    tab.pivot(*leave, enter, active);
    ++pivots;
  }
}

struct Presolved {
  std::vector<int> kept;  // original row indices entering the simplex
  std::optional<std::vector<Rational>> witness;
};

// Keep only the tightest single-variable bound on each side of each variable.
Presolved presolve(const LPProblem& p) {
  Presolved out;
  const size_t nrows = p.rows.size();
  std::vector<Rational> w(nrows);
  struct Bound {
    int row = -1;
    Rational value;
  };
  std::vector<Bound> lower(static_cast<size_t>(p.nvars)), upper(static_cast<size_t>(p.nvars));
  std::vector<char> keep(nrows, 0);

  for (size_t r = 0; r < nrows; ++r) {
    const auto& row = p.rows[r];
    const int v = single_var(row);
    if (v == -2) {
      keep[r] = 1;
      continue;
    }
    if (v == -1) {
      if (!row_ok(row, std::vector<Rational>(static_cast<size_t>(p.nvars)))) {
        // 0 rel rhs is false: in <= orientation the rhs is negative (or an equality mismatch).
        const Rational h = row.rel == Relation::ge ? -row.rhs : row.rhs;
        w[r] = Rational(-1) / h;
        if (row.rel == Relation::ge || row.rel == Relation::le) w[r] = abs(w[r]);
        out.witness = w;
        return out;
      }
      continue;
    }
    const Rational a = single_coeff(row);
    const Rational bound = row.rhs / a;
    const bool is_lower = row.rel == Relation::eq || (row.rel == Relation::ge) == (a.sign() > 0);
    const bool is_upper = row.rel == Relation::eq || !is_lower;
    auto& lo = lower[static_cast<size_t>(v)];
    auto& hi = upper[static_cast<size_t>(v)];
    if (is_lower && (lo.row == -1 || bound > lo.value)) lo = {static_cast<int>(r), bound};
    if (is_upper && (hi.row == -1 || bound < hi.value)) hi = {static_cast<int>(r), bound};
  }

  for (int v = 0; v < p.nvars; ++v) {
    auto& lo = lower[static_cast<size_t>(v)];
    const auto& hi = upper[static_cast<size_t>(v)];
    if (p.domain[static_cast<size_t>(v)] == Domain::nonneg && lo.row != -1 && lo.value <= 0) lo.row = -1;
    if (p.domain[static_cast<size_t>(v)] == Domain::nonneg && hi.row != -1 && hi.value < 0) {
      // Upper bound below the implicit zero lower bound.
      const auto& row = p.rows[static_cast<size_t>(hi.row)];
      const Rational g = single_coeff(row) * le_sign(row.rel);
      const Rational h = row.rhs * le_sign(row.rel);
      Rational weight = row.rel == Relation::eq ? Rational(1) / g : Rational(1) / abs(g);
      // Scale so the combined rhs is -1.
      weight *= Rational(-1) / (weight * (row.rel == Relation::eq ? row.rhs : h));
      w[static_cast<size_t>(hi.row)] = weight;
      out.witness = w;
      return out;
    }
    if (lo.row != -1 && hi.row != -1 && lo.value > hi.value) {
      const auto& lrow = p.rows[static_cast<size_t>(lo.row)];
      const auto& urow = p.rows[static_cast<size_t>(hi.row)];
      // Lower row as  -v <= -lo, upper row as v <= hi (after dividing out the coefficient).
      auto weight_for = [](const LPRow& row, bool as_lower) {
        const Rational a = single_coeff(row);
        if (row.rel == Relation::eq) return as_lower ? Rational(-1) / a : Rational(1) / a;
        return Rational(1) / abs(a);
      };
      const Rational scale = Rational(1) / (lo.value - hi.value);
      w[static_cast<size_t>(lo.row)] += weight_for(lrow, true) * scale;
      w[static_cast<size_t>(hi.row)] += weight_for(urow, false) * scale;
      out.witness = w;
      return out;
    }
    if (lo.row != -1) keep[static_cast<size_t>(lo.row)] = 1;
    if (hi.row != -1) keep[static_cast<size_t>(hi.row)] = 1;
  }
  for (size_t r = 0; r < nrows; ++r) {
    if (keep[r]) out.kept.push_back(static_cast<int>(r));
  }
  return out;
}

}  // namespace

bool satisfies(const LPProblem& problem, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != problem.nvars) return false;
  for (int v = 0; v < problem.nvars; ++v) {
    if (problem.domain[static_cast<size_t>(v)] == Domain::nonneg && point[static_cast<size_t>(v)].sign() < 0) {
      return false;
    }
  }
  return std::all_of(problem.rows.begin(), problem.rows.end(), [&](const LPRow& r) { return row_ok(r, point); });
}

bool is_farkas_witness(const LPProblem& problem, const std::vector<Rational>& w) {
  if (w.size() != problem.rows.size()) return false;
  std::vector<Rational> g(static_cast<size_t>(problem.nvars));
  Rational h;
  for (size_t r = 0; r < w.size(); ++r) {
    const auto& row = problem.rows[r];
    if (w[r].is_zero()) continue;
    if (row.rel != Relation::eq && w[r].sign() < 0) return false;
    const int s = row.rel == Relation::eq ? 1 : le_sign(row.rel);
    for (const auto& [v, c] : row.terms) g[static_cast<size_t>(v)] += w[r] * c * s;
    h += w[r] * row.rhs * s;
  }
  if (h.sign() >= 0) return false;
  for (int v = 0; v < problem.nvars; ++v) {
    const auto& gv = g[static_cast<size_t>(v)];
    if (problem.domain[static_cast<size_t>(v)] == Domain::nonneg ? gv.sign() < 0 : !gv.is_zero()) return false;
  }
  return true;
}

LPResult solve(const LPProblem& problem, const SolveOptions& options) {
  validate(problem);
  LPResult result;
  const Presolved pre = presolve(problem);
  if (pre.witness) {
    result.status = LPStatus::infeasible;
    result.farkas = *pre.witness;
    if (!is_farkas_witness(problem, result.farkas)) throw std::logic_error("presolve produced an invalid witness");
    return result;
  }

  // Structural columns: one per nonneg variable, two per free variable.
  std::vector<size_t> pos_col(static_cast<size_t>(problem.nvars)), neg_col(static_cast<size_t>(problem.nvars), SIZE_MAX);
  size_t ncols = 0;
  for (int v = 0; v < problem.nvars; ++v) {
    pos_col[static_cast<size_t>(v)] = ncols++;
    if (problem.domain[static_cast<size_t>(v)] == Domain::free) neg_col[static_cast<size_t>(v)] = ncols++;
  }

  // Standardize the kept rows: rhs >= 0, and >= 0 rows turned into <= 0 rows.
  struct StdRow {
    int orig;
    int sigma;
    Relation rel;
    size_t slack = SIZE_MAX;  // slack (le) or surplus (ge) column
    size_t art = SIZE_MAX;
  };
  std::vector<StdRow> srows;
  for (int r : pre.kept) {
    const auto& row = problem.rows[static_cast<size_t>(r)];
    StdRow s{r, 1, row.rel};
    if (row.rhs.sign() < 0 || (row.rhs.is_zero() && row.rel == Relation::ge)) {
      s.sigma = -1;
      if (row.rel == Relation::le) s.rel = Relation::ge;
      else if (row.rel == Relation::ge) s.rel = Relation::le;
    }
    if (s.rel != Relation::eq) s.slack = ncols++;
    srows.push_back(s);
  }
  for (auto& s : srows) {
    if (s.rel != Relation::le) s.art = ncols++;
  }
  const size_t m = srows.size();

  Tableau tab(m, ncols);
  std::vector<char> active(ncols, 1);
  for (size_t i = 0; i < m; ++i) {
    const auto& s = srows[i];
    const auto& row = problem.rows[static_cast<size_t>(s.orig)];
    for (const auto& [v, c] : row.terms) {
      const mpq_class a = c.raw() * s.sigma;
      tab.at(i, pos_col[static_cast<size_t>(v)]) += a;
      if (neg_col[static_cast<size_t>(v)] != SIZE_MAX) tab.at(i, neg_col[static_cast<size_t>(v)]) -= a;
    }
    tab.rhs(i) = row.rhs.raw() * s.sigma;
    if (s.slack != SIZE_MAX) tab.at(i, s.slack) = s.rel == Relation::le ? 1 : -1;
    if (s.art != SIZE_MAX) tab.at(i, s.art) = 1;
    tab.basis()[i] = s.rel == Relation::le ? s.slack : s.art;
  }

  // Phase 1: minimize the sum of artificials.
  const bool need_phase1 = std::any_of(srows.begin(), srows.end(), [](const StdRow& s) { return s.art != SIZE_MAX; });
  if (need_phase1) {
    auto& obj = tab.obj();
    for (size_t i = 0; i < m; ++i) {
      if (srows[i].art == SIZE_MAX) continue;
      for (size_t j = 0; j <= ncols; ++j) {
        if (j < ncols && j == srows[i].art) continue;
        obj[j] -= tab.at(i, j);
      }
    }
    if (options.trace) *options.trace << "phase 1\n";
    run_simplex(tab, active, result.pivots, options.trace);
    const mpq_class phase1_value = -tab.obj()[ncols];
    if (sgn(phase1_value) > 0) {
      // Duals from the reduced costs of the initial basis columns.
      std::vector<Rational> w(problem.rows.size());
      Rational total;
      for (size_t i = 0; i < m; ++i) {
        const auto& s = srows[i];
        mpq_class y = s.rel == Relation::le ? mpq_class(-tab.obj()[s.slack]) : mpq_class(1 - tab.obj()[s.art]);
        Rational weight;
        if (s.rel == Relation::le) weight = Rational(mpq_class(-y));
        else if (s.rel == Relation::ge) weight = Rational(y);
        else weight = Rational(mpq_class(-y * s.sigma));
        w[static_cast<size_t>(s.orig)] = weight;
        const auto& row = problem.rows[static_cast<size_t>(s.orig)];
        total += weight * row.rhs * (row.rel == Relation::eq ? 1 : le_sign(row.rel));
      }
      const Rational scale = Rational(-1) / total;
      for (auto& v : w) v *= scale;
      result.status = LPStatus::infeasible;
      result.farkas = std::move(w);
      if (!is_farkas_witness(problem, result.farkas)) throw std::logic_error("simplex produced an invalid witness");
      return result;
    }
    // Drive zero-level artificials out of the basis, dropping redundant rows.
    std::vector<char> art_col(ncols, 0);
    for (const auto& s : srows) {
      if (s.art != SIZE_MAX) art_col[s.art] = 1;
    }
    for (size_t i = 0; i < tab.rows();) {
      if (!art_col[tab.basis()[i]]) {
        ++i;
        continue;
      }
      size_t col = ncols;
      for (size_t j = 0; j < ncols; ++j) {
        if (!art_col[j] && sgn(tab.at(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col == ncols) {
        tab.erase_row(i);
        continue;
      }
      tab.pivot(i, col, active);
      ++result.pivots;
      ++i;
    }
    for (const auto& s : srows) {
      if (s.art != SIZE_MAX) active[s.art] = 0;
    }
  }

  // Phase 2 objective: reduced costs of the (sign-adjusted) cost vector.
  std::vector<mpq_class> cost(ncols);
  const int dir = problem.sense == Sense::minimize ? 1 : -1;
  for (int v = 0; v < problem.nvars; ++v) {
    const mpq_class c = problem.objective[static_cast<size_t>(v)].raw() * dir;
    cost[pos_col[static_cast<size_t>(v)]] = c;
    if (neg_col[static_cast<size_t>(v)] != SIZE_MAX) cost[neg_col[static_cast<size_t>(v)]] = -c;
  }
  auto& obj = tab.obj();
  for (size_t j = 0; j < ncols; ++j) obj[j] = active[j] ? cost[j] : mpq_class(0);
  obj[ncols] = 0;
  for (size_t i = 0; i < tab.rows(); ++i) {
    const mpq_class cb = cost[tab.basis()[i]];
    if (sgn(cb) == 0) continue;
    for (size_t j = 0; j <= ncols; ++j) {
      if (j < ncols && !active[j]) continue;
      obj[j] -= cb * tab.at(i, j);
    }
  }
  if (options.trace) *options.trace << "phase 2\n";
  if (run_simplex(tab, active, result.pivots, options.trace) == Outcome::unbounded) {
    result.status = LPStatus::unbounded;
    return result;
  }

  std::vector<mpq_class> colval(ncols);
  for (size_t i = 0; i < tab.rows(); ++i) colval[tab.basis()[i]] = tab.rhs(i);
  result.point.resize(static_cast<size_t>(problem.nvars));
  for (int v = 0; v < problem.nvars; ++v) {
    mpq_class val = colval[pos_col[static_cast<size_t>(v)]];
    if (neg_col[static_cast<size_t>(v)] != SIZE_MAX) val -= colval[neg_col[static_cast<size_t>(v)]];
    result.point[static_cast<size_t>(v)] = Rational(val);
  }
  if (!satisfies(problem, result.point)) throw std::logic_error("simplex optimum fails re-substitution");
  for (int v = 0; v < problem.nvars; ++v) result.value += problem.objective[static_cast<size_t>(v)] * result.point[static_cast<size_t>(v)];
  for (size_t r = 0; r < problem.rows.size(); ++r) {
    if (row_lhs(problem.rows[r], result.point) == problem.rows[r].rhs) result.tight_rows.push_back(static_cast<int>(r));
  }
  result.status = LPStatus::optimal;
  return result;
}

FixedXResult optimize_at(const LinearSystem& sys, const std::vector<Rational>& x,
                         const std::vector<std::pair<int, Rational>>& pair_objective, Sense sense) {
  if (static_cast<int>(x.size()) != sys.nx()) throw std::invalid_argument("x has the wrong dimension");
  const int nx = sys.nx();
  const int ny = static_cast<int>(sys.pairs().size());
  FixedXResult out;

  LPProblem lp;
  lp.nvars = ny;
  lp.sense = sense;
  lp.objective.assign(static_cast<size_t>(ny), Rational(0));
  for (const auto& [p, c] : pair_objective) {
    if (p < 0 || p >= ny) throw std::invalid_argument("objective references an undeclared pair");
    lp.objective[static_cast<size_t>(p)] += c;
  }
  std::vector<char> nonneg(static_cast<size_t>(ny), 0);
  for (size_t r = 0; r < sys.rows().size(); ++r) {
    const auto& row = sys.rows()[r];
    LPRow lrow;
    lrow.rel = row.rel;
    lrow.rhs = row.rhs;
    for (const auto& [v, c] : row.terms) {
      if (v < nx) lrow.rhs -= c * x[static_cast<size_t>(v)];
      else lrow.terms.push_back({v - nx, c});
    }
    if (lrow.terms.empty()) {
      const LPRow probe = lrow;
      if (!row_ok(probe, {})) out.violated_constant_rows.push_back(static_cast<int>(r));
      continue;
    }
    if (lrow.terms.size() == 1) {
      const Rational& a = lrow.terms.front().second;
      const bool lower = (lrow.rel == Relation::ge && a.sign() > 0) || (lrow.rel == Relation::le && a.sign() < 0) ||
                         lrow.rel == Relation::eq;
      if (lower && (lrow.rhs / a).sign() >= 0) nonneg[static_cast<size_t>(lrow.terms.front().first)] = 1;
    }
    lp.rows.push_back(std::move(lrow));
  }
  if (!out.violated_constant_rows.empty()) {
    out.status = LPStatus::infeasible;
    return out;
  }
  for (int p = 0; p < ny; ++p) lp.domain.push_back(nonneg[static_cast<size_t>(p)] ? Domain::nonneg : Domain::free);

  const LPResult res = solve(lp);
  out.status = res.status;
  out.pivots = res.pivots;
  if (res.status != LPStatus::optimal) return out;
  out.value = res.value;
  out.y = res.point;
  const auto full = sys.assemble(x, out.y);
  for (size_t r = 0; r < sys.rows().size(); ++r) {
    if (!sys.rows()[r].satisfied_by(full)) throw std::logic_error("optimal point violates a system row");
    if (sys.rows()[r].slack(full).is_zero()) out.tight_rows.push_back(static_cast<int>(r));
  }
  return out;
}

FixedXResult lower_bound(const LinearSystem& sys, const Graph& g, const std::vector<Rational>& x) {
  if (sys.nx() != g.n()) throw std::invalid_argument("system and graph disagree on n");
  for (const auto& xi : x) {
    if (xi < 0 || xi > 1) throw std::invalid_argument("x must lie in [0,1]^n");
  }
  std::vector<std::pair<int, Rational>> objective;
  for (const auto& e : g.edges()) {
    const int p = sys.find_pair(e.u, e.v);
    if (p < 0) throw std::invalid_argument("system has no variable for edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    objective.push_back({p, 1});
  }
  FixedXResult res = optimize_at(sys, x, objective, Sense::minimize);
  if (res.status == LPStatus::infeasible) throw std::runtime_error("relaxation is infeasible at x");
  if (res.status == LPStatus::unbounded) throw std::runtime_error("relaxation is unbounded below at x");
  return res;
}

Rational lb(const LinearSystem& sys, const Graph& g, const std::vector<Rational>& x) {
  return lower_bound(sys, g, x).value;
}

LPProblem free_problem(const LinearSystem& sys) {
  LPProblem lp;
  lp.nvars = sys.num_vars();
  lp.domain.assign(static_cast<size_t>(lp.nvars), Domain::free);
  lp.objective.assign(static_cast<size_t>(lp.nvars), Rational(0));
  for (const auto& row : sys.rows()) lp.rows.push_back({row.terms, row.rel, row.rhs});
  return lp;
}

Feasibility feasible_point(const LinearSystem& sys) {
  const LPProblem lp = free_problem(sys);
  const LPResult res = solve(lp);
  Feasibility out;
  out.feasible = res.status != LPStatus::infeasible;
  if (out.feasible) out.point = res.point;
  else out.witness = res.farkas;
  return out;
}

}  // namespace hullcert
