#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lexfan/polyhedron.hpp"

namespace lexfan {

struct Feasibility {
  bool feasible = false;
  std::optional<Point> witness;
  explicit operator bool() const noexcept { return feasible; }
};

namespace detail {

/// sum_j coef_j v_j  rel  rhs, with rational coefficients.
struct LinearRow {
  std::vector<Rational> coef;
  LexVec rhs;
  Relation rel = Relation::Ge;
};

inline bool row_less(const LinearRow& a, const LinearRow& b) {
  for (std::size_t j = 0; j < a.coef.size(); ++j)
    if (int c = cmp(a.coef[j], b.coef[j]); c != 0) return c < 0;
  if (auto c = a.rhs <=> b.rhs; c != 0) return c < 0;
  return a.rel < b.rel;
}

inline bool row_equal(const LinearRow& a, const LinearRow& b) {
  return a.coef == b.coef && a.rhs == b.rhs && a.rel == b.rel;
}

/// Positive rescaling so the first nonzero coefficient is +1 or -1.
inline void scale_row(LinearRow& r) {
  for (const auto& c : r.coef) {
    if (c == 0) continue;
    const Rational s = abs(c);
    if (s != 1) {
      for (auto& x : r.coef) x /= s;
      r.rhs /= s;
    }
    return;
  }
}

inline bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Drops satisfied constant rows and duplicates; returns false on a violated constant row.
inline bool tidy(std::vector<LinearRow>& rows) {
  std::vector<LinearRow> kept;
  kept.reserve(rows.size());
  for (auto& r : rows) {
    if (all_zero(r.coef)) {
      const int s = r.rhs.sign();  // 0 rel rhs
      const bool ok = r.rel == Relation::Ge ? s <= 0 : r.rel == Relation::Gt ? s < 0 : s == 0;
      if (!ok) return false;
      continue;
    }
    scale_row(r);
    kept.push_back(std::move(r));
  }
  std::sort(kept.begin(), kept.end(), row_less);
  kept.erase(std::unique(kept.begin(), kept.end(), row_equal), kept.end());
  rows = std::move(kept);
  return true;
}

struct EliminationStep {
  std::size_t var = 0;
  std::optional<LinearRow> equation;  // coefficient of var is 1
  std::vector<LinearRow> lower;       // coefficient of var is +1
  std::vector<LinearRow> upper;       // coefficient of var is -1
};

inline LexVec rest_value(const LinearRow& r, std::size_t var, const std::vector<LexVec>& values) {
  LexVec s(r.rhs.k());
  for (std::size_t j = 0; j < r.coef.size(); ++j)
    if (j != var && r.coef[j] != 0) s += r.coef[j] * values[j];
  return s;
}

}  // namespace detail

/// Decides whether some v in N_{Q^(k)} (an n x k rational matrix) satisfies every constraint
/// under the lexicographic order, and returns a witness when it does.
///
/// Fourier-Motzkin elimination over the ordered Q-vector space Q^(k): equations are used for
/// substitution, inequalities are combined pairwise with positive rational weights, and a
/// combination is strict when either parent is strict.
inline Feasibility feasible(std::size_t n, std::size_t k, std::span<const Constraint> system) {
  using detail::LinearRow;
  std::vector<LinearRow> rows;
  rows.reserve(system.size());
  for (const auto& c : system) {
    if (c.h.u.size() != n) throw DimensionMismatch("constraint normal has rank " + std::to_string(c.h.u.size()) +
                                                   ", expected " + std::to_string(n));
    if (c.h.gamma.k() != k) throw DimensionMismatch("constraint constant has length " +
                                                    std::to_string(c.h.gamma.k()) + ", expected " + std::to_string(k));
    LinearRow r;
    for (auto x : c.h.u) r.coef.emplace_back(static_cast<long>(x));
    r.rhs = c.h.gamma;
    r.rel = c.rel;
    rows.push_back(std::move(r));
  }

  std::vector<detail::EliminationStep> steps;
  for (std::size_t step = 0; step < n; ++step) {
    if (!detail::tidy(rows)) return {};
    const std::size_t var = n - 1 - step;
    detail::EliminationStep record;
    record.var = var;

    auto eq = std::find_if(rows.begin(), rows.end(),
                           [&](const LinearRow& r) { return r.rel == Relation::Eq && r.coef[var] != 0; });
    if (eq != rows.end()) {
      LinearRow e = *eq;
      rows.erase(eq);
      const Rational c = e.coef[var];
      for (auto& x : e.coef) x /= c;
      e.rhs /= c;
      for (auto& r : rows) {
        if (r.coef[var] == 0) continue;
        const Rational f = r.coef[var];
        for (std::size_t j = 0; j < n; ++j) r.coef[j] -= f * e.coef[j];
        r.rhs -= f * e.rhs;
      }
      record.equation = std::move(e);
    } else {
      std::vector<LinearRow> next;
      for (auto& r : rows) {
        const Rational c = r.coef[var];
        if (c == 0) {
          next.push_back(std::move(r));
          continue;
        }
        // Equations with a nonzero coefficient were handled above, so r is an inequality.
        const Rational s = abs(c);
        for (auto& x : r.coef) x /= s;
        r.rhs /= s;
        (c > 0 ? record.lower : record.upper).push_back(std::move(r));
      }
      for (const auto& lo : record.lower) {
        for (const auto& up : record.upper) {
          LinearRow sum;
          sum.coef.resize(n);
          for (std::size_t j = 0; j < n; ++j) sum.coef[j] = lo.coef[j] + up.coef[j];
          sum.coef[var] = 0;
          sum.rhs = lo.rhs + up.rhs;
          sum.rel = (lo.rel == Relation::Gt || up.rel == Relation::Gt) ? Relation::Gt : Relation::Ge;
          next.push_back(std::move(sum));
        }
      }
      rows = std::move(next);
    }
    steps.push_back(std::move(record));
  }
  if (!detail::tidy(rows)) return {};

  // Back-substitution, innermost variable first.
  std::vector<LexVec> values(n, LexVec(k));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const auto var = it->var;
    if (it->equation) {
      values[var] = it->equation->rhs - detail::rest_value(*it->equation, var, values);
      continue;
    }
    std::optional<LexVec> lo, up;
    bool lo_strict = false, up_strict = false;
    for (const auto& r : it->lower) {  // x + rest rel rhs
      LexVec b = r.rhs - detail::rest_value(r, var, values);
      const bool strict = r.rel == Relation::Gt;
      if (!lo || b > *lo) {
        lo = std::move(b);
        lo_strict = strict;
      } else if (b == *lo) {
        lo_strict = lo_strict || strict;
      }
    }
    for (const auto& r : it->upper) {  // -x + rest rel rhs
      LexVec b = detail::rest_value(r, var, values) - r.rhs;
      const bool strict = r.rel == Relation::Gt;
      if (!up || b < *up) {
        up = std::move(b);
        up_strict = strict;
      } else if (b == *up) {
        up_strict = up_strict || strict;
      }
    }
    const LexVec step = unit_lexvec(k, 0);
    if (lo && up)
      values[var] = (*lo == *up) ? *lo : (*lo + *up) / Rational(2);
    else if (lo)
      values[var] = lo_strict ? *lo + step : *lo;
    else if (up)
      values[var] = up_strict ? *up - step : *up;
    else
      values[var] = LexVec(k);
  }
  return {true, Point(std::move(values), k)};
}

inline Feasibility feasible(std::size_t n, std::size_t k, std::initializer_list<Constraint> system) {
  return feasible(n, k, std::span<const Constraint>(system.begin(), system.size()));
}

/// Constraints of P as non-strict inequalities.
inline std::vector<Constraint> as_constraints(const Polyhedron& p) {
  std::vector<Constraint> cs;
  for (const auto& h : p.halfspaces()) cs.push_back({h, Relation::Ge});
  return cs;
}

inline Feasibility feasible(const Polyhedron& p) {
  if (p.trivially_empty()) return {};
  const auto cs = as_constraints(p);
  return feasible(p.n(), p.k(), cs);
}

inline bool is_empty(const Polyhedron& p) { return !feasible(p).feasible; }

/// Q is a subset of P, decided by infeasibility of Q together with the complement of each
/// halfspace of P.
inline bool contains(const Polyhedron& p, const Polyhedron& q) {
  if (p.n() != q.n() || p.k() != q.k()) throw DimensionMismatch("containment between polyhedra of different shape");
  if (q.trivially_empty()) return true;
  auto cs = as_constraints(q);
  for (const auto& h : p.halfspaces()) {
    cs.push_back({h.negated(), Relation::Gt});
    const bool escapes = feasible(q.n(), q.k(), cs).feasible;
    cs.pop_back();
    if (escapes) return false;
  }
  return true;
}

inline bool same_set(const Polyhedron& a, const Polyhedron& b) { return contains(a, b) && contains(b, a); }

}  // namespace lexfan
