#include "tropical/lp.hpp"

#include "tropical/matrix.hpp"

#include <cassert>
#include <optional>

namespace tropical {

std::strong_ordering operator<=>(const LinearConstraint& a, const LinearConstraint& b) {
  if (auto c = compare(a.normal, b.normal); c != 0) return c;
  int c = cmp(a.offset, b.offset);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

namespace lp {

namespace {

// Dense tableau in equality standard form: rows[i] . vars = rhs[i], vars >= 0.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), a_(rows, RatVector(cols + 1, Rational(0))), basis_(rows) {}

  Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  Rational& rhs(std::size_t i) { return a_[i][cols_]; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cols_; }

  void remove_row(std::size_t i) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  void pivot(std::size_t row, std::size_t col, RatVector& reduced) {
    RatVector& pr = a_[row];
    Rational inv = 1 / pr[col];
    for (auto& x : pr) {
      if (sgn(x) != 0) x *= inv;
    }
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == row || sgn(a_[i][col]) == 0) continue;
      Rational f = a_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(pr[j]) != 0) a_[i][j] -= f * pr[j];
      }
    }
    if (sgn(reduced[col]) != 0) {
      Rational f = reduced[col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(pr[j]) != 0) reduced[j] -= f * pr[j];
      }
    }
    basis_[row] = col;
  }

  // Reduced costs for maximising cost . vars; entry cols_ holds -objective value.
  RatVector reduced_costs(const RatVector& cost) const {
    RatVector d(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) d[j] = cost[j];
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(a_[i][j]) != 0) d[j] -= cb * a_[i][j];
      }
    }
    return d;
  }

  // Returns false when unbounded.
  bool optimize(RatVector& reduced, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && sgn(reduced[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = a_.size();
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        Rational ratio = a_[i][cols_] / a_[i][enter];
        if (leave == a_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == a_.size()) return false;
      pivot(leave, enter, reduced);
    }
  }

 private:
  std::size_t cols_;
  std::vector<RatVector> a_;
  std::vector<std::size_t> basis_;
};

// max c.y subject to A y >= b with y free.
Solution solve_free(const RatVector& c, const std::vector<RatVector>& a, const RatVector& b) {
  const std::size_t k = c.size();
  const std::size_t m = a.size();
  Solution out;
  if (m == 0) {
    if (!is_zero(c)) {
      out.status = Status::Unbounded;
      return out;
    }
    out.status = Status::Optimal;
    out.value = 0;
    out.point = zero_rat_vector(k);
    return out;
  }

  std::size_t artificial_count = 0;
  for (const auto& bi : b) {
    if (sgn(bi) > 0) ++artificial_count;
  }
  // Columns: p (k), q (k), slack (m), artificial.
  const std::size_t slack0 = 2 * k;
  const std::size_t art0 = slack0 + m;
  const std::size_t cols = art0 + artificial_count;
  Tableau t(m, cols);
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) <= 0;
    const int s = flip ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      t.at(i, j) = s * a[i][j];
      t.at(i, k + j) = -s * a[i][j];
    }
    t.at(i, slack0 + i) = -s;
    t.rhs(i) = s * b[i];
    if (flip) {
      t.basic(i) = slack0 + i;
    } else {
      t.at(i, next_art) = 1;
      t.basic(i) = next_art++;
    }
  }

  std::vector<bool> allowed(cols, true);
  if (artificial_count > 0) {
    RatVector phase1(cols, Rational(0));
    for (std::size_t j = art0; j < cols; ++j) phase1[j] = -1;
    RatVector reduced = t.reduced_costs(phase1);
    t.optimize(reduced, allowed);
    // reduced[cols] is minus the phase-one objective, which is <= 0.
    if (sgn(reduced[cols]) != 0) {
      out.status = Status::Infeasible;
      return out;
    }
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basic(i) < art0) {
        ++i;
        continue;
      }
      std::size_t col = art0;
      for (std::size_t j = 0; j < art0; ++j) {
        if (sgn(t.at(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col == art0) {
        t.remove_row(i);
        continue;
      }
      t.pivot(i, col, reduced);
      ++i;
    }
    for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;
  }

  RatVector cost(cols, Rational(0));
  for (std::size_t j = 0; j < k; ++j) {
    cost[j] = c[j];
    cost[k + j] = -c[j];
  }
  RatVector reduced = t.reduced_costs(cost);
  if (!t.optimize(reduced, allowed)) {
    out.status = Status::Unbounded;
    return out;
  }
  RatVector vars(cols, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) vars[t.basic(i)] = t.rhs(i);
  out.status = Status::Optimal;
  out.point.resize(k);
  for (std::size_t j = 0; j < k; ++j) out.point[j] = vars[j] - vars[k + j];
  out.value = dot(c, out.point);
  return out;
}

}  // namespace

Solution maximize(const RatVector& objective, std::span<const LinearConstraint> inequalities,
                  std::span<const LinearConstraint> equalities) {
  const std::size_t n = objective.size();
  RatVector origin = zero_rat_vector(n);
  std::vector<RatVector> directions;
  if (equalities.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      RatVector e = zero_rat_vector(n);
      e[j] = 1;
      directions.push_back(std::move(e));
    }
  } else {
    RatMatrix aug(equalities.size(), n + 1);
    for (std::size_t i = 0; i < equalities.size(); ++i) {
      assert(equalities[i].normal.size() == n);
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = equalities[i].normal[j];
      aug(i, n) = equalities[i].offset;
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == n) return {};
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      origin[pivots[i]] = aug(i, n);
      is_pivot[pivots[i]] = true;
    }
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      RatVector v = zero_rat_vector(n);
      v[f] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug(i, f);
      directions.push_back(std::move(v));
    }
  }

  const std::size_t k = directions.size();
  RatVector c(k);
  for (std::size_t j = 0; j < k; ++j) c[j] = dot(objective, directions[j]);
  std::vector<RatVector> a;
  RatVector b;
  for (const auto& ineq : inequalities) {
    assert(ineq.normal.size() == n);
    RatVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(ineq.normal, directions[j]);
    Rational rhs = ineq.offset - dot(ineq.normal, origin);
    if (is_zero(row)) {
      if (sgn(rhs) > 0) return {};
      continue;
    }
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }

  Solution reduced = solve_free(c, a, b);
  if (reduced.status != Status::Optimal) return reduced;
  Solution out;
  out.status = Status::Optimal;
  out.point = origin;
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(reduced.point[j]) == 0) continue;
    for (std::size_t x = 0; x < n; ++x) out.point[x] += reduced.point[j] * directions[j][x];
  }
  out.value = dot(objective, out.point);
  return out;
}

Solution minimize(const RatVector& objective, std::span<const LinearConstraint> inequalities,
                  std::span<const LinearConstraint> equalities) {
  RatVector neg(objective.size());
  for (std::size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
  Solution s = maximize(neg, inequalities, equalities);
  if (s.status == Status::Optimal) s.value = -s.value;
  return s;
}

}  // namespace lp
}  // namespace tropical
