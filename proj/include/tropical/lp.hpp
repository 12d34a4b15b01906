#pragma once

// Exact rational linear programming: two-phase primal simplex with Bland's
// anti-cycling rule over free variables.

#include "tropical/arith.hpp"

#include <span>

namespace tropical {

/// normal . x (>= or =) offset, depending on which list it sits in.
struct LinearConstraint {
  RatVector normal;
  Rational offset;

  Rational evaluate(std::span<const Rational> x) const { return dot(normal, x) - offset; }
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

std::strong_ordering operator<=>(const LinearConstraint& a, const LinearConstraint& b);

namespace lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  RatVector point;
};

/// max objective . x subject to inequalities (>=) and equalities over x in Q^n.
Solution maximize(const RatVector& objective, std::span<const LinearConstraint> inequalities,
                  std::span<const LinearConstraint> equalities);

Solution minimize(const RatVector& objective, std::span<const LinearConstraint> inequalities,
                  std::span<const LinearConstraint> equalities);

}  // namespace lp
}  // namespace tropical
