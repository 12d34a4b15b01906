#include "tropical/matrix.hpp"

namespace tropical {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(lead_row, pivot);
    Rational inv = 1 / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != lead_row && sgn(m(i, col)) != 0) m.add_row_multiple(i, lead_row, -m(i, col));
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(RatMatrix::from_rows(rows, cols));
}

std::vector<RatVector> null_space(const RatMatrix& m) {
  RatMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v = zero_rat_vector(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_left(const std::vector<RatVector>& basis, const RatVector& v) {
  // Solve basis^T x = v via RREF of the augmented transpose.
  const std::size_t k = basis.size();
  const std::size_t n = v.size();
  RatMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis[j][i];
    aug(i, k) = v[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  RatVector x = zero_rat_vector(k);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, k);
  return x;
}

Integer determinant(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = t / prev;  // exact by Bareiss
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace tropical
