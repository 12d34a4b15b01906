#include "tropical/lattice.hpp"

#include "tropical/error.hpp"

#include <algorithm>

namespace tropical {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

}  // namespace

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw TropicalError(ErrorCode::ZeroVector, "primitive of the zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> f;
  for (std::size_t i = 0; i < rank; ++i) f.push_back(diagonal(i, i));
  return f;
}

SmithDecomposition smith_decomposition(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithDecomposition s{IntMatrix::identity(rows), m, IntMatrix::identity(cols), IntMatrix::identity(cols), 0};
  IntMatrix& d = s.diagonal;

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_row_multiple(dst, src, f);
    s.left.add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_col_multiple(dst, src, f);
    s.right.add_col_multiple(dst, src, f);
    s.right_inverse.add_row_multiple(src, dst, -f);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    s.left.swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    s.right.swap_cols(a, b);
    s.right_inverse.swap_rows(a, b);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::size_t best_i = rows, best_j = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d(i, j) == 0) continue;
        if (best_i == rows || abs_value(d(i, j)) < abs_value(d(best_i, best_j))) {
          best_i = i;
          best_j = j;
        }
      }
    if (best_i == rows) break;
    row_swap(t, best_i);
    col_swap(t, best_j);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        row_op(i, t, -floor_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) {
          row_swap(i, t);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        col_op(j, t, -floor_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) {
          col_swap(j, t);
          changed = true;
        }
      }
      if (changed) continue;
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows && !dirty; ++i) dirty = d(i, t) != 0;
      for (std::size_t j = t + 1; j < cols && !dirty; ++j) dirty = d(t, j) != 0;
      if (dirty) continue;
      // Divisibility d_t | every trailing entry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          Integer r;
          mpz_fdiv_r(r.get_mpz_t(), d(i, j).get_mpz_t(), d(t, t).get_mpz_t());
          if (r != 0) {
            bad = i;
            break;
          }
        }
      if (bad == rows) break;
      row_op(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.left.negate_row(t);
    }
    s.rank = t + 1;
  }
  return s;
}

std::vector<IntVector> hermite_normal_form(const std::vector<IntVector>& input, std::size_t cols) {
  std::vector<IntVector> a = input;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    bool found = false;
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        if (best == a.size() || abs_value(a[i][col]) < abs_value(a[best][col])) best = i;
      }
      if (best == a.size()) break;
      found = true;
      std::swap(a[r], a[best]);
      bool clear = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        Integer q = floor_div(a[i][col], a[r][col]);
        for (std::size_t j = col; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][col] != 0) clear = false;
      }
      if (clear) break;
    }
    if (!found) continue;
    if (a[r][col] < 0) {
      for (auto& x : a[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(a[i][col], a[r][col]);
      if (q == 0) continue;
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

LatticeBasis::LatticeBasis(std::size_t ambient_rank, const std::vector<IntVector>& generators)
    : ambient_rank_(ambient_rank) {
  for (const auto& g : generators) {
    if (g.size() != ambient_rank) {
      throw TropicalError(ErrorCode::DimMismatch, "generator length differs from ambient rank");
    }
  }
  basis_ = hermite_normal_form(generators, ambient_rank);
}

std::optional<RatVector> LatticeBasis::coordinates(const IntVector& v) const {
  RatVector residual = to_rational(v);
  RatVector coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& row = basis_[i];
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    coords[i] = residual[p] / Rational(row[p]);
    if (sgn(coords[i]) == 0) continue;
    for (std::size_t j = p; j < ambient_rank_; ++j) residual[j] -= coords[i] * row[j];
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool LatticeBasis::in_span(const RatVector& v) const {
  return coordinates(primitive_integer_multiple(v)).has_value();
}

bool LatticeBasis::contains(const IntVector& v) const {
  auto c = coordinates(v);
  return c && is_integral(*c);
}

IntVector LatticeBasis::reduce(IntVector v) const {
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    Integer q = floor_div(v[p], row[p]);
    if (q == 0) continue;
    for (std::size_t j = p; j < ambient_rank_; ++j) v[j] -= q * row[j];
  }
  return v;
}

LatticeBasis LatticeBasis::operator+(const LatticeBasis& other) const {
  if (other.ambient_rank_ != ambient_rank_) {
    throw TropicalError(ErrorCode::DimMismatch, "lattice sum across ambient ranks");
  }
  std::vector<IntVector> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return LatticeBasis(ambient_rank_, gens);
}

Integer lattice_index(const LatticeBasis& sub, const LatticeBasis& sup) {
  if (sub.ambient_rank() != sup.ambient_rank() || sub.rank() != sup.rank()) {
    throw TropicalError(ErrorCode::RankMismatch, "sublattice and lattice span different spaces");
  }
  const std::size_t k = sub.rank();
  if (k == 0) return 1;
  IntMatrix coords(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = sup.coordinates(sub.basis()[i]);
    if (!c) throw TropicalError(ErrorCode::RankMismatch, "sublattice is not in the span of the lattice");
    for (std::size_t j = 0; j < k; ++j) {
      if ((*c)[j].get_den() != 1) {
        throw TropicalError(ErrorCode::NotSublattice, "generator " + to_string(sub.basis()[i]) + " is not in the lattice");
      }
      coords(i, j) = (*c)[j].get_num();
    }
  }
  Integer index = 1;
  for (const auto& f : smith_decomposition(coords).invariant_factors()) index *= f;
  return index;
}

LatticeBasis saturate_span(std::size_t ambient_rank, const std::vector<IntVector>& vectors) {
  std::vector<IntVector> rows;
  for (const auto& v : vectors) {
    if (v.size() != ambient_rank) throw TropicalError(ErrorCode::DimMismatch, "vector length differs from ambient rank");
    if (!is_zero(v)) rows.push_back(v);
  }
  if (rows.empty()) return LatticeBasis(ambient_rank);
  auto snf = smith_decomposition(IntMatrix::from_rows(rows, ambient_rank));
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < snf.rank; ++i) basis.push_back(snf.right_inverse.row_vector(i));
  return LatticeBasis(ambient_rank, basis);
}

LatticeBasis saturate_span(std::size_t ambient_rank, const std::vector<RatVector>& vectors) {
  std::vector<IntVector> scaled;
  scaled.reserve(vectors.size());
  for (const auto& v : vectors) scaled.push_back(primitive_integer_multiple(v));
  return saturate_span(ambient_rank, scaled);
}

QuotientGenerator quotient_normal_vector(const LatticeBasis& tau, const LatticeBasis& sigma,
                                         const RatVector& interior_direction) {
  if (tau.ambient_rank() != sigma.ambient_rank() || interior_direction.size() != sigma.ambient_rank()) {
    throw TropicalError(ErrorCode::DimMismatch, "quotient_normal_vector: ambient ranks differ");
  }
  if (sigma.rank() != tau.rank() + 1) {
    throw TropicalError(ErrorCode::RankGapNotOne, "rank(sigma) - rank(tau) = " +
                                                      std::to_string(static_cast<long>(sigma.rank()) - static_cast<long>(tau.rank())));
  }
  const std::size_t k = sigma.rank();
  const std::size_t r = sigma.ambient_rank();

  // tau's basis in sigma coordinates.
  IntMatrix t(tau.rank(), k);
  for (std::size_t i = 0; i < tau.rank(); ++i) {
    auto c = sigma.coordinates(tau.basis()[i]);
    if (!c || !is_integral(*c)) throw TropicalError(ErrorCode::NotSublattice, "tau is not contained in sigma");
    for (std::size_t j = 0; j < k; ++j) t(i, j) = (*c)[j].get_num();
  }
  auto snf = smith_decomposition(t);

  IntVector scaled = primitive_integer_multiple(interior_direction);
  auto dir = sigma.coordinates(scaled);
  if (!dir) throw TropicalError(ErrorCode::RankMismatch, "direction is not in the span of sigma");
  // The functional x -> (x V)_{k-1} vanishes on tau and is 1 on the free generator.
  Rational side = 0;
  for (std::size_t j = 0; j < k; ++j) side += (*dir)[j] * snf.right(j, k - 1);
  if (sgn(side) == 0) throw TropicalError(ErrorCode::DirectionInTau, "direction lies in span(tau)");

  IntVector w = zero_int_vector(r);
  for (std::size_t j = 0; j < k; ++j) {
    const Integer& c = snf.right_inverse(k - 1, j);
    if (c == 0) continue;
    for (std::size_t x = 0; x < r; ++x) w[x] += c * sigma.basis()[j][x];
  }
  if (sgn(side) < 0) {
    for (auto& x : w) x = -x;
  }
  return {tau.reduce(std::move(w)), 1};
}

}  // namespace tropical
