#pragma once

// Tropical rational functions: continuous piecewise-affine functions on a
// polyhedral complex, and their divisors on cycles.

#include "tropical/cycle.hpp"
#include "tropical/polyhedron.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tropical {

/// x -> linear . x + constant
struct AffinePiece {
  RatVector linear;
  Rational constant;

  Rational evaluate(std::span<const Rational> x) const { return dot(linear, x) + constant; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// max over terms of exponent . x + coefficient. Duplicate exponents keep
/// the larger coefficient.
class TropicalPolynomial {
 public:
  struct Term {
    IntVector exponent;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Throws EmptyInput for no terms, DimMismatch for ragged exponents.
  explicit TropicalPolynomial(std::vector<Term> terms);

  std::size_t ambient_dim() const noexcept { return terms_.front().exponent.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  Rational evaluate(std::span<const Rational> x) const;

 private:
  std::vector<Term> terms_;
};

/// A continuous function that is affine on each cell of its domain.
///
/// The domain cells must meet in common faces and adjacent pieces must agree
/// on shared faces; both are checked on construction (InvalidFunction).
/// Linear parts are rational in general; functions built from tropical
/// polynomials, pull-backs and translation witnesses have integral slopes.
class PiecewiseAffineFunction {
 public:
  PiecewiseAffineFunction(std::size_t ambient_dim, std::vector<std::pair<HPolyhedron, AffinePiece>> pieces);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<std::pair<HPolyhedron, AffinePiece>>& pieces() const noexcept { return pieces_; }
  bool has_integral_slopes() const;
  /// Throws SupportNotCovered outside the domain.
  Rational evaluate(std::span<const Rational> x) const;
  bool domain_contains(std::span<const Rational> x) const;

 private:
  std::size_t ambient_dim_;
  std::vector<std::pair<HPolyhedron, AffinePiece>> pieces_;
};

/// Domain: the closed full-dimensional regions where each term attains the max.
PiecewiseAffineFunction from_tropical_polynomial(const TropicalPolynomial& p);

struct Restriction {
  TropicalCycle refined;
  std::vector<AffinePiece> pieces;  // parallel to refined.facets()
};

/// Splits every facet of c along the domain of phi. Throws SupportNotCovered
/// when |c| is not inside the domain.
Restriction restrict_to(const PiecewiseAffineFunction& phi, const TropicalCycle& c);

/// A cell with a rational weight; used by the exact divisor core, where
/// intermediate weights may be fractional.
struct RationalWeightedCell {
  HPolyhedron cell;
  Rational weight;
};

/// Weights of phi . X on the codimension-one cells of X refined along phi,
/// zeros included. X must be balanced (InvalidCycle otherwise).
std::vector<RationalWeightedCell> divisor_weights(const PiecewiseAffineFunction& phi, std::size_t ambient_dim,
                                                  std::span<const RationalWeightedCell> facets);

/// phi . C, normalized. Throws InvalidCycle when validate(c) fails,
/// SupportNotCovered, and NonIntegralWeight if a weight is not an integer.
TropicalCycle divisor(const PiecewiseAffineFunction& phi, const TropicalCycle& c);
/// As divisor, trusting that c is valid.
TropicalCycle divisor_of_valid(const PiecewiseAffineFunction& phi, const TropicalCycle& c);

/// phi is bounded on |c|: every linear part vanishes on the recession cone
/// of its cell.
bool is_bounded(const PiecewiseAffineFunction& phi, const TropicalCycle& c);

}  // namespace tropical
