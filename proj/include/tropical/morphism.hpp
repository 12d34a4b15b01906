#pragma once

#include "tropical/cycle.hpp"
#include "tropical/function.hpp"
#include "tropical/matrix.hpp"

#include <cstddef>

namespace tropical {

/// x -> matrix * x + shift, from R^n to R^m.
class IntegerAffineMap {
 public:
  /// Throws DimMismatch when shift has the wrong length.
  IntegerAffineMap(IntMatrix matrix, RatVector shift);
  static IntegerAffineMap linear(IntMatrix matrix);
  static IntegerAffineMap identity(std::size_t n);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  const RatVector& shift() const noexcept { return shift_; }
  std::size_t source_dim() const noexcept { return matrix_.cols(); }
  std::size_t target_dim() const noexcept { return matrix_.rows(); }
  RatVector operator()(std::span<const Rational> x) const;

  friend bool operator==(const IntegerAffineMap&, const IntegerAffineMap&) = default;

 private:
  IntMatrix matrix_;
  RatVector shift_;
};

/// phi o f. Preimages of the domain cells form the new domain; nested
/// preimages keep only the inclusion-maximal ones.
PiecewiseAffineFunction pull_back(const IntegerAffineMap& f, const PiecewiseAffineFunction& phi);

/// f_* C. Facets whose image has lower dimension are discarded; the others
/// contribute weight times the index of f(Lambda_sigma) in the lattice of the
/// image cell, summed over a common refinement of the images.
TropicalCycle push_forward(const IntegerAffineMap& f, const TropicalCycle& c);

/// The data showing C - C(mu e_i) is rationally equivalent to zero:
/// f_*(phi . Z) = C - C(mu e_i).
struct TranslationWitness {
  TropicalCycle z;              // C x R
  PiecewiseAffineFunction phi;  // bounded, depends on the last coordinate t only
  IntegerAffineMap f;           // (x, t) -> x + t e_i
};

/// Throws ZeroShift for mu = 0 and DimMismatch for i outside [0, r).
TranslationWitness translation_witness(const TropicalCycle& c, std::size_t i, const Rational& mu);

/// f_*(phi . Z) for the witness.
TropicalCycle witness_image(const TranslationWitness& w);

}  // namespace tropical
