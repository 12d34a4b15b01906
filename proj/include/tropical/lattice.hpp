#pragma once

// Integer lattices in Z^r: normal forms, indices, saturation and the lattice
// normal vectors that enter every weight computation.

#include "tropical/arith.hpp"
#include "tropical/matrix.hpp"

#include <cstddef>
#include <vector>

namespace tropical {

/// v / gcd(v). Throws ZeroVector on the zero vector.
IntVector primitive(const IntVector& v);

struct SmithDecomposition {
  IntMatrix left;      // U, unimodular
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, unimodular
  IntMatrix right_inverse;
  std::size_t rank = 0;

  /// The nonzero invariant factors d_1 | d_2 | ... (all positive).
  std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_decomposition(const IntMatrix& m);

/// Row-style Hermite normal form with positive pivots and entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped.
std::vector<IntVector> hermite_normal_form(const std::vector<IntVector>& rows, std::size_t cols);

/// A sublattice of Z^r, stored as its Hermite basis so that equality of
/// lattices is equality of values.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t ambient_rank, const std::vector<IntVector>& generators = {});

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }

  /// Coordinates of v in the Hermite basis; nullopt if v lies outside the
  /// rational span.
  std::optional<RatVector> coordinates(const IntVector& v) const;
  bool in_span(const RatVector& v) const;
  bool contains(const IntVector& v) const;

  /// Reduces v modulo this lattice to the residue with every pivot
  /// coordinate in [0, pivot).
  IntVector reduce(IntVector v) const;

  LatticeBasis operator+(const LatticeBasis& other) const;
  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  std::size_t ambient_rank_;
  std::vector<IntVector> basis_;
};

/// |sup / sub| for sub a full-rank sublattice of sup (same rational span).
Integer lattice_index(const LatticeBasis& sub, const LatticeBasis& sup);

/// span_Q(vectors) intersected with Z^r.
LatticeBasis saturate_span(std::size_t ambient_rank, const std::vector<IntVector>& vectors);
LatticeBasis saturate_span(std::size_t ambient_rank, const std::vector<RatVector>& vectors);

struct QuotientGenerator {
  IntVector representative;
  Rational denominator_scale = 1;
};

/// Integer representative of the generator of sigma/tau (rank gap one)
/// lying on the same side of span(tau) as interior_direction, reduced modulo
/// tau.
QuotientGenerator quotient_normal_vector(const LatticeBasis& tau, const LatticeBasis& sigma,
                                         const RatVector& interior_direction);

}  // namespace tropical
