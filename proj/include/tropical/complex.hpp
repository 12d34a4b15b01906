#pragma once

#include "tropical/polyhedron.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tropical {

/// A finite polyhedral complex, stored closed under taking faces.
///
/// Cells are canonical, sorted by dimension and then by value. Purity is
/// not required here; TropicalCycle enforces it downstream.
class PolyhedralComplex {
 public:
  PolyhedralComplex(std::size_t ambient_dim, std::span<const HPolyhedron> generating_cells);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<HPolyhedron>& cells() const noexcept { return cells_; }
  /// Indices of the codimension-one faces of cell i.
  const std::vector<std::size_t>& facets_of(std::size_t i) const { return facets_of_[i]; }
  std::vector<std::size_t> maximal_cells() const;
  std::vector<HPolyhedron> maximal_cell_values() const;
  std::size_t index_of(const HPolyhedron& cell) const;  // cells().size() when absent

  /// Pairwise: the intersection of two cells is empty or a face of both.
  bool intersections_are_faces() const;
  bool support_contains(std::span<const Rational> x) const;

 private:
  std::size_t ambient_dim_;
  std::vector<HPolyhedron> cells_;
  std::vector<std::vector<std::size_t>> facets_of_;
  std::vector<bool> is_facet_of_something_;
};

/// Refines every cell by {f >= 0}, {f = 0}, {f <= 0}.
PolyhedralComplex halfspace_triple_refine(const PolyhedralComplex& k, const LinearConstraint& f);

/// Cells are the intersections of cells of k with cells of l. Where |k|
/// leaves |l| the cells of k are cut by the hyperplanes of l instead, so the
/// support of k is kept; when |k| is inside |l| each output cell lies in a
/// cell of l.
PolyhedralComplex common_refinement(const PolyhedralComplex& k, const PolyhedralComplex& l);

/// All distinct normalized hyperplanes supporting the given cells.
std::vector<LinearConstraint> collect_hyperplanes(std::span<const HPolyhedron> cells);

}  // namespace tropical
