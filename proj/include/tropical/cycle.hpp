#pragma once

#include "tropical/complex.hpp"
#include "tropical/polyhedron.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tropical {

struct WeightedCell {
  HPolyhedron cell;
  Integer weight;

  friend bool operator==(const WeightedCell&, const WeightedCell&) = default;
};

/// A weighted pure-dimensional polyhedral complex, stored by its facets.
///
/// The zero cycle has no facets and no dimension and is accepted wherever a
/// cycle of any dimension is. Facets are canonical and sorted; cells listed
/// twice have their weights summed. Balancing is not enforced at
/// construction, see validate().
class TropicalCycle {
 public:
  static TropicalCycle zero(std::size_t ambient_dim);
  TropicalCycle(std::size_t ambient_dim, std::vector<WeightedCell> facets);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// Dimension of the facets; nullopt for the zero cycle.
  std::optional<int> dimension() const noexcept { return dim_; }
  const std::vector<WeightedCell>& facets() const noexcept { return facets_; }
  /// True when every weight is zero (or there are no facets).
  bool is_zero() const;
  PolyhedralComplex complex() const;

  friend bool operator==(const TropicalCycle&, const TropicalCycle&) = default;

 private:
  std::size_t ambient_dim_;
  std::optional<int> dim_;
  std::vector<WeightedCell> facets_;
};

/// Balancing data at one codimension-one cell.
struct RidgeBalance {
  HPolyhedron ridge;
  /// Sum of weight times primitive normal over the facets containing ridge.
  IntVector sum;
  bool balanced = true;  // sum lies in the span of the ridge's lattice
};

struct ValidationReport {
  std::vector<std::string> purity_violations;
  std::vector<std::string> complex_violations;
  std::vector<RidgeBalance> ridges;

  std::vector<RidgeBalance> unbalanced() const;
  bool valid() const;
};

ValidationReport validate(const TropicalCycle& c);

/// Facets of c containing each codimension-one cell, with primitive normals.
struct RidgeStar {
  HPolyhedron ridge;
  std::vector<std::size_t> facets;
  std::vector<IntVector> normals;
};
std::vector<RidgeStar> ridge_stars(const TropicalCycle& c);
std::vector<RidgeStar> ridge_stars(std::span<const HPolyhedron> facets);

/// Refines the given cells to a common complex, sums weights on equal cells
/// and drops zero weights. All cells must have dimension dim.
TropicalCycle assemble(std::size_t ambient_dim, std::span<const WeightedCell> cells);

TropicalCycle normalize(const TropicalCycle& c);
bool equals(const TropicalCycle& c, const TropicalCycle& d);
TropicalCycle scalar_multiply(const Integer& n, const TropicalCycle& c);
TropicalCycle add(const TropicalCycle& c, const TropicalCycle& d);
TropicalCycle cross_product(const TropicalCycle& c, const TropicalCycle& e);
TropicalCycle translate(const TropicalCycle& c, const RatVector& v);
Integer degree_zero_cycle(const TropicalCycle& c);

/// A cycle all of whose cells are cones with apex at the origin.
class FanCycle {
 public:
  /// Throws NotFan unless every facet is a cone.
  explicit FanCycle(TropicalCycle c);

  const TropicalCycle& cycle() const noexcept { return cycle_; }
  operator const TropicalCycle&() const noexcept { return cycle_; }

 private:
  TropicalCycle cycle_;
};

bool is_fan_cycle(const TropicalCycle& c);

}  // namespace tropical
