#pragma once

// Simplicial fans, the simplicial completion of a fan cycle, and the
// piecewise-linear functions dual to the rays of a complete simplicial fan.

#include "tropical/complex.hpp"
#include "tropical/cycle.hpp"
#include "tropical/function.hpp"

#include <cstddef>
#include <vector>

namespace tropical {

/// A fan of pointed cones, each spanned by linearly independent rays.
/// Cones are stored as sorted ray index lists.
class SimplicialFan {
 public:
  /// Throws NotSimplicial when some cone's generators are dependent.
  SimplicialFan(std::size_t ambient_dim, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> maximal_cones);
  /// Throws NotFan if a cell is not a cone, NotSimplicial if a cone is not
  /// pointed or not spanned by exactly dim-many rays.
  static SimplicialFan from_complex(const PolyhedralComplex& k);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<std::vector<std::size_t>>& maximal_cones() const noexcept { return maximal_cones_; }
  HPolyhedron cone(const std::vector<std::size_t>& ray_indices) const;
  std::vector<HPolyhedron> maximal_cone_values() const;
  /// Every cone of the given dimension (faces of maximal cones included).
  std::vector<std::vector<std::size_t>> cones_of_dim(std::size_t d) const;
  PolyhedralComplex complex() const;

  /// Pure of full dimension with every codimension-one cone in exactly two
  /// maximal cones, hence covering R^r.
  bool is_complete() const;

 private:
  std::size_t ambient_dim_;
  std::vector<IntVector> rays_;
  std::vector<std::vector<std::size_t>> maximal_cones_;
};

struct SimplicialCompletion {
  FanCycle refined;     // the input cycle on cones of theta
  SimplicialFan theta;  // complete and simplicial
};

/// Refines the arrangement of all hyperplanes of c's cells and the
/// coordinate hyperplanes into simplicial cones (pulling triangulation with
/// respect to a fixed ray order, no new rays), and rewrites c on it.
SimplicialCompletion complete_to_simplicial(const FanCycle& c);

/// The function linear on each cone of theta with value 1 on ray i and 0 on
/// every other ray. Throws NotComplete unless theta is complete.
PiecewiseAffineFunction simplicial_ray_function(const SimplicialFan& theta, std::size_t i);
/// As above for a fan given as a complex; throws NotSimplicial first.
PiecewiseAffineFunction simplicial_ray_function(const PolyhedralComplex& theta, std::size_t i);

}  // namespace tropical
