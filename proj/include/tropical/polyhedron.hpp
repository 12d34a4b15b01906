#pragma once

// Exact convex polyhedra in Q^r given by inequalities a.x >= b and
// equalities a.x = b.

#include "tropical/arith.hpp"
#include "tropical/lattice.hpp"
#include "tropical/lp.hpp"
#include "tropical/matrix.hpp"

#include <compare>
#include <optional>
#include <cstddef>
#include <span>
#include <vector>

namespace tropical {

/// A rational polyhedron in H-representation.
///
/// The canonical form has the affine hull as equalities in reduced row
/// echelon form, every inequality reduced modulo the hull, scaled to a
/// primitive integer normal, irredundant and sorted. Two canonical
/// polyhedra describe the same set iff they compare equal, which is what
/// lets cells be used as map keys throughout the library.
class HPolyhedron {
 public:
  explicit HPolyhedron(std::size_t ambient_dim, std::vector<LinearConstraint> inequalities = {},
                       std::vector<LinearConstraint> equalities = {});

  static HPolyhedron full_space(std::size_t ambient_dim);
  static HPolyhedron empty(std::size_t ambient_dim);
  static HPolyhedron point(const RatVector& p);
  /// The cone generated by linearly independent generators.
  static HPolyhedron simplicial_cone(std::size_t ambient_dim, const std::vector<IntVector>& generators);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<LinearConstraint>& inequalities() const noexcept { return inequalities_; }
  const std::vector<LinearConstraint>& equalities() const noexcept { return equalities_; }
  bool is_canonical() const noexcept { return canonical_; }
  /// Meaningful on canonical values only.
  bool is_empty() const noexcept { return empty_; }

  friend HPolyhedron canonicalize(const HPolyhedron& p);
  friend std::strong_ordering operator<=>(const HPolyhedron& a, const HPolyhedron& b);
  friend bool operator==(const HPolyhedron& a, const HPolyhedron& b) { return (a <=> b) == 0; }

 private:
  std::size_t ambient_dim_;
  std::vector<LinearConstraint> inequalities_;
  std::vector<LinearConstraint> equalities_;
  bool canonical_ = false;
  bool empty_ = false;
};

HPolyhedron canonicalize(const HPolyhedron& p);

/// Dimension of the affine hull, -1 when empty.
int dimension(const HPolyhedron& p);

/// All faces of the given codimension (relative to dimension(p)), canonical
/// and sorted. Throws BadCodim outside [0, dimension(p)].
std::vector<HPolyhedron> faces(const HPolyhedron& p, int codim);

/// rc(p) = {v : A v >= 0, A_eq v = 0}. Throws EmptyInput on an empty p.
HPolyhedron recession_cone(const HPolyhedron& p);

HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& q);

/// Point strictly inside every non-implicit inequality: the optimum of
/// max t subject to a.x - t >= b, t <= 1 (a deterministic simplex run).
RatVector relative_interior_point(const HPolyhedron& p);

bool contains_point(const HPolyhedron& p, std::span<const Rational> x);
/// inner is a subset of outer.
bool contains(const HPolyhedron& outer, const HPolyhedron& inner);
/// face is a (nonempty) face of p.
bool is_face(const HPolyhedron& face, const HPolyhedron& p);
/// Nonempty, homogeneous constraints: a cone with apex at the origin.
bool is_cone(const HPolyhedron& p);

/// Basis of the linear space parallel to the affine hull.
std::vector<RatVector> direction_space(const HPolyhedron& p);
/// The saturated lattice of the direction space.
LatticeBasis lattice(const HPolyhedron& p);

HPolyhedron translate(const HPolyhedron& p, const RatVector& v);
HPolyhedron product(const HPolyhedron& p, const HPolyhedron& q);
/// Image under x -> A x + shift (A is m x n), by exact elimination.
HPolyhedron affine_image(const HPolyhedron& p, const IntMatrix& a, const RatVector& shift);
/// Preimage under x -> A x + shift.
HPolyhedron affine_preimage(const HPolyhedron& p, const IntMatrix& a, const RatVector& shift);

/// Hyperplane normalized to a primitive integer normal with positive leading entry.
LinearConstraint normalized_hyperplane(const LinearConstraint& h);
/// Every hyperplane supporting an inequality or equality of p, normalized.
std::vector<LinearConstraint> hyperplanes_of(const HPolyhedron& p);

/// The pieces of p cut out by the hyperplanes: the dim(p)-dimensional cells
/// of the arrangement restricted to p.
std::vector<HPolyhedron> split_by_hyperplanes(const HPolyhedron& p, std::span<const LinearConstraint> hyperplanes);

/// Range of h.normal . x - h.offset over p; a side is nullopt when unbounded.
struct Range {
  std::optional<Rational> min;
  std::optional<Rational> max;
};
Range evaluate_range(const HPolyhedron& p, const LinearConstraint& h);

}  // namespace tropical
