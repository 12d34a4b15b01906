#pragma once

#include "tropical/cycle.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tropical {

/// C . D = pi_*(max(x_1, y_1) ... max(x_r, y_r) . (C x D)), dividing in
/// coordinate order 1..r. Throws DimMismatch for different ambient spaces.
TropicalCycle stable_intersect(const TropicalCycle& c, const TropicalCycle& d);

/// D -> deg(C . D) for D of complementary dimension, with a cache.
class DegreePairing {
 public:
  explicit DegreePairing(TropicalCycle base) : base_(std::move(base)) {}

  const TropicalCycle& base() const noexcept { return base_; }
  /// Throws DimensionsNotComplementary.
  Integer operator()(const TropicalCycle& d);
  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  TropicalCycle base_;
  std::vector<std::pair<TropicalCycle, Integer>> cache_;
};

Integer degree_pairing(const TropicalCycle& c, const TropicalCycle& d);

/// The fan on the d-dimensional recession cones of the facets with summed
/// weights. Throws InvalidCycle when validate(c) fails.
FanCycle recession_fan(const TropicalCycle& c);
/// The affine cycle rationally equivalent to c, computed as recession_fan.
FanCycle delta(const TropicalCycle& c);

/// equals(delta(c), delta(d)). Throws DimMismatch for different ambient
/// spaces or different dimensions.
bool rationally_equivalent(const TropicalCycle& c, const TropicalCycle& d);

/// Compares degree pairings on the probes: necessary for equivalence, not
/// sufficient. Vacuously true for no probes.
bool numerically_equivalent_sample(const TropicalCycle& c, const TropicalCycle& d, const std::vector<TropicalCycle>& probes);

/// count probes of dimension dim in R^r: coordinate subspaces with small
/// positive weights, translated by small rational vectors, drawn from seed.
std::vector<TropicalCycle> default_probes(std::size_t r, int dim, std::size_t count, std::uint64_t seed);

/// Decides c = 0 by induction on the dimension through divisors of the ray
/// functions of a simplicial completion.
bool simplicial_zero_reduction(const FanCycle& c);

struct BezoutCheck {
  bool holds;
  FanCycle lhs;  // delta(C . D)
  FanCycle rhs;  // delta(C) . delta(D)
};
BezoutCheck bezout_verify(const TropicalCycle& c, const TropicalCycle& d);

}  // namespace tropical
