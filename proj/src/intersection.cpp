#include "tropical/intersection.hpp"

#include "tropical/error.hpp"
#include "tropical/fan.hpp"
#include "tropical/function.hpp"
#include "tropical/morphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tropical {

TropicalCycle stable_intersect(const TropicalCycle& c, const TropicalCycle& d) {
  if (c.ambient_dim() != d.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "intersecting cycles in different spaces");
  std::size_t r = c.ambient_dim();
  if (c.is_zero() || d.is_zero()) return TropicalCycle::zero(r);
  if (*c.dimension() + *d.dimension() < static_cast<int>(r)) return TropicalCycle::zero(r);

  TropicalCycle z = cross_product(c, d);
  for (std::size_t i = 0; i < r && !z.is_zero(); ++i) {
    IntVector x_i = zero_int_vector(2 * r), y_i = zero_int_vector(2 * r);
    x_i[i] = 1;
    y_i[r + i] = 1;
    auto phi = from_tropical_polynomial(TropicalPolynomial({{x_i, 0}, {y_i, 0}}));
    z = divisor_of_valid(phi, z);
  }
  IntMatrix projection(r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) projection(i, i) = 1;
  return push_forward(IntegerAffineMap::linear(std::move(projection)), z);
}

namespace {

void require_complementary(const TropicalCycle& c, const TropicalCycle& d) {
  if (c.ambient_dim() != d.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "pairing cycles in different spaces");
  if (c.is_zero() || d.is_zero()) return;
  if (*c.dimension() + *d.dimension() != static_cast<int>(c.ambient_dim())) {
    throw TropicalError(ErrorCode::DimensionsNotComplementary,
                        "dimensions " + std::to_string(*c.dimension()) + " and " + std::to_string(*d.dimension()) +
                            " in R^" + std::to_string(c.ambient_dim()));
  }
}

}  // namespace

Integer DegreePairing::operator()(const TropicalCycle& d) {
  require_complementary(base_, d);
  for (const auto& [key, value] : cache_) {
    if (key == d) return value;
  }
  Integer value = degree_zero_cycle(stable_intersect(base_, d));
  cache_.emplace_back(d, value);
  return value;
}

Integer degree_pairing(const TropicalCycle& c, const TropicalCycle& d) { return DegreePairing(c)(d); }

FanCycle recession_fan(const TropicalCycle& c) {
  if (!validate(c).valid()) throw TropicalError(ErrorCode::InvalidCycle, "recession fan of an invalid cycle");
  std::size_t r = c.ambient_dim();
  if (c.is_zero()) return FanCycle(TropicalCycle::zero(r));
  int d = *c.dimension();
  std::vector<WeightedCell> cones;
  for (const auto& f : c.facets()) {
    if (f.weight == 0) continue;
    HPolyhedron rc = recession_cone(f.cell);
    if (dimension(rc) == d) cones.push_back({std::move(rc), f.weight});
  }
  if (cones.empty()) return FanCycle(TropicalCycle::zero(r));
  TropicalCycle fan = normalize(assemble(r, cones));
  if (!validate(fan).valid()) throw std::logic_error("recession fan is not balanced");
  return FanCycle(std::move(fan));
}

FanCycle delta(const TropicalCycle& c) { return recession_fan(c); }

bool rationally_equivalent(const TropicalCycle& c, const TropicalCycle& d) {
  if (c.ambient_dim() != d.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "cycles in different spaces");
  if (!c.is_zero() && !d.is_zero() && c.dimension() != d.dimension()) {
    throw TropicalError(ErrorCode::DimMismatch, "cycles of different dimensions");
  }
  return equals(delta(c).cycle(), delta(d).cycle());
}

bool numerically_equivalent_sample(const TropicalCycle& c, const TropicalCycle& d, const std::vector<TropicalCycle>& probes) {
  DegreePairing pair_c(c), pair_d(d);
  return std::all_of(probes.begin(), probes.end(), [&](const TropicalCycle& p) { return pair_c(p) == pair_d(p); });
}

std::vector<TropicalCycle> default_probes(std::size_t r, int dim, std::size_t count, std::uint64_t seed) {
  if (dim < 0 || dim > static_cast<int>(r)) throw TropicalError(ErrorCode::DimMismatch, "probe dimension out of range");
  // Raw engine output only: its sequence is fixed by the standard, unlike
  // the distributions, so probes are identical on every platform.
  std::mt19937_64 engine(seed);
  auto draw = [&](std::uint64_t n) { return static_cast<long>(engine() % n); };
  std::vector<TropicalCycle> probes;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::size_t> coords(r);
    std::iota(coords.begin(), coords.end(), 0);
    for (std::size_t i = r; i > 1; --i) std::swap(coords[i - 1], coords[static_cast<std::size_t>(draw(i))]);
    std::vector<LinearConstraint> fixed;
    for (std::size_t j = static_cast<std::size_t>(dim); j < r; ++j) {
      RatVector e = zero_rat_vector(r);
      e[coords[j]] = 1;
      fixed.push_back({e, Rational(draw(9) - 4) / 2});
    }
    Integer weight = draw(3) + 1;
    probes.emplace_back(r, std::vector<WeightedCell>{{HPolyhedron(r, {}, std::move(fixed)), weight}});
  }
  return probes;
}

namespace {

bool reduces_to_zero(const SimplicialFan& theta, std::map<std::size_t, PiecewiseAffineFunction>& ray_functions,
                     std::vector<RationalWeightedCell> x) {
  std::erase_if(x, [](const RationalWeightedCell& f) { return f.weight == 0; });
  if (x.empty()) return true;
  if (dimension(x.front().cell) == 0) return false;
  for (const auto& sigma : x) {
    std::size_t last = theta.rays().size();
    for (std::size_t i = 0; i < theta.rays().size(); ++i) {
      if (contains_point(sigma.cell, to_rational(theta.rays()[i]))) last = i;
    }
    auto it = ray_functions.find(last);
    if (it == ray_functions.end()) it = ray_functions.emplace(last, simplicial_ray_function(theta, last)).first;
    auto next = divisor_weights(it->second, theta.ambient_dim(), x);
    if (!reduces_to_zero(theta, ray_functions, std::move(next))) return false;
  }
  return true;
}

}  // namespace

bool simplicial_zero_reduction(const FanCycle& c) {
  if (c.cycle().is_zero()) return true;
  auto completion = complete_to_simplicial(c);
  std::vector<RationalWeightedCell> x;
  for (const auto& f : completion.refined.cycle().facets()) x.push_back({f.cell, Rational(f.weight)});
  std::map<std::size_t, PiecewiseAffineFunction> ray_functions;
  return reduces_to_zero(completion.theta, ray_functions, std::move(x));
}

BezoutCheck bezout_verify(const TropicalCycle& c, const TropicalCycle& d) {
  if (c.ambient_dim() != d.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "cycles in different spaces");
  FanCycle lhs = delta(stable_intersect(c, d));
  FanCycle rhs(stable_intersect(delta(c).cycle(), delta(d).cycle()));
  bool holds = equals(lhs.cycle(), rhs.cycle());
  return {holds, std::move(lhs), std::move(rhs)};
}

}  // namespace tropical
