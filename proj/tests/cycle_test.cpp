#include "test_support.hpp"

#include <numeric>
#include <random>

namespace tropical {
namespace {

using namespace tropical::testing;

TEST(Validate, TropicalLineIsBalanced) {
  auto report = validate(tropical_line());
  EXPECT_TRUE(report.valid());
  ASSERT_EQ(report.ridges.size(), 1u);
  EXPECT_EQ(report.ridges[0].ridge, HPolyhedron::point(rv({0, 0})));
  EXPECT_EQ(report.ridges[0].sum, iv({0, 0}));
}

TEST(Validate, WrongWeightsReportDefect) {
  auto report = validate(tropical_line(1, 1, 2));
  EXPECT_FALSE(report.valid());
  auto bad = report.unbalanced();
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].sum, iv({1, 1}));
}

TEST(Validate, SingleRayUnbalanced) {
  TropicalCycle c(2, {{ray(iv({1, 0})), 1}});
  auto bad = validate(c).unbalanced();
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].sum, iv({1, 0}));
}

TEST(Validate, PurityAndComplexViolations) {
  TropicalCycle mixed(2, {{ray(iv({1, 0})), 1}, {HPolyhedron::point(rv({3, 3})), 1}});
  EXPECT_FALSE(validate(mixed).purity_violations.empty());
  TropicalCycle overlapping(1, {{halfspace(rv({1}), 0), 1}, {halfspace(rv({1}), 1), 1}});
  EXPECT_FALSE(validate(overlapping).complex_violations.empty());
}

TEST(Validate, LinesWithLinealityHaveNoRidges) {
  TropicalCycle line(2, {{HPolyhedron(2, {}, {{rv({1, -1}), 0}}), 4}});
  auto report = validate(line);
  EXPECT_TRUE(report.valid());
  EXPECT_TRUE(report.ridges.empty());
}

TEST(Normalize, DropsZeroWeights) {
  auto with_extra = TropicalCycle(2, {{ray(iv({-1, 0})), 1}, {ray(iv({0, -1})), 1}, {ray(iv({1, 1})), 1}, {ray(iv({1, 0})), 0}});
  EXPECT_EQ(normalize(with_extra), tropical_line());
}

TEST(Normalize, MergesSplitLine) {
  TropicalCycle split(1, {{halfspace(rv({1}), 0), 3}, {halfspace(rv({-1}), 0), 3}});
  EXPECT_EQ(normalize(split), TropicalCycle(1, {{HPolyhedron::full_space(1), 3}}));
  TropicalCycle uneven(1, {{halfspace(rv({1}), 0), 3}, {halfspace(rv({-1}), 0), 2}});
  EXPECT_EQ(normalize(uneven), uneven);
}

TEST(Normalize, DoesNotMergeAcrossABranchPoint) {
  // Opposite rays with a third ray at the origin stay separate.
  TropicalCycle t(2, {{ray(iv({1, 0})), 1}, {ray(iv({-1, 0})), 1}, {ray(iv({0, 1})), 1}, {ray(iv({0, -1})), 1}});
  EXPECT_EQ(normalize(t).facets().size(), 4u);
}

TEST(Normalize, Idempotent) {
  auto c = tropical_line();
  EXPECT_EQ(normalize(c), c);
  EXPECT_EQ(normalize(normalize(c)), normalize(c));
}

TEST(Normalize, MergesRefinedPlane) {
  std::vector<WeightedCell> quadrants;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) quadrants.push_back({cone(iv({sx, 0}), iv({0, sy})), 5});
  EXPECT_EQ(normalize(TropicalCycle(2, quadrants)), TropicalCycle(2, {{HPolyhedron::full_space(2), 5}}));
}

// The tropical line with ray (1,1) split at (1,1).
TropicalCycle refined_line() {
  HPolyhedron diagonal = ray(iv({1, 1}));
  return TropicalCycle(2, {{ray(iv({-1, 0})), 1},
                           {ray(iv({0, -1})), 1},
                           {intersect(diagonal, halfspace(rv({-1, -1}), -2)), 1},
                           {intersect(diagonal, halfspace(rv({1, 1}), 2)), 1}});
}

TEST(Equals, RefinementInvariant) {
  EXPECT_TRUE(validate(refined_line()).valid());
  EXPECT_TRUE(equals(tropical_line(), refined_line()));
  EXPECT_TRUE(equals(refined_line(), tropical_line()));
  EXPECT_EQ(normalize(refined_line()), tropical_line());
}

TEST(Equals, DistinguishesWeights) {
  EXPECT_FALSE(equals(tropical_line(), scalar_multiply(2, tropical_line())));
  EXPECT_FALSE(equals(tropical_line(), TropicalCycle::zero(2)));
}

TEST(Equals, CancellingCopiesEqualZero) {
  auto line = tropical_line();
  auto refined = refined_line();
  std::vector<WeightedCell> cells = line.facets();
  for (const auto& f : refined.facets()) cells.push_back({f.cell, -f.weight});
  auto cancelled = assemble(2, cells);
  // Refinement oracle: after splitting both copies on a common arrangement,
  // every piece carries weight 1 - 1 = 0.
  EXPECT_TRUE(cancelled.is_zero());
  EXPECT_TRUE(equals(TropicalCycle::zero(2), cancelled));
}

TEST(Equals, DimMismatch) {
  EXPECT_TROPICAL_ERROR(equals(tropical_line(), TropicalCycle::zero(3)), ErrorCode::DimMismatch);
}

TEST(Arithmetic, ScalarMultiply) {
  auto doubled = scalar_multiply(2, tropical_line());
  EXPECT_EQ(doubled, tropical_line(2, 2, 2));
  EXPECT_TRUE(scalar_multiply(0, tropical_line()).is_zero());
  EXPECT_FALSE(scalar_multiply(0, tropical_line()).dimension().has_value());
  EXPECT_TRUE(add(tropical_line(), scalar_multiply(-1, tropical_line())).is_zero());
}

TEST(Arithmetic, Add) {
  EXPECT_EQ(add(tropical_line(), TropicalCycle::zero(2)), tropical_line());
  EXPECT_EQ(add(TropicalCycle::zero(2), tropical_line()), tropical_line());
  EXPECT_EQ(add(tropical_line(), tropical_line()), tropical_line(2, 2, 2));
  EXPECT_EQ(add(tropical_line(), refined_line()), tropical_line(2, 2, 2));
  TropicalCycle point(2, {{HPolyhedron::point(rv({0, 0})), 1}});
  EXPECT_TROPICAL_ERROR(add(tropical_line(), point), ErrorCode::DimMismatch);
  EXPECT_TROPICAL_ERROR(add(tropical_line(), TropicalCycle::zero(3)), ErrorCode::DimMismatch);
}

TEST(Arithmetic, CrossProduct) {
  TropicalCycle line2(1, {{HPolyhedron::full_space(1), 2}});
  TropicalCycle line3(1, {{HPolyhedron::full_space(1), 3}});
  EXPECT_EQ(cross_product(line2, line3), TropicalCycle(2, {{HPolyhedron::full_space(2), 6}}));

  TropicalCycle origin(1, {{HPolyhedron::point(rv({0})), 1}});
  auto embedded = cross_product(tropical_line(), origin);
  EXPECT_EQ(embedded.ambient_dim(), 3u);
  ASSERT_EQ(embedded.facets().size(), 3u);
  for (const auto& f : embedded.facets()) EXPECT_TRUE(contains(HPolyhedron(3, {}, {{rv({0, 0, 1}), 0}}), f.cell));

  TropicalCycle r1(1, {{HPolyhedron::full_space(1), 1}});
  auto surface = cross_product(tropical_line(), r1);
  EXPECT_EQ(surface.dimension(), 2);
  ASSERT_EQ(surface.facets().size(), 3u);
  // Direct balancing oracle: each facet is a ray times the z-axis; the
  // ridge is the z-axis and the primitive normals are the ray generators.
  auto report = validate(surface);
  EXPECT_TRUE(report.valid());
  ASSERT_EQ(report.ridges.size(), 1u);
  EXPECT_EQ(report.ridges[0].ridge, HPolyhedron(3, {}, {{rv({1, 0, 0}), 0}, {rv({0, 1, 0}), 0}}));
  IntVector expected_sum = iv({-1, 0, 0}) + iv({0, -1, 0}) + iv({1, 1, 0});
  EXPECT_EQ(report.ridges[0].sum, expected_sum);
  EXPECT_TRUE(cross_product(tropical_line(), TropicalCycle::zero(1)).is_zero());
}

TEST(Arithmetic, Translate) {
  auto c = tropical_line();
  EXPECT_EQ(translate(c, rv({0, 0})), c);
  RatVector v{Rational(1, 3), Rational(-5, 2)};
  EXPECT_EQ(translate(translate(c, v), RatVector{-v[0], -v[1]}), c);
  auto moved = translate(c, rv({1, 1}));
  auto report = validate(moved);
  EXPECT_TRUE(report.valid());
  ASSERT_EQ(report.ridges.size(), 1u);
  EXPECT_EQ(report.ridges[0].ridge, HPolyhedron::point(rv({1, 1})));
  EXPECT_TROPICAL_ERROR(translate(c, rv({1})), ErrorCode::DimMismatch);
}

TEST(Degree, Examples) {
  TropicalCycle points(2, {{HPolyhedron::point(rv({1, 2})), 2}, {HPolyhedron::point(rv({-3, 0})), 3}});
  EXPECT_EQ(degree_zero_cycle(points), 5);
  EXPECT_EQ(degree_zero_cycle(TropicalCycle::zero(2)), 0);
  EXPECT_TROPICAL_ERROR(degree_zero_cycle(tropical_line()), ErrorCode::NotZeroDimensional);
}

TEST(FanCycleType, RequiresCones) {
  EXPECT_NO_THROW(FanCycle{tropical_line()});
  EXPECT_TROPICAL_ERROR(FanCycle{translate(tropical_line(), rv({1, 0}))}, ErrorCode::NotFan);
}

// Random balanced fan curves in the plane: random weighted rays closed up
// by one ray through minus the weighted sum.
TropicalCycle random_fan_curve(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> w(1, 3);
  std::uniform_int_distribution<int> count(2, 3);
  while (true) {
    std::vector<IntVector> dirs;
    std::vector<WeightedCell> cells;
    IntVector sum = iv({0, 0});
    bool ok = true;
    for (int k = count(rng); k > 0; --k) {
      IntVector v = iv({d(rng), d(rng)});
      if (is_zero(v)) {
        ok = false;
        break;
      }
      v = primitive(v);
      if (std::find(dirs.begin(), dirs.end(), v) != dirs.end()) {
        ok = false;
        break;
      }
      dirs.push_back(v);
      Integer weight = w(rng);
      cells.push_back({ray(v), weight});
      sum = sum + weight * v;
    }
    if (!ok || is_zero(sum)) continue;
    IntVector closing = primitive(Integer(-1) * sum);
    if (std::find(dirs.begin(), dirs.end(), closing) != dirs.end()) continue;
    Integer g = 0;
    for (const auto& x : sum) g = gcd(g, x);
    cells.push_back({ray(closing), g});
    return TropicalCycle(2, cells);
  }
}

TEST(CycleProperties, OperationsPreserveBalancing) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    auto c = random_fan_curve(rng);
    auto e = random_fan_curve(rng);
    ASSERT_TRUE(validate(c).valid());
    EXPECT_TRUE(validate(normalize(c)).valid());
    EXPECT_TRUE(validate(scalar_multiply(-3, c)).valid());
    EXPECT_TRUE(validate(translate(c, RatVector{Rational(1, 2), Rational(-2)})).valid());
    auto sum = add(c, e);
    EXPECT_TRUE(validate(sum).valid());
    EXPECT_TRUE(equals(add(sum, scalar_multiply(-1, e)), c));
    TropicalCycle r1(1, {{HPolyhedron::full_space(1), 2}});
    EXPECT_TRUE(validate(cross_product(c, r1)).valid());
  }
}

TEST(CycleProperties, EqualsIsAnEquivalenceInvariantUnderRefinement) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> cut(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = random_fan_curve(rng);
    // Split every ray at a random lattice point along it.
    std::vector<WeightedCell> split;
    for (const auto& f : c.facets()) {
      RatVector g = relative_interior_point(f.cell);
      RatVector n = g;
      Rational level = cut(rng) * dot(g, g);
      split.push_back({intersect(f.cell, HPolyhedron(2, {{Rational(-1) * n, -level}})), f.weight});
      split.push_back({intersect(f.cell, HPolyhedron(2, {{n, level}})), f.weight});
    }
    TropicalCycle refined(2, split);
    EXPECT_TRUE(validate(refined).valid());
    EXPECT_TRUE(equals(c, c));
    EXPECT_TRUE(equals(c, refined));
    EXPECT_TRUE(equals(refined, c));
    EXPECT_TRUE(equals(refined, normalize(refined)));
    EXPECT_EQ(normalize(refined), normalize(c));
    EXPECT_FALSE(equals(c, scalar_multiply(2, refined)));
  }
}

TEST(CycleProperties, DegreeIsAdditive) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(-5, 5);
  auto random_points = [&] {
    std::vector<WeightedCell> cells;
    for (int k = 0; k < 4; ++k) cells.push_back({HPolyhedron::point(rv({d(rng) % 3, d(rng) % 3})), d(rng)});
    return TropicalCycle(2, cells);
  };
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_points();
    auto b = random_points();
    EXPECT_EQ(degree_zero_cycle(add(a, b)), degree_zero_cycle(a) + degree_zero_cycle(b));
  }
}

}  // namespace
}  // namespace tropical
