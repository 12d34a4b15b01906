#include "test_support.hpp"

#include "tropical/fan.hpp"
#include "tropical/function.hpp"
#include "tropical/morphism.hpp"

#include <random>
#include <set>
#include <tuple>

namespace tropical {
namespace {

using namespace tropical::testing;

PiecewiseAffineFunction poly(std::vector<TropicalPolynomial::Term> terms) {
  return from_tropical_polynomial(TropicalPolynomial(std::move(terms)));
}

// max(0, x) on R^1.
PiecewiseAffineFunction hinge() { return poly({{iv({0}), 0}, {iv({1}), 0}}); }

// max(0, x, y) on R^2.
PiecewiseAffineFunction max_xy() { return poly({{iv({0, 0}), 0}, {iv({1, 0}), 0}, {iv({0, 1}), 0}}); }

TropicalCycle line_r1(long w = 1) { return TropicalCycle(1, {{HPolyhedron::full_space(1), w}}); }
TropicalCycle plane(long w = 1) { return TropicalCycle(2, {{HPolyhedron::full_space(2), w}}); }

TEST(TropicalPolynomial, MergesDuplicateExponents) {
  TropicalPolynomial p({{iv({1}), 2}, {iv({1}), 5}, {iv({0}), 0}});
  ASSERT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.evaluate(rv({0})), 5);
  EXPECT_TROPICAL_ERROR(TropicalPolynomial({}), ErrorCode::EmptyInput);
}

TEST(FromPolynomial, Hinge) {
  auto f = hinge();
  ASSERT_EQ(f.pieces().size(), 2u);
  EXPECT_EQ(f.evaluate(rv({-3})), 0);
  EXPECT_EQ(f.evaluate(rv({4})), 4);
  for (const auto& [cell, piece] : f.pieces()) {
    if (contains_point(cell, rv({-1}))) EXPECT_EQ(piece, (AffinePiece{rv({0}), 0}));
    else EXPECT_EQ(piece, (AffinePiece{rv({1}), 0}));
  }
}

TEST(FromPolynomial, SingleTermIsGlobal) {
  auto f = poly({{iv({1}), 1}});
  ASSERT_EQ(f.pieces().size(), 1u);
  EXPECT_EQ(f.pieces()[0].first, HPolyhedron::full_space(1));
  EXPECT_EQ(f.evaluate(rv({7})), 8);
}

TEST(FromPolynomial, ThreeSectors) {
  auto f = max_xy();
  ASSERT_EQ(f.pieces().size(), 3u);
  // Pairwise comparison oracle: the sectors are {0 >= x, 0 >= y},
  // {x >= 0, x >= y}, {y >= 0, y >= x}.
  std::set<HPolyhedron> expected{
      canonicalize(HPolyhedron(2, {{rv({-1, 0}), 0}, {rv({0, -1}), 0}})),
      canonicalize(HPolyhedron(2, {{rv({1, 0}), 0}, {rv({1, -1}), 0}})),
      canonicalize(HPolyhedron(2, {{rv({0, 1}), 0}, {rv({-1, 1}), 0}}))};
  std::set<HPolyhedron> got;
  for (const auto& [cell, piece] : f.pieces()) got.insert(cell);
  EXPECT_EQ(got, expected);
  PolyhedralComplex domain(2, std::vector<HPolyhedron>(got.begin(), got.end()));
  std::set<IntVector> rays;
  for (const auto& c : domain.cells())
    if (dimension(c) == 1) rays.insert(primitive_integer_multiple(relative_interior_point(c)));
  EXPECT_EQ(rays, (std::set<IntVector>{iv({-1, 0}), iv({0, -1}), iv({1, 1})}));
}

TEST(FromPolynomial, MatchesPolynomialOnRandomPoints) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<TropicalPolynomial::Term> terms;
    for (int k = 0; k < 4; ++k) terms.push_back({iv({d(rng), d(rng)}), Rational(d(rng)) / 2});
    TropicalPolynomial p(terms);
    auto f = from_tropical_polynomial(p);
    for (int s = 0; s < 20; ++s) {
      RatVector x{Rational(d(rng)) / 3, Rational(d(rng)) / 5};
      EXPECT_EQ(f.evaluate(x), p.evaluate(x));
    }
  }
}

TEST(PiecewiseFunction, RejectsDiscontinuity) {
  std::vector<std::pair<HPolyhedron, AffinePiece>> pieces{{halfspace(rv({1}), 0), {rv({1}), 0}},
                                                          {halfspace(rv({-1}), 0), {rv({0}), 1}}};
  EXPECT_TROPICAL_ERROR(PiecewiseAffineFunction(1, pieces), ErrorCode::InvalidFunction);
}

TEST(Restrict, GlobalAffineLeavesCycle) {
  auto f = poly({{iv({2, -1}), 3}});
  auto r = restrict_to(f, tropical_line());
  EXPECT_EQ(r.refined, tropical_line());
}

TEST(Restrict, HingeSplitsLine) {
  auto r = restrict_to(hinge(), line_r1());
  EXPECT_EQ(r.refined, TropicalCycle(1, {{halfspace(rv({1}), 0), 1}, {halfspace(rv({-1}), 0), 1}}));
}

TEST(Restrict, TropicalLineOnSectors) {
  auto f = max_xy();
  auto r = restrict_to(f, tropical_line());
  // The rays of L1 are the walls of the sectors, so no new cells appear and
  // each ray carries the piece of one adjacent sector.
  EXPECT_EQ(r.refined, tropical_line());
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    RatVector x = relative_interior_point(r.refined.facets()[i].cell);
    EXPECT_EQ(r.pieces[i].evaluate(x), f.evaluate(x));
  }
  auto shifted = restrict_to(f, translate(tropical_line(), rv({1, 0})));
  // The ray along y = 0 from (1,0) enters the wall y = 0 at the origin.
  EXPECT_EQ(shifted.refined.facets().size(), 4u);
}

TEST(Restrict, SupportNotCovered) {
  std::vector<std::pair<HPolyhedron, AffinePiece>> half{{halfspace(rv({1}), 0), {rv({1}), 0}}};
  PiecewiseAffineFunction f(1, half);
  EXPECT_TROPICAL_ERROR(restrict_to(f, line_r1()), ErrorCode::SupportNotCovered);
  EXPECT_TROPICAL_ERROR(restrict_to(f, TropicalCycle(1, {{HPolyhedron::point(rv({-1})), 1}})), ErrorCode::SupportNotCovered);
}

TEST(Divisor, HingeOnLine) {
  EXPECT_EQ(divisor(hinge(), line_r1()), TropicalCycle(1, {{HPolyhedron::point(rv({0})), 1}}));
  EXPECT_EQ(divisor(hinge(), line_r1(3)), TropicalCycle(1, {{HPolyhedron::point(rv({0})), 3}}));
}

TEST(Divisor, AffineFunctionGivesZero) {
  auto f = poly({{iv({1, 2}), 5}});
  EXPECT_TRUE(divisor(f, tropical_line()).is_zero());
  EXPECT_TRUE(divisor(f, plane()).is_zero());
}

TEST(Divisor, MaxXYOnPlaneIsTropicalLine) {
  auto l = divisor(max_xy(), plane());
  EXPECT_EQ(l, tropical_line());
  // Brute-force oracle at each ray: in the plane the slope jump a - b across
  // a wall is perpendicular to it and the weight is its lattice length.
  for (const auto& [ray_dir, left, right] :
       std::vector<std::tuple<IntVector, IntVector, IntVector>>{{iv({-1, 0}), iv({0, 0}), iv({0, 1})},
                                                                {iv({0, -1}), iv({0, 0}), iv({1, 0})},
                                                                {iv({1, 1}), iv({1, 0}), iv({0, 1})}}) {
    IntVector jump = left - right;
    EXPECT_EQ(dot(jump, ray_dir), 0);
    Integer w = gcd(jump[0], jump[1]);
    EXPECT_EQ(w, 1);
    bool found = false;
    for (const auto& f : l.facets()) {
      if (f.cell == ray(ray_dir)) {
        EXPECT_EQ(f.weight, w);
        found = true;
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(Divisor, RejectsInvalidCycle) {
  TropicalCycle lonely(2, {{ray(iv({1, 0})), 1}});
  EXPECT_TROPICAL_ERROR(divisor(max_xy(), lonely), ErrorCode::InvalidCycle);
}

TEST(Divisor, OutputsValidateAndScaleWithWeights) {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<TropicalPolynomial::Term> terms;
    for (int k = 0; k < 3; ++k) terms.push_back({iv({d(rng), d(rng)}), Rational(d(rng))});
    auto f = poly(terms);
    for (const auto& c : {plane(), tropical_line(), translate(tropical_line(2, 2, 2), rv({1, -1}))}) {
      auto div = divisor(f, c);
      EXPECT_TRUE(validate(div).valid());
      EXPECT_TRUE(equals(divisor(f, scalar_multiply(3, c)), scalar_multiply(3, div)));
    }
  }
}

TEST(Divisor, RefinementInvariant) {
  auto f = max_xy();
  auto c = translate(tropical_line(), rv({1, 2}));
  std::vector<WeightedCell> split;
  for (const auto& facet : c.facets()) {
    RatVector g = relative_interior_point(facet.cell) - rv({1, 2});
    Rational level = dot(g, rv({1, 2})) + 3 * dot(g, g);
    split.push_back({intersect(facet.cell, HPolyhedron(2, {{g, level}})), facet.weight});
    split.push_back({intersect(facet.cell, HPolyhedron(2, {{Rational(-1) * g, -level}})), facet.weight});
  }
  TropicalCycle refined(2, split);
  ASSERT_TRUE(validate(refined).valid());
  EXPECT_TRUE(equals(divisor(f, c), divisor(f, refined)));
}

TEST(Bounded, Examples) {
  TropicalCycle point(1, {{HPolyhedron::point(rv({5})), 1}});
  auto x = poly({{iv({1}), 0}});
  EXPECT_FALSE(is_bounded(x, line_r1()));
  EXPECT_TRUE(is_bounded(x, point));
  EXPECT_FALSE(is_bounded(hinge(), line_r1()));
  auto w = translation_witness(tropical_line(), 0, 3);
  EXPECT_TRUE(is_bounded(w.phi, w.z));
  EXPECT_TRUE(is_bounded(translation_witness(tropical_line(), 1, -2).phi, w.z));
}

TEST(PullBack, Examples) {
  auto phi = max_xy();
  auto id = pull_back(IntegerAffineMap::identity(2), phi);
  EXPECT_EQ(id.pieces().size(), phi.pieces().size());

  // f(x, t) = x + t e_1 on R^2 x R; phi = max(0, x_1) in R^2.
  IntMatrix a = IntMatrix::from_rows({iv({1, 0, 1}), iv({0, 1, 0})}, 3);
  auto g = pull_back(IntegerAffineMap::linear(a), poly({{iv({0, 0}), 0}, {iv({1, 0}), 0}}));
  auto expected = poly({{iv({0, 0, 0}), 0}, {iv({1, 0, 1}), 0}});
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int s = 0; s < 30; ++s) {
    RatVector x{Rational(d(rng)) / 2, Rational(d(rng)), Rational(d(rng)) / 3};
    EXPECT_EQ(g.evaluate(x), expected.evaluate(x));
  }

  IntegerAffineMap constant(IntMatrix(2, 3), RatVector{Rational(1), Rational(-2)});
  auto c = pull_back(constant, phi);
  ASSERT_EQ(c.pieces().size(), 1u);
  EXPECT_EQ(c.evaluate(rv({9, 9, 9})), phi.evaluate(rv({1, -2})));

  EXPECT_TROPICAL_ERROR(pull_back(IntegerAffineMap::identity(3), phi), ErrorCode::DimMismatch);
}

TEST(PushForward, Examples) {
  EXPECT_EQ(push_forward(IntegerAffineMap::identity(2), tropical_line()), tropical_line());
  IntMatrix two = IntMatrix::from_rows({iv({2})}, 1);
  // Lattice oracle: [Z : 2Z] = 2.
  EXPECT_EQ(lattice_index(LatticeBasis(1, {iv({2})}), LatticeBasis(1, {iv({1})})), 2);
  EXPECT_EQ(push_forward(IntegerAffineMap::linear(two), line_r1()), line_r1(2));

  // Projection to the first coordinate: the vertical ray collapses, the
  // horizontal rays map onto the two half-lines with index 1.
  IntMatrix proj = IntMatrix::from_rows({iv({1, 0})}, 2);
  TropicalCycle cross(2, {{ray(iv({1, 0})), 1}, {ray(iv({-1, 0})), 1}, {ray(iv({0, 1})), 1}, {ray(iv({0, -1})), 1}});
  EXPECT_EQ(push_forward(IntegerAffineMap::linear(proj), cross), line_r1());
  TropicalCycle vertical(2, {{HPolyhedron(2, {}, {{rv({1, 0}), 0}}), 1}});
  EXPECT_TRUE(push_forward(IntegerAffineMap::linear(proj), vertical).is_zero());
  // L1 projects onto the line with the two rays (1,1) and (-1,0) over the
  // half-lines and (0,-1) collapsing.
  EXPECT_EQ(push_forward(IntegerAffineMap::linear(proj), tropical_line()), line_r1());
}

TEST(PushForward, PreservesDegree) {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<WeightedCell> pts;
    for (int k = 0; k < 3; ++k) pts.push_back({HPolyhedron::point(rv({d(rng), d(rng)})), d(rng)});
    TropicalCycle c(2, pts);
    IntMatrix a = IntMatrix::from_rows({iv({d(rng), d(rng)})}, 2);
    IntegerAffineMap f(a, RatVector{Rational(d(rng)) / 2});
    EXPECT_EQ(degree_zero_cycle(push_forward(f, c)), degree_zero_cycle(c));
  }
}

TEST(TranslationWitness, PointOnLine) {
  TropicalCycle origin(1, {{HPolyhedron::point(rv({0})), 1}});
  auto w = translation_witness(origin, 0, 1);
  EXPECT_TRUE(is_bounded(w.phi, w.z));
  TropicalCycle expected(1, {{HPolyhedron::point(rv({0})), 1}, {HPolyhedron::point(rv({1})), -1}});
  EXPECT_EQ(witness_image(w), expected);
  EXPECT_TROPICAL_ERROR(translation_witness(origin, 0, 0), ErrorCode::ZeroShift);
}

TEST(TranslationWitness, TropicalLine) {
  auto l = tropical_line();
  auto w = translation_witness(l, 0, 2);
  auto expected = add(l, scalar_multiply(-1, translate(l, rv({2, 0}))));
  EXPECT_TRUE(equals(witness_image(w), expected));
  auto negative = translation_witness(l, 1, Rational(-3, 2));
  auto expected_negative = add(l, scalar_multiply(-1, translate(l, RatVector{Rational(0), Rational(-3, 2)})));
  EXPECT_TRUE(equals(witness_image(negative), expected_negative));
}

TEST(SimplicialRayFunction, Examples) {
  SimplicialFan line(1, {iv({-1}), iv({1})}, {{0}, {1}});
  auto f = simplicial_ray_function(line, 1);
  auto hinge_fn = hinge();
  for (long x : {-3, -1, 0, 2, 5}) EXPECT_EQ(f.evaluate(rv({x})), hinge_fn.evaluate(rv({x})));

  SimplicialFan standard(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
  auto g = simplicial_ray_function(standard, 0);
  EXPECT_EQ(g.evaluate(rv({1, 0})), 1);
  EXPECT_EQ(g.evaluate(rv({0, 1})), 0);
  EXPECT_EQ(g.evaluate(rv({-1, -1})), 0);
  // 2x2 systems per cone: on cone(e1, e2) l = (1, 0); on cone(e1, -e1-e2)
  // l = (1, -1); on cone(e2, -e1-e2) l = 0.
  EXPECT_EQ(g.evaluate(rv({2, 3})), 2);
  EXPECT_EQ(g.evaluate(rv({1, -4})), 5);
  EXPECT_EQ(g.evaluate(rv({-2, 1})), 0);

  SimplicialFan incomplete(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
  EXPECT_TROPICAL_ERROR(simplicial_ray_function(incomplete, 0), ErrorCode::NotComplete);
  std::vector<HPolyhedron> quadrant_pair{HPolyhedron(2, {{rv({0, 1}), 0}})};
  EXPECT_TROPICAL_ERROR(simplicial_ray_function(PolyhedralComplex(2, quadrant_pair), 0), ErrorCode::NotSimplicial);
}

}  // namespace
}  // namespace tropical
