#include "tropical/error.hpp"
#include "tropical/polyhedron.hpp"

#include <gtest/gtest.h>

#include <random>

namespace tropical {
namespace {

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LinearConstraint ge(std::initializer_list<long> a, long b) { return {rv(a), Rational(b)}; }

HPolyhedron poly(std::size_t n, std::vector<LinearConstraint> ineqs, std::vector<LinearConstraint> eqs = {}) {
  return canonicalize(HPolyhedron(n, std::move(ineqs), std::move(eqs)));
}

HPolyhedron unit_square() { return poly(2, {ge({1, 0}, 0), ge({-1, 0}, -1), ge({0, 1}, 0), ge({0, -1}, -1)}); }

TEST(LinearProgram, BasicOptimumAndStatus) {
  std::vector<LinearConstraint> square = {ge({1, 0}, 0), ge({-1, 0}, -1), ge({0, 1}, 0), ge({0, -1}, -1)};
  auto s = lp::maximize(rv({1, 1}), square, {});
  ASSERT_EQ(s.status, lp::Status::Optimal);
  EXPECT_EQ(s.value, 2);
  auto u = lp::maximize(rv({1, 0}), std::vector<LinearConstraint>{ge({1, 0}, 0)}, {});
  EXPECT_EQ(u.status, lp::Status::Unbounded);
  auto inf = lp::maximize(rv({0}), std::vector<LinearConstraint>{ge({1}, 1), ge({-1}, 0)}, {});
  EXPECT_EQ(inf.status, lp::Status::Infeasible);
  auto eq = lp::minimize(rv({1, 2}), std::vector<LinearConstraint>{ge({1, 0}, -3)}, std::vector<LinearConstraint>{ge({1, -1}, 0)});
  ASSERT_EQ(eq.status, lp::Status::Optimal);
  EXPECT_EQ(eq.value, -9);
}

TEST(LinearProgram, MatchesBruteForceVertexEnumerationIn2D) {
  // Oracle: for bounded feasible 2D systems the optimum is attained at a
  // vertex, i.e. an intersection of two constraint lines.
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-4, 4);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 60; ++trial) {
    std::vector<LinearConstraint> cs = {ge({1, 0}, -5), ge({-1, 0}, -5), ge({0, 1}, -5), ge({0, -1}, -5)};
    for (int k = 0; k < 3; ++k) cs.push_back(ge({d(rng), d(rng)}, d(rng)));
    RatVector obj = rv({d(rng), d(rng)});
    auto s = lp::maximize(obj, cs, {});
    std::optional<Rational> best;
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        Rational det = cs[i].normal[0] * cs[j].normal[1] - cs[i].normal[1] * cs[j].normal[0];
        if (sgn(det) == 0) continue;
        RatVector x = {(cs[i].offset * cs[j].normal[1] - cs[j].offset * cs[i].normal[1]) / det,
                       (cs[i].normal[0] * cs[j].offset - cs[j].normal[0] * cs[i].offset) / det};
        bool ok = true;
        for (const auto& c : cs) ok = ok && sgn(c.evaluate(x)) >= 0;
        if (!ok) continue;
        Rational v = dot(obj, x);
        if (!best || v > *best) best = v;
      }
    if (!best) {
      EXPECT_EQ(s.status, lp::Status::Infeasible);
      continue;
    }
    ASSERT_EQ(s.status, lp::Status::Optimal);
    EXPECT_EQ(s.value, *best);
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(poly(1, {ge({1}, 0), ge({1}, -1)}), poly(1, {ge({1}, 0)}));
  auto eq = poly(1, {ge({1}, 0), ge({-1}, 0)});
  EXPECT_TRUE(eq.inequalities().empty());
  EXPECT_EQ(eq.equalities().size(), 1u);
  EXPECT_EQ(eq, poly(1, {}, {ge({1}, 0)}));
  EXPECT_TRUE(poly(1, {ge({1}, 1), ge({-1}, 0)}).is_empty());
}

TEST(Canonicalize, ScalingAndOrderInvariant) {
  auto a = poly(2, {ge({2, 0}, 0), ge({0, 3}, 0), ge({-1, -1}, -4)});
  auto b = poly(2, {ge({-3, -3}, -12), ge({1, 0}, 0), ge({0, 1}, 0), ge({1, 1}, -100)});
  EXPECT_EQ(a, b);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(unit_square()), 2);
  EXPECT_EQ(dimension(poly(2, {}, {ge({1, 0}, 0)})), 1);
  EXPECT_EQ(dimension(HPolyhedron::empty(2)), -1);
}

TEST(Faces, Examples) {
  auto edges = faces(unit_square(), 1);
  EXPECT_EQ(edges.size(), 4u);
  for (const auto& e : edges) EXPECT_EQ(dimension(e), 1);
  EXPECT_EQ(faces(unit_square(), 2).size(), 4u);
  EXPECT_EQ(faces(unit_square(), 0), std::vector<HPolyhedron>{unit_square()});

  auto ray = poly(2, {ge({1, 0}, 0)}, {ge({1, -1}, 0)});
  auto apex = faces(ray, 1);
  ASSERT_EQ(apex.size(), 1u);
  EXPECT_EQ(apex[0], HPolyhedron::point(rv({0, 0})));
  try {
    faces(ray, 2);
    FAIL();
  } catch (const TropicalError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadCodim);
  }
}

TEST(RecessionCone, Examples) {
  EXPECT_EQ(recession_cone(unit_square()), HPolyhedron::point(rv({0, 0})));
  auto strip = poly(2, {ge({1, 0}, 0), ge({-1, 0}, -1), ge({0, 1}, 0)});
  EXPECT_EQ(recession_cone(strip), poly(2, {ge({0, 1}, 0)}, {ge({1, 0}, 0)}));
  // y >= x, y <= x + 1: A v >= 0 forces v_y - v_x = 0.
  auto band = poly(2, {ge({-1, 1}, 0), ge({1, -1}, -1)});
  EXPECT_EQ(recession_cone(band), poly(2, {}, {ge({1, -1}, 0)}));
  try {
    recession_cone(HPolyhedron::empty(2));
    FAIL();
  } catch (const TropicalError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
  }
}

HPolyhedron random_polyhedron(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<LinearConstraint> cs;
  for (int k = count(rng); k > 0; --k) {
    RatVector a(n);
    for (auto& x : a) x = d(rng);
    cs.push_back({a, Rational(d(rng))});
  }
  return canonicalize(HPolyhedron(n, cs));
}

TEST(RecessionCone, IdempotentOnConesAndCommutesWithIntersection) {
  std::mt19937 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 80; ++trial) {
    std::size_t n = trial % 2 == 0 ? 2 : 3;
    auto p = random_polyhedron(rng, n);
    auto q = random_polyhedron(rng, n);
    auto pq = intersect(p, q);
    if (pq.is_empty()) continue;
    auto rc = recession_cone(p);
    EXPECT_EQ(recession_cone(rc), rc);
    EXPECT_EQ(recession_cone(pq), intersect(recession_cone(p), recession_cone(q)));
    ++checked;
  }
  EXPECT_GE(checked, 40);
}

TEST(Intersect, Examples) {
  EXPECT_EQ(intersect(poly(1, {ge({1}, 0)}), poly(1, {ge({-1}, 0)})), poly(1, {}, {ge({1}, 0)}));
  auto moved = translate(unit_square(), rv({5, 0}));
  EXPECT_TRUE(intersect(unit_square(), moved).is_empty());
  EXPECT_EQ(intersect(unit_square(), HPolyhedron::full_space(2)), unit_square());
  try {
    intersect(unit_square(), HPolyhedron::full_space(3));
    FAIL();
  } catch (const TropicalError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
  }
}

TEST(RelativeInterior, Examples) {
  EXPECT_EQ(relative_interior_point(poly(1, {}, {ge({1}, 0)})), rv({0}));
  auto x = relative_interior_point(poly(1, {ge({1}, 0), ge({-1}, -1)}));
  EXPECT_EQ(x[0], Rational(1, 2));
  auto ray = poly(2, {ge({1, 0}, 0)}, {ge({1, -1}, 0)});
  EXPECT_EQ(relative_interior_point(ray), rv({1, 1}));
}

TEST(RelativeInterior, StrictOnRandomPolyhedra) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_polyhedron(rng, 3);
    if (p.is_empty()) continue;
    auto x = relative_interior_point(p);
    for (const auto& c : p.inequalities()) EXPECT_GT(c.evaluate(x), 0);
    for (const auto& c : p.equalities()) EXPECT_EQ(c.evaluate(x), 0);
  }
}

TEST(AffineImage, ProjectionOfTriangle) {
  auto tri = poly(2, {ge({1, 0}, 0), ge({0, 1}, 0), ge({-1, -1}, -2)});
  IntMatrix proj(1, 2);
  proj(0, 0) = 1;
  auto img = affine_image(tri, proj, rv({1}));
  EXPECT_EQ(img, poly(1, {ge({1}, 1), ge({-1}, -3)}));
  IntMatrix collapse(2, 2);
  collapse(0, 0) = 1;
  collapse(0, 1) = 1;
  collapse(1, 0) = 1;
  collapse(1, 1) = 1;
  auto diag = affine_image(tri, collapse, rv({0, 0}));
  EXPECT_EQ(dimension(diag), 1);
  EXPECT_EQ(diag, poly(2, {ge({1, 0}, 0), ge({-1, 0}, -2)}, {ge({1, -1}, 0)}));
}

TEST(SplitByHyperplanes, SquareByDiagonal) {
  auto pieces = split_by_hyperplanes(unit_square(), std::vector<LinearConstraint>{ge({1, -1}, 0)});
  ASSERT_EQ(pieces.size(), 2u);
  for (const auto& p : pieces) EXPECT_EQ(dimension(p), 2);
  EXPECT_EQ(intersect(pieces[0], pieces[1]), poly(2, {ge({1, 0}, 0), ge({-1, 0}, -1)}, {ge({1, -1}, 0)}));
  // A hyperplane missing the square leaves it whole.
  EXPECT_EQ(split_by_hyperplanes(unit_square(), std::vector<LinearConstraint>{ge({1, 0}, 7)}).size(), 1u);
}

TEST(IsFace, Detection) {
  auto sq = unit_square();
  auto edge = poly(2, {ge({1, 0}, 0), ge({-1, 0}, -1)}, {ge({0, 1}, 0)});
  EXPECT_TRUE(is_face(edge, sq));
  auto half_edge = poly(2, {ge({1, 0}, 0), ge({-2, 0}, -1)}, {ge({0, 1}, 0)});
  EXPECT_FALSE(is_face(half_edge, sq));
  EXPECT_TRUE(is_face(sq, sq));
}

TEST(SimplicialCone, DualBasis) {
  auto c = HPolyhedron::simplicial_cone(2, {IntVector{1, 0}, IntVector{1, 2}});
  EXPECT_TRUE(contains_point(c, rv({2, 2})));
  EXPECT_FALSE(contains_point(c, rv({0, 1})));
  EXPECT_TRUE(is_cone(c));
  EXPECT_EQ(dimension(c), 2);
}

}  // namespace
}  // namespace tropical
