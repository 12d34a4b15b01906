#include "tropical/morphism.hpp"

#include "tropical/error.hpp"

#include <algorithm>

namespace tropical {

IntegerAffineMap::IntegerAffineMap(IntMatrix matrix, RatVector shift) : matrix_(std::move(matrix)), shift_(std::move(shift)) {
  if (shift_.size() != matrix_.rows()) throw TropicalError(ErrorCode::DimMismatch, "shift length differs from target dimension");
}

IntegerAffineMap IntegerAffineMap::linear(IntMatrix matrix) {
  std::size_t m = matrix.rows();
  return IntegerAffineMap(std::move(matrix), zero_rat_vector(m));
}

IntegerAffineMap IntegerAffineMap::identity(std::size_t n) { return linear(IntMatrix::identity(n)); }

RatVector IntegerAffineMap::operator()(std::span<const Rational> x) const {
  if (x.size() != source_dim()) throw TropicalError(ErrorCode::DimMismatch, "point length differs from source dimension");
  RatVector y = shift_;
  for (std::size_t i = 0; i < target_dim(); ++i)
    for (std::size_t j = 0; j < source_dim(); ++j) y[i] += matrix_(i, j) * x[j];
  return y;
}

PiecewiseAffineFunction pull_back(const IntegerAffineMap& f, const PiecewiseAffineFunction& phi) {
  if (f.target_dim() != phi.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "map target differs from function domain");
  RatMatrix at = to_rational(f.matrix().transpose());
  std::vector<std::pair<HPolyhedron, AffinePiece>> pieces;
  for (const auto& [cell, piece] : phi.pieces()) {
    HPolyhedron pre = canonicalize(affine_preimage(cell, f.matrix(), f.shift()));
    if (pre.is_empty()) continue;
    RatVector linear = zero_rat_vector(f.source_dim());
    for (std::size_t j = 0; j < f.source_dim(); ++j) linear[j] = dot(at.row(j), piece.linear);
    pieces.emplace_back(std::move(pre), AffinePiece{std::move(linear), dot(piece.linear, f.shift()) + piece.constant});
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const auto& a, const auto& b) { return dimension(a.first) > dimension(b.first); });
  std::vector<std::pair<HPolyhedron, AffinePiece>> kept;
  for (auto& p : pieces) {
    bool nested = std::any_of(kept.begin(), kept.end(), [&](const auto& k) { return contains(k.first, p.first); });
    if (!nested) kept.push_back(std::move(p));
  }
  return PiecewiseAffineFunction(f.source_dim(), std::move(kept));
}

TropicalCycle push_forward(const IntegerAffineMap& f, const TropicalCycle& c) {
  if (f.source_dim() != c.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "map source differs from cycle ambient space");
  std::size_t m = f.target_dim();
  if (c.is_zero()) return TropicalCycle::zero(m);
  int d = *c.dimension();
  std::vector<WeightedCell> images;
  for (const auto& facet : c.facets()) {
    if (facet.weight == 0) continue;
    HPolyhedron image = canonicalize(affine_image(facet.cell, f.matrix(), f.shift()));
    if (dimension(image) < d) continue;
    std::vector<IntVector> mapped;
    LatticeBasis source = lattice(facet.cell);
    for (const auto& g : source.basis()) {
      IntVector v = zero_int_vector(m);
      for (std::size_t i = 0; i < m; ++i) v[i] = dot(f.matrix().row(i), g);
      mapped.push_back(std::move(v));
    }
    Integer index = lattice_index(LatticeBasis(m, mapped), lattice(image));
    images.push_back({std::move(image), facet.weight * index});
  }
  if (images.empty()) return TropicalCycle::zero(m);
  return normalize(assemble(m, images));
}

TranslationWitness translation_witness(const TropicalCycle& c, std::size_t i, const Rational& mu) {
  std::size_t r = c.ambient_dim();
  if (mu == 0) throw TropicalError(ErrorCode::ZeroShift, "translation by zero");
  if (i >= r) throw TropicalError(ErrorCode::DimMismatch, "coordinate index out of range");

  TropicalCycle line(1, {{HPolyhedron::full_space(1), 1}});
  TropicalCycle z = cross_product(c, line);

  IntMatrix a(r, r + 1);
  for (std::size_t k = 0; k < r; ++k) a(k, k) = 1;
  a(i, r) = 1;

  // t clamped between 0 and mu; negated when mu < 0.
  RatVector e_t = zero_rat_vector(r + 1);
  e_t[r] = 1;
  RatVector zero = zero_rat_vector(r + 1);
  RatVector minus_e_t = Rational(-1) * e_t;
  auto t_at_least = [&](const Rational& s) { return LinearConstraint{e_t, s}; };
  auto t_at_most = [&](const Rational& s) { return LinearConstraint{minus_e_t, -s}; };
  std::vector<std::pair<HPolyhedron, AffinePiece>> pieces;
  if (mu > 0) {
    pieces.emplace_back(HPolyhedron(r + 1, {t_at_most(0)}), AffinePiece{zero, 0});
    pieces.emplace_back(HPolyhedron(r + 1, {t_at_least(0), t_at_most(mu)}), AffinePiece{e_t, 0});
    pieces.emplace_back(HPolyhedron(r + 1, {t_at_least(mu)}), AffinePiece{zero, mu});
  } else {
    pieces.emplace_back(HPolyhedron(r + 1, {t_at_most(mu)}), AffinePiece{zero, -mu});
    pieces.emplace_back(HPolyhedron(r + 1, {t_at_least(mu), t_at_most(0)}), AffinePiece{minus_e_t, 0});
    pieces.emplace_back(HPolyhedron(r + 1, {t_at_least(0)}), AffinePiece{zero, 0});
  }
  return {std::move(z), PiecewiseAffineFunction(r + 1, std::move(pieces)), IntegerAffineMap::linear(std::move(a))};
}

TropicalCycle witness_image(const TranslationWitness& w) { return push_forward(w.f, divisor(w.phi, w.z)); }

}  // namespace tropical
