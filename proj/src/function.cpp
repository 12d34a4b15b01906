#include "tropical/function.hpp"

#include "tropical/error.hpp"

#include <algorithm>
#include <map>

namespace tropical {

TropicalPolynomial::TropicalPolynomial(std::vector<Term> terms) {
  if (terms.empty()) throw TropicalError(ErrorCode::EmptyInput, "tropical polynomial without terms");
  std::map<IntVector, Rational> best;
  for (auto& t : terms) {
    if (t.exponent.size() != terms.front().exponent.size()) {
      throw TropicalError(ErrorCode::DimMismatch, "exponents of different lengths");
    }
    auto [it, inserted] = best.try_emplace(t.exponent, t.coefficient);
    if (!inserted && t.coefficient > it->second) it->second = t.coefficient;
  }
  for (auto& [e, c] : best) terms_.push_back({e, c});
}

Rational TropicalPolynomial::evaluate(std::span<const Rational> x) const {
  Rational best = dot(to_rational(terms_.front().exponent), x) + terms_.front().coefficient;
  for (const auto& t : terms_) best = std::max(best, Rational(dot(to_rational(t.exponent), x) + t.coefficient));
  return best;
}

PiecewiseAffineFunction::PiecewiseAffineFunction(std::size_t ambient_dim,
                                                 std::vector<std::pair<HPolyhedron, AffinePiece>> pieces)
    : ambient_dim_(ambient_dim) {
  for (auto& [cell, piece] : pieces) {
    if (cell.ambient_dim() != ambient_dim || piece.linear.size() != ambient_dim) {
      throw TropicalError(ErrorCode::DimMismatch, "function piece of the wrong length");
    }
    HPolyhedron c = canonicalize(cell);
    if (!c.is_empty()) pieces_.emplace_back(std::move(c), std::move(piece));
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
      const auto& [p, f] = pieces_[i];
      const auto& [q, g] = pieces_[j];
      HPolyhedron common = intersect(p, q);
      if (common.is_empty()) continue;
      if (!is_face(common, p) || !is_face(common, q)) {
        throw TropicalError(ErrorCode::InvalidFunction, "domain cells do not meet in a common face");
      }
      RatVector x = relative_interior_point(common);
      RatVector slope_gap = f.linear - g.linear;
      bool agree = f.evaluate(x) == g.evaluate(x);
      for (const auto& v : direction_space(common)) agree = agree && dot(slope_gap, v) == 0;
      if (!agree) throw TropicalError(ErrorCode::InvalidFunction, "pieces disagree on a shared face");
    }
  }
}

bool PiecewiseAffineFunction::has_integral_slopes() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const auto& p) { return is_integral(p.second.linear); });
}

bool PiecewiseAffineFunction::domain_contains(std::span<const Rational> x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const auto& p) { return contains_point(p.first, x); });
}

Rational PiecewiseAffineFunction::evaluate(std::span<const Rational> x) const {
  for (const auto& [cell, piece] : pieces_) {
    if (contains_point(cell, x)) return piece.evaluate(x);
  }
  throw TropicalError(ErrorCode::SupportNotCovered, "point outside the domain of the function");
}

PiecewiseAffineFunction from_tropical_polynomial(const TropicalPolynomial& p) {
  std::size_t r = p.ambient_dim();
  std::vector<std::pair<HPolyhedron, AffinePiece>> pieces;
  for (const auto& t : p.terms()) {
    std::vector<LinearConstraint> wins;
    for (const auto& other : p.terms()) {
      if (&other == &t) continue;
      wins.push_back({to_rational(t.exponent - other.exponent), other.coefficient - t.coefficient});
    }
    HPolyhedron region = canonicalize(HPolyhedron(r, wins));
    if (dimension(region) == static_cast<int>(r)) pieces.emplace_back(region, AffinePiece{to_rational(t.exponent), t.coefficient});
  }
  return PiecewiseAffineFunction(r, std::move(pieces));
}

namespace {

struct Split {
  HPolyhedron cell;
  std::size_t parent;
  const AffinePiece* piece;
};

bool on_relative_boundary(const HPolyhedron& sigma, const HPolyhedron& tau) {
  RatVector x = relative_interior_point(tau);
  return std::any_of(sigma.inequalities().begin(), sigma.inequalities().end(),
                     [&](const LinearConstraint& h) { return h.evaluate(x) == 0; });
}

// Full-dimensional pieces of each cell on the domain cells. A cell is
// covered iff every ridge of a piece off the cell's boundary is shared by
// another piece.
std::vector<Split> split_along(const PiecewiseAffineFunction& phi, std::span<const HPolyhedron> cells) {
  std::vector<Split> out;
  for (std::size_t parent = 0; parent < cells.size(); ++parent) {
    const auto& sigma = cells[parent];
    int d = dimension(sigma);
    std::map<HPolyhedron, const AffinePiece*> found;
    for (const auto& [domain_cell, piece] : phi.pieces()) {
      HPolyhedron common = intersect(sigma, domain_cell);
      if (!common.is_empty() && dimension(common) == d) found.try_emplace(std::move(common), &piece);
    }
    if (found.empty()) throw TropicalError(ErrorCode::SupportNotCovered, "cell outside the domain of the function");
    if (d >= 1) {
      std::map<HPolyhedron, int> ridge_count;
      for (const auto& [cell, piece] : found) {
        for (auto& tau : faces(cell, 1)) ++ridge_count[std::move(tau)];
      }
      for (const auto& [tau, count] : ridge_count) {
        if (count == 1 && !on_relative_boundary(sigma, tau)) {
          throw TropicalError(ErrorCode::SupportNotCovered, "cell only partly inside the domain of the function");
        }
      }
    }
    for (auto& [cell, piece] : found) out.push_back({cell, parent, piece});
  }
  return out;
}

}  // namespace

Restriction restrict_to(const PiecewiseAffineFunction& phi, const TropicalCycle& c) {
  if (phi.ambient_dim() != c.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "function and cycle ambient dimensions");
  std::vector<HPolyhedron> cells;
  for (const auto& f : c.facets()) cells.push_back(f.cell);
  auto splits = split_along(phi, cells);
  std::vector<WeightedCell> refined;
  std::map<HPolyhedron, AffinePiece> piece_of;
  for (const auto& s : splits) {
    refined.push_back({s.cell, c.facets()[s.parent].weight});
    piece_of.try_emplace(s.cell, *s.piece);
  }
  Restriction out{TropicalCycle(c.ambient_dim(), std::move(refined)), {}};
  for (const auto& f : out.refined.facets()) out.pieces.push_back(piece_of.at(f.cell));
  return out;
}

std::vector<RationalWeightedCell> divisor_weights(const PiecewiseAffineFunction& phi, std::size_t ambient_dim,
                                                  std::span<const RationalWeightedCell> facets) {
  if (phi.ambient_dim() != ambient_dim) throw TropicalError(ErrorCode::DimMismatch, "function and cycle ambient dimensions");
  std::vector<HPolyhedron> cells;
  for (const auto& f : facets) cells.push_back(f.cell);
  auto splits = split_along(phi, cells);
  std::vector<HPolyhedron> refined;
  for (const auto& s : splits) refined.push_back(s.cell);

  std::vector<RationalWeightedCell> out;
  for (const auto& star : ridge_stars(refined)) {
    RatVector defect = zero_rat_vector(ambient_dim);
    Rational value = 0;
    for (std::size_t k = 0; k < star.facets.size(); ++k) {
      const auto& s = splits[star.facets[k]];
      const Rational& w = facets[s.parent].weight;
      RatVector normal = to_rational(star.normals[k]);
      defect = defect + w * normal;
      value += w * dot(s.piece->linear, normal);
    }
    if (!lattice(star.ridge).in_span(defect)) throw TropicalError(ErrorCode::InvalidCycle, "cycle is not balanced");
    value -= dot(splits[star.facets.front()].piece->linear, defect);
    out.push_back({star.ridge, value});
  }
  return out;
}

TropicalCycle divisor_of_valid(const PiecewiseAffineFunction& phi, const TropicalCycle& c) {
  if (phi.ambient_dim() != c.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "function and cycle ambient dimensions");
  if (c.is_zero() || *c.dimension() == 0) return TropicalCycle::zero(c.ambient_dim());
  std::vector<RationalWeightedCell> facets;
  for (const auto& f : c.facets()) {
    if (f.weight != 0) facets.push_back({f.cell, Rational(f.weight)});
  }
  std::vector<WeightedCell> cells;
  for (auto& [tau, w] : divisor_weights(phi, c.ambient_dim(), facets)) {
    if (w == 0) continue;
    if (w.get_den() != 1) throw TropicalError(ErrorCode::NonIntegralWeight, "divisor weight " + to_string(w));
    cells.push_back({std::move(tau), w.get_num()});
  }
  return normalize(TropicalCycle(c.ambient_dim(), std::move(cells)));
}

TropicalCycle divisor(const PiecewiseAffineFunction& phi, const TropicalCycle& c) {
  if (!validate(c).valid()) throw TropicalError(ErrorCode::InvalidCycle, "divisor of an invalid cycle");
  return divisor_of_valid(phi, c);
}

bool is_bounded(const PiecewiseAffineFunction& phi, const TropicalCycle& c) {
  auto r = restrict_to(phi, c);
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    if (r.refined.facets()[i].weight == 0) continue;
    auto range = evaluate_range(recession_cone(r.refined.facets()[i].cell), {r.pieces[i].linear, 0});
    if (!range.min || !range.max || *range.min != 0 || *range.max != 0) return false;
  }
  return true;
}

}  // namespace tropical
