#include "tropical/complex.hpp"

#include "tropical/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropical {

PolyhedralComplex::PolyhedralComplex(std::size_t ambient_dim, std::span<const HPolyhedron> generating_cells)
    : ambient_dim_(ambient_dim) {
  std::map<int, std::set<HPolyhedron>> by_dim;
  for (const auto& g : generating_cells) {
    if (g.ambient_dim() != ambient_dim) throw TropicalError(ErrorCode::DimMismatch, "cell ambient dimension");
    HPolyhedron c = canonicalize(g);
    if (c.is_empty()) continue;
    by_dim[dimension(c)].insert(c);
  }
  // Close under faces, top dimension first.
  for (auto it = by_dim.rbegin(); it != by_dim.rend(); ++it) {
    if (it->first == 0) continue;
    for (const auto& c : it->second) {
      for (auto& f : faces(c, 1)) by_dim[it->first - 1].insert(std::move(f));
    }
  }
  for (auto& [d, set] : by_dim) cells_.insert(cells_.end(), set.begin(), set.end());

  facets_of_.resize(cells_.size());
  is_facet_of_something_.assign(cells_.size(), false);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (dimension(cells_[i]) == 0) continue;
    for (const auto& f : faces(cells_[i], 1)) {
      std::size_t j = index_of(f);
      facets_of_[i].push_back(j);
      is_facet_of_something_[j] = true;
    }
  }
}

std::size_t PolyhedralComplex::index_of(const HPolyhedron& cell) const {
  HPolyhedron c = canonicalize(cell);
  auto it = std::find(cells_.begin(), cells_.end(), c);
  return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<std::size_t> PolyhedralComplex::maximal_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!is_facet_of_something_[i]) out.push_back(i);
  }
  return out;
}

std::vector<HPolyhedron> PolyhedralComplex::maximal_cell_values() const {
  std::vector<HPolyhedron> out;
  for (auto i : maximal_cells()) out.push_back(cells_[i]);
  return out;
}

bool PolyhedralComplex::intersections_are_faces() const {
  auto maximal = maximal_cells();
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    for (std::size_t b = a + 1; b < maximal.size(); ++b) {
      const auto& p = cells_[maximal[a]];
      const auto& q = cells_[maximal[b]];
      HPolyhedron common = intersect(p, q);
      if (common.is_empty()) continue;
      if (!is_face(common, p) || !is_face(common, q)) return false;
    }
  }
  return true;
}

bool PolyhedralComplex::support_contains(std::span<const Rational> x) const {
  for (auto i : maximal_cells()) {
    if (contains_point(cells_[i], x)) return true;
  }
  return false;
}

std::vector<LinearConstraint> collect_hyperplanes(std::span<const HPolyhedron> cells) {
  std::set<LinearConstraint> all;
  for (const auto& c : cells) {
    for (auto& h : hyperplanes_of(c)) all.insert(std::move(h));
  }
  return {all.begin(), all.end()};
}

PolyhedralComplex halfspace_triple_refine(const PolyhedralComplex& k, const LinearConstraint& f) {
  if (is_zero(f.normal)) throw TropicalError(ErrorCode::ZeroForm, "refinement by the zero form");
  if (f.normal.size() != k.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "form length");
  std::vector<LinearConstraint> h{normalized_hyperplane(f)};
  std::vector<HPolyhedron> pieces;
  for (const auto& cell : k.maximal_cell_values()) {
    for (auto& p : split_by_hyperplanes(cell, h)) pieces.push_back(std::move(p));
  }
  return PolyhedralComplex(k.ambient_dim(), pieces);
}

PolyhedralComplex common_refinement(const PolyhedralComplex& k, const PolyhedralComplex& l) {
  if (k.ambient_dim() != l.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "common refinement across dimensions");
  auto l_cells = l.maximal_cell_values();
  std::vector<LinearConstraint> hyperplanes;
  std::vector<HPolyhedron> pieces;
  for (const auto& cell : k.maximal_cell_values()) {
    for (const auto& other : l_cells) {
      HPolyhedron common = intersect(cell, other);
      if (!common.is_empty()) pieces.push_back(std::move(common));
    }
    // Parts of the cell outside |l| are cut by l's hyperplanes only.
    if (std::any_of(l_cells.begin(), l_cells.end(), [&](const HPolyhedron& c) { return contains(c, cell); })) continue;
    if (hyperplanes.empty()) hyperplanes = collect_hyperplanes(l_cells);
    for (auto& p : split_by_hyperplanes(cell, hyperplanes)) {
      if (!l.support_contains(relative_interior_point(p))) pieces.push_back(std::move(p));
    }
  }
  return PolyhedralComplex(k.ambient_dim(), pieces);
}

}  // namespace tropical
