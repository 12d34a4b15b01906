#include "tropical/cycle.hpp"

#include "tropical/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tropical {

namespace {

std::vector<WeightedCell> combine(std::size_t ambient_dim, std::vector<WeightedCell> cells) {
  std::map<HPolyhedron, Integer> sums;
  for (auto& wc : cells) {
    if (wc.cell.ambient_dim() != ambient_dim) throw TropicalError(ErrorCode::DimMismatch, "cell ambient dimension");
    HPolyhedron c = canonicalize(wc.cell);
    if (c.is_empty()) continue;
    sums[std::move(c)] += wc.weight;
  }
  std::vector<WeightedCell> out;
  for (auto& [c, w] : sums) out.push_back({c, w});
  return out;
}

bool meets_as_face(const HPolyhedron& p, const HPolyhedron& q) {
  HPolyhedron common = intersect(p, q);
  return common.is_empty() || (is_face(common, p) && is_face(common, q));
}

// The union of two facets sharing the ridge tau, when it is a polyhedron.
std::optional<HPolyhedron> try_merge(const HPolyhedron& a, const HPolyhedron& b, const HPolyhedron& tau) {
  RatVector inside = relative_interior_point(tau);
  std::optional<LinearConstraint> cut;
  for (const auto& h : a.inequalities()) {
    if (h.evaluate(inside) == 0) cut = h;
  }
  if (!cut) return std::nullopt;
  std::vector<LinearConstraint> ineqs;
  auto keep_valid = [&](const HPolyhedron& from, const HPolyhedron& other) {
    for (const auto& g : from.inequalities()) {
      if (g.evaluate(inside) == 0) continue;
      auto range = evaluate_range(other, g);
      if (range.min && *range.min >= 0) ineqs.push_back(g);
    }
  };
  keep_valid(a, b);
  keep_valid(b, a);
  HPolyhedron merged = canonicalize(HPolyhedron(a.ambient_dim(), ineqs, a.equalities()));
  LinearConstraint flipped{Rational(-1) * cut->normal, -cut->offset};
  HPolyhedron upper = intersect(merged, HPolyhedron(a.ambient_dim(), {*cut}));
  HPolyhedron lower = intersect(merged, HPolyhedron(a.ambient_dim(), {flipped}));
  if (upper != a || lower != b) return std::nullopt;
  return merged;
}

// The union of the cells when it is a polyhedron: the candidate keeps every
// member inequality valid on all members, and is accepted when each piece of
// it in the members' arrangement lies in some member.
std::optional<HPolyhedron> convex_union(const std::vector<HPolyhedron>& members) {
  std::vector<LinearConstraint> ineqs;
  for (const auto& m : members) {
    for (const auto& g : m.inequalities()) {
      bool valid = std::all_of(members.begin(), members.end(), [&](const HPolyhedron& other) {
        auto range = evaluate_range(other, g);
        return range.min && *range.min >= 0;
      });
      if (valid) ineqs.push_back(g);
    }
  }
  HPolyhedron candidate = canonicalize(HPolyhedron(members.front().ambient_dim(), ineqs, members.front().equalities()));
  auto hyperplanes = collect_hyperplanes(members);
  for (const auto& piece : split_by_hyperplanes(candidate, hyperplanes)) {
    bool covered = std::any_of(members.begin(), members.end(), [&](const HPolyhedron& m) { return contains(m, piece); });
    if (!covered) return std::nullopt;
  }
  return candidate;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Replaces each group of facets glued across ridges that only they share
// (same weight and affine hull) by its union, when that is a polyhedron and
// the result is still a complex.
void merge_components(std::size_t ambient_dim, std::vector<WeightedCell>& facets) {
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& star : ridge_stars(TropicalCycle(ambient_dim, facets))) {
    if (star.facets.size() != 2) continue;
    std::size_t i = star.facets[0], j = star.facets[1];
    if (facets[i].weight != facets[j].weight || facets[i].cell.equalities() != facets[j].cell.equalities()) continue;
    parent[find_root(parent, i)] = find_root(parent, j);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < facets.size(); ++i) groups[find_root(parent, i)].push_back(i);

  std::vector<WeightedCell> merged;
  std::vector<bool> consumed(facets.size(), false);
  for (const auto& [root, members] : groups) {
    if (members.size() < 2) continue;
    std::vector<HPolyhedron> cells;
    for (auto i : members) cells.push_back(facets[i].cell);
    auto u = convex_union(cells);
    if (!u) continue;
    bool compatible = true;
    for (std::size_t k = 0; k < facets.size() && compatible; ++k) {
      if (find_root(parent, k) != root) compatible = meets_as_face(*u, facets[k].cell);
    }
    if (!compatible) continue;
    merged.push_back({*u, facets[members.front()].weight});
    for (auto i : members) consumed[i] = true;
  }
  if (merged.empty()) return;
  for (std::size_t a = 0; a < merged.size(); ++a) {
    for (std::size_t b = a + 1; b < merged.size(); ++b) {
      if (!meets_as_face(merged[a].cell, merged[b].cell)) return;
    }
  }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (!consumed[i]) merged.push_back(facets[i]);
  }
  facets = TropicalCycle(ambient_dim, std::move(merged)).facets();
}

bool merge_once(std::vector<WeightedCell>& facets) {
  for (std::size_t i = 0; i < facets.size(); ++i) {
    auto ridges_i = faces(facets[i].cell, 1);
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if (facets[i].weight != facets[j].weight) continue;
      if (facets[i].cell.equalities() != facets[j].cell.equalities()) continue;
      auto ridges_j = faces(facets[j].cell, 1);
      for (const auto& tau : ridges_i) {
        if (std::find(ridges_j.begin(), ridges_j.end(), tau) == ridges_j.end()) continue;
        auto merged = try_merge(facets[i].cell, facets[j].cell, tau);
        if (!merged) continue;
        bool compatible = true;
        for (std::size_t k = 0; k < facets.size() && compatible; ++k) {
          if (k != i && k != j) compatible = meets_as_face(*merged, facets[k].cell);
        }
        if (!compatible) continue;
        facets[i].cell = *merged;
        facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(j));
        return true;
      }
    }
  }
  return false;
}

}  // namespace

TropicalCycle TropicalCycle::zero(std::size_t ambient_dim) { return TropicalCycle(ambient_dim, {}); }

TropicalCycle::TropicalCycle(std::size_t ambient_dim, std::vector<WeightedCell> facets)
    : ambient_dim_(ambient_dim), facets_(combine(ambient_dim, std::move(facets))) {
  for (const auto& f : facets_) dim_ = std::max(dim_.value_or(-1), tropical::dimension(f.cell));
}

bool TropicalCycle::is_zero() const {
  return std::all_of(facets_.begin(), facets_.end(), [](const WeightedCell& f) { return f.weight == 0; });
}

PolyhedralComplex TropicalCycle::complex() const {
  std::vector<HPolyhedron> cells;
  for (const auto& f : facets_) cells.push_back(f.cell);
  return PolyhedralComplex(ambient_dim_, cells);
}

std::vector<RidgeBalance> ValidationReport::unbalanced() const {
  std::vector<RidgeBalance> out;
  std::copy_if(ridges.begin(), ridges.end(), std::back_inserter(out), [](const RidgeBalance& r) { return !r.balanced; });
  return out;
}

bool ValidationReport::valid() const {
  return purity_violations.empty() && complex_violations.empty() && unbalanced().empty();
}

std::vector<RidgeStar> ridge_stars(const TropicalCycle& c) {
  std::vector<HPolyhedron> cells;
  for (const auto& f : c.facets()) cells.push_back(f.cell);
  return ridge_stars(cells);
}

std::vector<RidgeStar> ridge_stars(std::span<const HPolyhedron> facets) {
  std::map<HPolyhedron, RidgeStar> stars;
  std::map<HPolyhedron, std::pair<LatticeBasis, RatVector>> ridge_data;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto& sigma = facets[i];
    if (dimension(sigma) < 1) continue;
    LatticeBasis sigma_lattice = lattice(sigma);
    RatVector sigma_point = relative_interior_point(sigma);
    for (auto& tau : faces(sigma, 1)) {
      auto it = ridge_data.find(tau);
      if (it == ridge_data.end()) it = ridge_data.emplace(tau, std::pair{lattice(tau), relative_interior_point(tau)}).first;
      const auto& [tau_lattice, tau_point] = it->second;
      IntVector normal = quotient_normal_vector(tau_lattice, sigma_lattice, sigma_point - tau_point).representative;
      auto& star = stars.try_emplace(tau, RidgeStar{tau, {}, {}}).first->second;
      star.facets.push_back(i);
      star.normals.push_back(std::move(normal));
    }
  }
  std::vector<RidgeStar> out;
  for (auto& [tau, star] : stars) out.push_back(std::move(star));
  return out;
}

ValidationReport validate(const TropicalCycle& c) {
  ValidationReport report;
  for (const auto& f : c.facets()) {
    if (dimension(f.cell) != *c.dimension()) {
      report.purity_violations.push_back("facet of dimension " + std::to_string(dimension(f.cell)) +
                                         " in a cycle of dimension " + std::to_string(*c.dimension()));
    }
  }
  const auto& facets = c.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if (!meets_as_face(facets[i].cell, facets[j].cell)) {
        report.complex_violations.push_back("facets " + std::to_string(i) + " and " + std::to_string(j) +
                                            " do not meet in a common face");
      }
    }
  }
  for (const auto& star : ridge_stars(c)) {
    IntVector sum = zero_int_vector(c.ambient_dim());
    for (std::size_t k = 0; k < star.facets.size(); ++k) {
      sum = sum + c.facets()[star.facets[k]].weight * star.normals[k];
    }
    bool balanced = lattice(star.ridge).in_span(to_rational(sum));
    report.ridges.push_back({star.ridge, std::move(sum), balanced});
  }
  return report;
}

TropicalCycle assemble(std::size_t ambient_dim, std::span<const WeightedCell> cells) {
  std::vector<WeightedCell> inputs;
  std::vector<HPolyhedron> supports;
  for (const auto& wc : cells) {
    if (wc.weight == 0) continue;
    HPolyhedron c = canonicalize(wc.cell);
    if (c.is_empty()) continue;
    if (!supports.empty() && dimension(supports.front()) != dimension(c)) {
      throw TropicalError(ErrorCode::DimMismatch, "cells of different dimensions");
    }
    supports.push_back(c);
    inputs.push_back({std::move(c), wc.weight});
  }
  auto hyperplanes = collect_hyperplanes(supports);
  std::vector<WeightedCell> pieces;
  for (const auto& wc : inputs) {
    for (auto& p : split_by_hyperplanes(wc.cell, hyperplanes)) pieces.push_back({std::move(p), wc.weight});
  }
  auto combined = combine(ambient_dim, std::move(pieces));
  std::erase_if(combined, [](const WeightedCell& f) { return f.weight == 0; });
  return TropicalCycle(ambient_dim, std::move(combined));
}

TropicalCycle normalize(const TropicalCycle& c) {
  std::vector<WeightedCell> facets = c.facets();
  std::erase_if(facets, [](const WeightedCell& f) { return f.weight == 0; });
  if (!facets.empty() && *c.dimension() >= 1) {
    merge_components(c.ambient_dim(), facets);
    while (merge_once(facets)) {
    }
  }
  return TropicalCycle(c.ambient_dim(), std::move(facets));
}

namespace {

void require_same_ambient(const TropicalCycle& c, const TropicalCycle& d) {
  if (c.ambient_dim() != d.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "cycles in different ambient spaces");
}

// Nonzero facets of c followed by those of d scaled by sign.
std::vector<WeightedCell> joined(const TropicalCycle& c, const TropicalCycle& d, int sign) {
  std::vector<WeightedCell> cells;
  for (const auto& f : c.facets()) {
    if (f.weight != 0) cells.push_back(f);
  }
  for (const auto& f : d.facets()) {
    if (f.weight != 0) cells.push_back({f.cell, sign * f.weight});
  }
  return cells;
}

}  // namespace

bool equals(const TropicalCycle& c, const TropicalCycle& d) {
  require_same_ambient(c, d);
  if (c.is_zero() || d.is_zero()) return c.is_zero() && d.is_zero();
  if (c.dimension() != d.dimension()) return false;
  return assemble(c.ambient_dim(), joined(c, d, -1)).is_zero();
}

TropicalCycle scalar_multiply(const Integer& n, const TropicalCycle& c) {
  if (n == 0) return TropicalCycle::zero(c.ambient_dim());
  std::vector<WeightedCell> facets;
  for (const auto& f : c.facets()) facets.push_back({f.cell, n * f.weight});
  return TropicalCycle(c.ambient_dim(), std::move(facets));
}

TropicalCycle add(const TropicalCycle& c, const TropicalCycle& d) {
  require_same_ambient(c, d);
  if (!c.is_zero() && !d.is_zero() && c.dimension() != d.dimension()) {
    throw TropicalError(ErrorCode::DimMismatch, "adding cycles of different dimensions");
  }
  return normalize(assemble(c.ambient_dim(), joined(c, d, 1)));
}

TropicalCycle cross_product(const TropicalCycle& c, const TropicalCycle& e) {
  std::size_t ambient = c.ambient_dim() + e.ambient_dim();
  if (c.is_zero() || e.is_zero()) return TropicalCycle::zero(ambient);
  std::vector<WeightedCell> facets;
  for (const auto& f : c.facets()) {
    for (const auto& g : e.facets()) facets.push_back({product(f.cell, g.cell), f.weight * g.weight});
  }
  return TropicalCycle(ambient, std::move(facets));
}

TropicalCycle translate(const TropicalCycle& c, const RatVector& v) {
  if (v.size() != c.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "translation vector length");
  std::vector<WeightedCell> facets;
  for (const auto& f : c.facets()) facets.push_back({translate(f.cell, v), f.weight});
  return TropicalCycle(c.ambient_dim(), std::move(facets));
}

Integer degree_zero_cycle(const TropicalCycle& c) {
  if (c.is_zero()) return 0;
  if (c.dimension() != 0) throw TropicalError(ErrorCode::NotZeroDimensional, "degree of a positive-dimensional cycle");
  Integer total = 0;
  for (const auto& f : c.facets()) total += f.weight;
  return total;
}

bool is_fan_cycle(const TropicalCycle& c) {
  return std::all_of(c.facets().begin(), c.facets().end(), [](const WeightedCell& f) { return is_cone(f.cell); });
}

FanCycle::FanCycle(TropicalCycle c) : cycle_(std::move(c)) {
  if (!is_fan_cycle(cycle_)) throw TropicalError(ErrorCode::NotFan, "cell without apex at the origin");
}

}  // namespace tropical
