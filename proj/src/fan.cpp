#include "tropical/fan.hpp"

#include "tropical/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropical {

namespace {

void subsets_of_size(const std::vector<std::size_t>& items, std::size_t k, std::size_t start, std::vector<std::size_t>& current,
                     std::set<std::vector<std::size_t>>& out) {
  if (current.size() == k) {
    out.insert(current);
    return;
  }
  for (std::size_t i = start; i < items.size(); ++i) {
    current.push_back(items[i]);
    subsets_of_size(items, k, i + 1, current, out);
    current.pop_back();
  }
}

IntVector ray_generator(const HPolyhedron& ray) { return primitive_integer_multiple(relative_interior_point(ray)); }

}  // namespace

SimplicialFan::SimplicialFan(std::size_t ambient_dim, std::vector<IntVector> rays,
                             std::vector<std::vector<std::size_t>> maximal_cones)
    : ambient_dim_(ambient_dim), rays_(std::move(rays)), maximal_cones_(std::move(maximal_cones)) {
  for (auto& c : maximal_cones_) {
    std::sort(c.begin(), c.end());
    std::vector<RatVector> gens;
    for (auto i : c) gens.push_back(to_rational(rays_.at(i)));
    if (rank(gens, ambient_dim_) != c.size()) throw TropicalError(ErrorCode::NotSimplicial, "cone with dependent generators");
  }
  std::sort(maximal_cones_.begin(), maximal_cones_.end());
}

SimplicialFan SimplicialFan::from_complex(const PolyhedralComplex& k) {
  for (const auto& c : k.cells()) {
    if (!is_cone(c)) throw TropicalError(ErrorCode::NotFan, "cell without apex at the origin");
  }
  if (k.index_of(HPolyhedron::point(zero_rat_vector(k.ambient_dim()))) == k.cells().size()) {
    throw TropicalError(ErrorCode::NotSimplicial, "cones are not pointed");
  }
  std::vector<IntVector> rays;
  for (const auto& c : k.cells()) {
    if (dimension(c) == 1) rays.push_back(ray_generator(c));
  }
  std::sort(rays.begin(), rays.end());
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& cell : k.maximal_cell_values()) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (contains_point(cell, to_rational(rays[i]))) members.push_back(i);
    }
    if (members.size() != static_cast<std::size_t>(dimension(cell))) {
      throw TropicalError(ErrorCode::NotSimplicial, "cone not spanned by dimension-many rays");
    }
    cones.push_back(std::move(members));
  }
  return SimplicialFan(k.ambient_dim(), std::move(rays), std::move(cones));
}

HPolyhedron SimplicialFan::cone(const std::vector<std::size_t>& ray_indices) const {
  std::vector<IntVector> gens;
  for (auto i : ray_indices) gens.push_back(rays_.at(i));
  return HPolyhedron::simplicial_cone(ambient_dim_, gens);
}

std::vector<HPolyhedron> SimplicialFan::maximal_cone_values() const {
  std::vector<HPolyhedron> out;
  for (const auto& c : maximal_cones_) out.push_back(cone(c));
  return out;
}

std::vector<std::vector<std::size_t>> SimplicialFan::cones_of_dim(std::size_t d) const {
  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  for (const auto& c : maximal_cones_) {
    if (c.size() >= d) subsets_of_size(c, d, 0, current, out);
  }
  return {out.begin(), out.end()};
}

PolyhedralComplex SimplicialFan::complex() const { return PolyhedralComplex(ambient_dim_, maximal_cone_values()); }

bool SimplicialFan::is_complete() const {
  if (maximal_cones_.empty()) return false;
  for (const auto& c : maximal_cones_) {
    if (c.size() != ambient_dim_) return false;
  }
  if (ambient_dim_ == 0) return true;
  std::map<std::vector<std::size_t>, int> ridge_count;
  for (const auto& c : maximal_cones_) {
    for (std::size_t skip = 0; skip < c.size(); ++skip) {
      std::vector<std::size_t> ridge;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k != skip) ridge.push_back(c[k]);
      }
      ++ridge_count[ridge];
    }
  }
  return std::all_of(ridge_count.begin(), ridge_count.end(), [](const auto& e) { return e.second == 2; });
}

namespace {

// Pulling triangulation of a pointed cone: cone from its first ray over the
// triangulations of the facets avoiding that ray. Restricting to a face gives
// the triangulation of that face, so neighbouring cones stay compatible.
class PullingTriangulation {
 public:
  explicit PullingTriangulation(const std::vector<IntVector>& rays) : rays_(rays) {}

  const std::vector<std::vector<std::size_t>>& of(const HPolyhedron& cone) {
    auto it = memo_.find(cone);
    if (it != memo_.end()) return it->second;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (contains_point(cone, to_rational(rays_[i]))) members.push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    if (members.size() == static_cast<std::size_t>(dimension(cone))) {
      out.push_back(members);
    } else {
      std::size_t apex = members.front();
      RatVector apex_point = to_rational(rays_[apex]);
      for (const auto& facet : faces(cone, 1)) {
        if (contains_point(facet, apex_point)) continue;
        for (auto simplex : of(facet)) {
          simplex.push_back(apex);
          std::sort(simplex.begin(), simplex.end());
          out.push_back(std::move(simplex));
        }
      }
    }
    return memo_.emplace(cone, std::move(out)).first->second;
  }

 private:
  const std::vector<IntVector>& rays_;
  std::map<HPolyhedron, std::vector<std::vector<std::size_t>>> memo_;
};

}  // namespace

SimplicialCompletion complete_to_simplicial(const FanCycle& c) {
  const TropicalCycle& cycle = c.cycle();
  std::size_t r = cycle.ambient_dim();
  std::vector<HPolyhedron> cells;
  for (const auto& f : cycle.facets()) cells.push_back(f.cell);
  auto hyperplanes = collect_hyperplanes(cells);
  for (std::size_t i = 0; i < r; ++i) {
    RatVector e = zero_rat_vector(r);
    e[i] = 1;
    hyperplanes.push_back({e, 0});
  }
  std::sort(hyperplanes.begin(), hyperplanes.end());
  hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());

  auto regions = split_by_hyperplanes(HPolyhedron::full_space(r), hyperplanes);
  std::set<IntVector> ray_set;
  for (const auto& region : regions) {
    if (r == 0) break;
    for (const auto& ray : faces(region, dimension(region) - 1)) ray_set.insert(ray_generator(ray));
  }
  std::vector<IntVector> rays(ray_set.begin(), ray_set.end());

  PullingTriangulation triangulate(rays);
  std::vector<std::vector<std::size_t>> maximal;
  for (const auto& region : regions) {
    for (const auto& simplex : triangulate.of(region)) maximal.push_back(simplex);
  }
  SimplicialFan theta(r, rays, std::move(maximal));
  if (!theta.is_complete()) throw std::logic_error("simplicial completion is not complete");

  std::vector<WeightedCell> refined;
  for (const auto& f : cycle.facets()) {
    auto d = static_cast<std::size_t>(dimension(f.cell));
    for (const auto& s : theta.cones_of_dim(d)) {
      bool inside = std::all_of(s.begin(), s.end(), [&](std::size_t i) { return contains_point(f.cell, to_rational(rays[i])); });
      if (inside) refined.push_back({theta.cone(s), f.weight});
    }
  }
  return {FanCycle(TropicalCycle(r, std::move(refined))), std::move(theta)};
}

PiecewiseAffineFunction simplicial_ray_function(const SimplicialFan& theta, std::size_t i) {
  if (!theta.is_complete()) throw TropicalError(ErrorCode::NotComplete, "fan does not cover the space");
  if (i >= theta.rays().size()) throw TropicalError(ErrorCode::DimMismatch, "ray index out of range");
  std::size_t r = theta.ambient_dim();
  std::vector<std::pair<HPolyhedron, AffinePiece>> pieces;
  for (const auto& c : theta.maximal_cones()) {
    // l . v_k = [k == i] for the rays of the cone: columns of the ray matrix
    // as rows for solve_left.
    std::vector<RatVector> columns(r, zero_rat_vector(r));
    RatVector target = zero_rat_vector(r);
    for (std::size_t k = 0; k < c.size(); ++k) {
      for (std::size_t j = 0; j < r; ++j) columns[j][k] = theta.rays()[c[k]][j];
      if (c[k] == i) target[k] = 1;
    }
    RatVector linear = *solve_left(columns, target);
    pieces.emplace_back(theta.cone(c), AffinePiece{std::move(linear), 0});
  }
  return PiecewiseAffineFunction(r, std::move(pieces));
}

PiecewiseAffineFunction simplicial_ray_function(const PolyhedralComplex& theta, std::size_t i) {
  return simplicial_ray_function(SimplicialFan::from_complex(theta), i);
}

}  // namespace tropical
