#include "tropical/polyhedron.hpp"

#include "tropical/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropical {

namespace {

// RREF of the equality system; nullopt when inconsistent.
std::optional<std::vector<LinearConstraint>> reduce_equalities(std::size_t n, const std::vector<LinearConstraint>& eqs) {
  if (eqs.empty()) return std::vector<LinearConstraint>{};
  RatMatrix aug(eqs.size(), n + 1);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = eqs[i].normal[j];
    aug(i, n) = eqs[i].offset;
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<LinearConstraint> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    LinearConstraint c{RatVector(aug.row(i).begin(), aug.row(i).begin() + static_cast<std::ptrdiff_t>(n)), aug(i, n)};
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t leading_index(const RatVector& v) {
  std::size_t p = 0;
  while (p < v.size() && sgn(v[p]) == 0) ++p;
  return p;
}

// Reduce modulo RREF equalities and scale to a primitive integer normal.
// Returns false when the inequality is trivially satisfied (normal zero,
// offset <= 0); sets infeasible when it reads 0 >= positive.
bool reduce_inequality(LinearConstraint& c, const std::vector<LinearConstraint>& eqs, bool& infeasible) {
  for (const auto& e : eqs) {
    std::size_t p = leading_index(e.normal);
    if (sgn(c.normal[p]) == 0) continue;
    Rational f = c.normal[p];
    for (std::size_t j = 0; j < c.normal.size(); ++j) {
      if (sgn(e.normal[j]) != 0) c.normal[j] -= f * e.normal[j];
    }
    c.offset -= f * e.offset;
  }
  if (is_zero(c.normal)) {
    if (sgn(c.offset) > 0) infeasible = true;
    return false;
  }
  IntVector prim = primitive_integer_multiple(c.normal);
  std::size_t p = leading_index(c.normal);
  Rational factor = Rational(prim[p]) / c.normal[p];
  c.normal = to_rational(prim);
  c.offset *= factor;
  return true;
}

std::vector<LinearConstraint> dedupe_inequalities(std::vector<LinearConstraint> in) {
  std::map<RatVector, Rational, decltype([](const RatVector& a, const RatVector& b) { return compare(a, b) < 0; })> best;
  for (auto& c : in) {
    auto it = best.find(c.normal);
    if (it == best.end()) {
      best.emplace(std::move(c.normal), std::move(c.offset));
    } else if (c.offset > it->second) {
      it->second = c.offset;
    }
  }
  std::vector<LinearConstraint> out;
  out.reserve(best.size());
  for (auto& [normal, offset] : best) out.push_back({normal, offset});
  return out;
}

LinearConstraint negate(const LinearConstraint& c) {
  LinearConstraint out{RatVector(c.normal.size()), -c.offset};
  for (std::size_t j = 0; j < c.normal.size(); ++j) out.normal[j] = -c.normal[j];
  return out;
}

void require_same_dim(const HPolyhedron& p, const HPolyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw TropicalError(ErrorCode::DimMismatch, "polyhedra live in R^" + std::to_string(p.ambient_dim()) + " and R^" +
                                                    std::to_string(q.ambient_dim()));
  }
}

}  // namespace

HPolyhedron::HPolyhedron(std::size_t ambient_dim, std::vector<LinearConstraint> inequalities,
                         std::vector<LinearConstraint> equalities)
    : ambient_dim_(ambient_dim), inequalities_(std::move(inequalities)), equalities_(std::move(equalities)) {
  for (const auto* list : {&inequalities_, &equalities_}) {
    for (const auto& c : *list) {
      if (c.normal.size() != ambient_dim_) {
        throw TropicalError(ErrorCode::DimMismatch, "constraint length " + std::to_string(c.normal.size()) +
                                                        " in R^" + std::to_string(ambient_dim_));
      }
    }
  }
}

HPolyhedron HPolyhedron::full_space(std::size_t ambient_dim) {
  HPolyhedron p(ambient_dim);
  p.canonical_ = true;
  return p;
}

HPolyhedron HPolyhedron::empty(std::size_t ambient_dim) {
  HPolyhedron p(ambient_dim);
  p.canonical_ = true;
  p.empty_ = true;
  return p;
}

HPolyhedron HPolyhedron::point(const RatVector& x) {
  std::vector<LinearConstraint> eqs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    RatVector e = zero_rat_vector(x.size());
    e[i] = 1;
    eqs.push_back({std::move(e), x[i]});
  }
  return canonicalize(HPolyhedron(x.size(), {}, std::move(eqs)));
}

HPolyhedron HPolyhedron::simplicial_cone(std::size_t n, const std::vector<IntVector>& generators) {
  const std::size_t k = generators.size();
  std::vector<LinearConstraint> eqs;
  std::vector<LinearConstraint> ineqs;
  if (k == 0) return point(zero_rat_vector(n));
  RatMatrix g(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = generators[i][j];
  for (auto& a : null_space(g)) eqs.push_back({std::move(a), 0});
  // Dual basis inside the span: l_i = G^T (G G^T)^{-1} e_i.
  RatMatrix gram = g * g.transpose();
  RatMatrix aug(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = gram(i, j);
    aug(i, k + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < k || pivots.back() >= k) {
    throw TropicalError(ErrorCode::NotSimplicial, "cone generators are linearly dependent");
  }
  for (std::size_t i = 0; i < k; ++i) {
    RatVector l = zero_rat_vector(n);
    for (std::size_t j = 0; j < k; ++j) {
      const Rational& c = aug(j, k + i);
      if (sgn(c) == 0) continue;
      for (std::size_t x = 0; x < n; ++x) l[x] += c * g(j, x);
    }
    ineqs.push_back({std::move(l), 0});
  }
  return canonicalize(HPolyhedron(n, std::move(ineqs), std::move(eqs)));
}

HPolyhedron canonicalize(const HPolyhedron& p) {
  if (p.canonical_) return p;
  const std::size_t n = p.ambient_dim_;
  auto eqs = reduce_equalities(n, p.equalities_);
  if (!eqs) return HPolyhedron::empty(n);

  std::vector<LinearConstraint> ineqs;
  auto rebuild = [&](const std::vector<LinearConstraint>& source) -> bool {
    ineqs.clear();
    bool infeasible = false;
    for (auto c : source) {
      if (reduce_inequality(c, *eqs, infeasible)) ineqs.push_back(std::move(c));
      if (infeasible) return false;
    }
    ineqs = dedupe_inequalities(std::move(ineqs));
    return true;
  };
  if (!rebuild(p.inequalities_)) return HPolyhedron::empty(n);

  // Surface implicit equalities.
  while (!ineqs.empty()) {
    std::vector<LinearConstraint> lifted;
    for (const auto& c : ineqs) {
      RatVector a = c.normal;
      a.push_back(-1);
      lifted.push_back({std::move(a), c.offset});
    }
    RatVector cap = zero_rat_vector(n + 1);
    cap[n] = -1;
    lifted.push_back({cap, -1});
    std::vector<LinearConstraint> lifted_eqs;
    for (const auto& e : *eqs) {
      RatVector a = e.normal;
      a.push_back(0);
      lifted_eqs.push_back({std::move(a), e.offset});
    }
    RatVector objective = zero_rat_vector(n + 1);
    objective[n] = 1;
    auto sol = lp::maximize(objective, lifted, lifted_eqs);
    if (sol.status != lp::Status::Optimal || sgn(sol.value) < 0) return HPolyhedron::empty(n);
    if (sgn(sol.value) > 0) break;

    std::vector<LinearConstraint> implicit;
    std::vector<LinearConstraint> remaining;
    for (const auto& c : ineqs) {
      auto m = lp::maximize(c.normal, ineqs, *eqs);
      if (m.status == lp::Status::Optimal && m.value == c.offset) {
        implicit.push_back(c);
      } else {
        remaining.push_back(c);
      }
    }
    std::vector<LinearConstraint> all_eqs = *eqs;
    all_eqs.insert(all_eqs.end(), implicit.begin(), implicit.end());
    eqs = reduce_equalities(n, all_eqs);
    if (!eqs) return HPolyhedron::empty(n);
    if (!rebuild(remaining)) return HPolyhedron::empty(n);
  }

  // Drop redundant inequalities one at a time.
  for (std::size_t i = 0; i < ineqs.size();) {
    std::vector<LinearConstraint> others;
    others.reserve(ineqs.size() - 1);
    for (std::size_t j = 0; j < ineqs.size(); ++j) {
      if (j != i) others.push_back(ineqs[j]);
    }
    auto m = lp::minimize(ineqs[i].normal, others, *eqs);
    if (m.status == lp::Status::Optimal && m.value >= ineqs[i].offset) {
      ineqs.erase(ineqs.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  std::sort(ineqs.begin(), ineqs.end());

  HPolyhedron out(n);
  out.inequalities_ = std::move(ineqs);
  out.equalities_ = std::move(*eqs);
  out.canonical_ = true;
  return out;
}

std::strong_ordering operator<=>(const HPolyhedron& a, const HPolyhedron& b) {
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  if (auto c = a.empty_ <=> b.empty_; c != 0) return c;
  if (auto c = a.equalities_.size() <=> b.equalities_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.equalities_.size(); ++i) {
    if (auto c = a.equalities_[i] <=> b.equalities_[i]; c != 0) return c;
  }
  if (auto c = a.inequalities_.size() <=> b.inequalities_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.inequalities_.size(); ++i) {
    if (auto c = a.inequalities_[i] <=> b.inequalities_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

int dimension(const HPolyhedron& p) {
  HPolyhedron c = canonicalize(p);
  if (c.is_empty()) return -1;
  return static_cast<int>(c.ambient_dim() - c.equalities().size());
}

std::vector<HPolyhedron> faces(const HPolyhedron& p, int codim) {
  HPolyhedron c = canonicalize(p);
  const int d = dimension(c);
  if (codim < 0 || codim > d) {
    throw TropicalError(ErrorCode::BadCodim, "codimension " + std::to_string(codim) + " for a polyhedron of dimension " +
                                                 std::to_string(d));
  }
  std::set<HPolyhedron> level{c};
  for (int step = 0; step < codim; ++step) {
    std::set<HPolyhedron> next;
    for (const auto& f : level) {
      for (std::size_t i = 0; i < f.inequalities().size(); ++i) {
        std::vector<LinearConstraint> ineqs = f.inequalities();
        std::vector<LinearConstraint> eqs = f.equalities();
        eqs.push_back(ineqs[i]);
        ineqs.erase(ineqs.begin() + static_cast<std::ptrdiff_t>(i));
        next.insert(canonicalize(HPolyhedron(f.ambient_dim(), std::move(ineqs), std::move(eqs))));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

HPolyhedron recession_cone(const HPolyhedron& p) {
  HPolyhedron c = canonicalize(p);
  if (c.is_empty()) throw TropicalError(ErrorCode::EmptyInput, "recession cone of an empty polyhedron");
  std::vector<LinearConstraint> ineqs;
  std::vector<LinearConstraint> eqs;
  for (const auto& i : c.inequalities()) ineqs.push_back({i.normal, 0});
  for (const auto& e : c.equalities()) eqs.push_back({e.normal, 0});
  return canonicalize(HPolyhedron(c.ambient_dim(), std::move(ineqs), std::move(eqs)));
}

HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& q) {
  require_same_dim(p, q);
  if ((p.is_canonical() && p.is_empty()) || (q.is_canonical() && q.is_empty())) return HPolyhedron::empty(p.ambient_dim());
  std::vector<LinearConstraint> ineqs = p.inequalities();
  ineqs.insert(ineqs.end(), q.inequalities().begin(), q.inequalities().end());
  std::vector<LinearConstraint> eqs = p.equalities();
  eqs.insert(eqs.end(), q.equalities().begin(), q.equalities().end());
  return canonicalize(HPolyhedron(p.ambient_dim(), std::move(ineqs), std::move(eqs)));
}

RatVector relative_interior_point(const HPolyhedron& p) {
  HPolyhedron c = canonicalize(p);
  const std::size_t n = c.ambient_dim();
  if (c.is_empty()) throw TropicalError(ErrorCode::EmptyInput, "relative interior of an empty polyhedron");
  std::vector<LinearConstraint> lifted;
  for (const auto& i : c.inequalities()) {
    RatVector a = i.normal;
    a.push_back(-1);
    lifted.push_back({std::move(a), i.offset});
  }
  RatVector cap = zero_rat_vector(n + 1);
  cap[n] = -1;
  lifted.push_back({cap, -1});
  std::vector<LinearConstraint> lifted_eqs;
  for (const auto& e : c.equalities()) {
    RatVector a = e.normal;
    a.push_back(0);
    lifted_eqs.push_back({std::move(a), e.offset});
  }
  RatVector objective = zero_rat_vector(n + 1);
  objective[n] = 1;
  auto sol = lp::maximize(objective, lifted, lifted_eqs);
  RatVector x(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(n));
  return x;
}

bool contains_point(const HPolyhedron& p, std::span<const Rational> x) {
  if (p.is_canonical() && p.is_empty()) return false;
  for (const auto& c : p.inequalities()) {
    if (sgn(c.evaluate(x)) < 0) return false;
  }
  for (const auto& c : p.equalities()) {
    if (sgn(c.evaluate(x)) != 0) return false;
  }
  return true;
}

bool contains(const HPolyhedron& outer, const HPolyhedron& inner) {
  HPolyhedron in = canonicalize(inner);
  if (in.is_empty()) return true;
  return intersect(outer, in) == in;
}

bool is_face(const HPolyhedron& face, const HPolyhedron& p) {
  HPolyhedron f = canonicalize(face);
  HPolyhedron c = canonicalize(p);
  if (f.is_empty() || !contains(c, f)) return false;
  RatVector x = relative_interior_point(f);
  std::vector<LinearConstraint> ineqs;
  std::vector<LinearConstraint> eqs = c.equalities();
  for (const auto& i : c.inequalities()) {
    if (sgn(i.evaluate(x)) == 0) {
      eqs.push_back(i);
    } else {
      ineqs.push_back(i);
    }
  }
  return canonicalize(HPolyhedron(c.ambient_dim(), std::move(ineqs), std::move(eqs))) == f;
}

bool is_cone(const HPolyhedron& p) {
  HPolyhedron c = canonicalize(p);
  if (c.is_empty()) return false;
  for (const auto* list : {&c.inequalities(), &c.equalities()}) {
    for (const auto& i : *list) {
      if (sgn(i.offset) != 0) return false;
    }
  }
  return true;
}

std::vector<RatVector> direction_space(const HPolyhedron& p) {
  HPolyhedron c = canonicalize(p);
  const std::size_t n = c.ambient_dim();
  if (c.is_empty()) return {};
  if (c.equalities().empty()) {
    std::vector<RatVector> basis;
    for (std::size_t j = 0; j < n; ++j) {
      RatVector e = zero_rat_vector(n);
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  RatMatrix m(c.equalities().size(), n);
  for (std::size_t i = 0; i < c.equalities().size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c.equalities()[i].normal[j];
  return null_space(m);
}

LatticeBasis lattice(const HPolyhedron& p) { return saturate_span(p.ambient_dim(), direction_space(p)); }

HPolyhedron translate(const HPolyhedron& p, const RatVector& v) {
  if (v.size() != p.ambient_dim()) throw TropicalError(ErrorCode::DimMismatch, "translation vector length");
  HPolyhedron c = canonicalize(p);
  if (c.is_empty()) return c;
  std::vector<LinearConstraint> ineqs;
  std::vector<LinearConstraint> eqs;
  for (const auto& i : c.inequalities()) ineqs.push_back({i.normal, i.offset + dot(i.normal, v)});
  for (const auto& e : c.equalities()) eqs.push_back({e.normal, e.offset + dot(e.normal, v)});
  return canonicalize(HPolyhedron(c.ambient_dim(), std::move(ineqs), std::move(eqs)));
}

HPolyhedron product(const HPolyhedron& p, const HPolyhedron& q) {
  const std::size_t m = p.ambient_dim();
  const std::size_t n = q.ambient_dim();
  auto embed = [&](const LinearConstraint& c, std::size_t shift) {
    RatVector a = zero_rat_vector(m + n);
    for (std::size_t j = 0; j < c.normal.size(); ++j) a[shift + j] = c.normal[j];
    return LinearConstraint{std::move(a), c.offset};
  };
  HPolyhedron cp = canonicalize(p);
  HPolyhedron cq = canonicalize(q);
  if (cp.is_empty() || cq.is_empty()) return HPolyhedron::empty(m + n);
  std::vector<LinearConstraint> ineqs;
  std::vector<LinearConstraint> eqs;
  for (const auto& c : cp.inequalities()) ineqs.push_back(embed(c, 0));
  for (const auto& c : cq.inequalities()) ineqs.push_back(embed(c, m));
  for (const auto& c : cp.equalities()) eqs.push_back(embed(c, 0));
  for (const auto& c : cq.equalities()) eqs.push_back(embed(c, m));
  return canonicalize(HPolyhedron(m + n, std::move(ineqs), std::move(eqs)));
}

HPolyhedron affine_image(const HPolyhedron& p, const IntMatrix& a, const RatVector& shift) {
  const std::size_t n = p.ambient_dim();
  const std::size_t m = a.rows();
  if (a.cols() != n || shift.size() != m) throw TropicalError(ErrorCode::DimMismatch, "affine map shape");
  HPolyhedron c = canonicalize(p);
  if (c.is_empty()) return HPolyhedron::empty(m);

  // Work in (x, y) space: x in P, y = A x + shift; then eliminate x.
  const std::size_t total = n + m;
  std::vector<LinearConstraint> ineqs;
  std::vector<LinearConstraint> eqs;
  for (const auto& i : c.inequalities()) {
    RatVector v = zero_rat_vector(total);
    std::copy(i.normal.begin(), i.normal.end(), v.begin());
    ineqs.push_back({std::move(v), i.offset});
  }
  for (const auto& e : c.equalities()) {
    RatVector v = zero_rat_vector(total);
    std::copy(e.normal.begin(), e.normal.end(), v.begin());
    eqs.push_back({std::move(v), e.offset});
  }
  for (std::size_t r = 0; r < m; ++r) {
    RatVector v = zero_rat_vector(total);
    for (std::size_t j = 0; j < n; ++j) v[j] = -Rational(a(r, j));
    v[n + r] = 1;
    eqs.push_back({std::move(v), shift[r]});
  }

  for (std::size_t var = 0; var < n; ++var) {
    // Substitute through an equality when possible.
    auto pivot = std::find_if(eqs.begin(), eqs.end(), [&](const LinearConstraint& e) { return sgn(e.normal[var]) != 0; });
    if (pivot != eqs.end()) {
      LinearConstraint e = *pivot;
      eqs.erase(pivot);
      auto eliminate = [&](LinearConstraint& target) {
        if (sgn(target.normal[var]) == 0) return;
        Rational f = target.normal[var] / e.normal[var];
        for (std::size_t j = 0; j < total; ++j) {
          if (sgn(e.normal[j]) != 0) target.normal[j] -= f * e.normal[j];
        }
        target.offset -= f * e.offset;
      };
      for (auto& t : eqs) eliminate(t);
      for (auto& t : ineqs) eliminate(t);
    } else {
      std::vector<LinearConstraint> pos, neg, rest;
      for (auto& t : ineqs) {
        int s = sgn(t.normal[var]);
        (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(t));
      }
      for (const auto& u : pos) {
        for (const auto& l : neg) {
          Rational fu = -l.normal[var];
          Rational fl = u.normal[var];
          LinearConstraint comb{RatVector(total), fu * u.offset + fl * l.offset};
          for (std::size_t j = 0; j < total; ++j) comb.normal[j] = fu * u.normal[j] + fl * l.normal[j];
          rest.push_back(std::move(comb));
        }
      }
      ineqs = std::move(rest);
    }
    HPolyhedron step = canonicalize(HPolyhedron(total, ineqs, eqs));
    if (step.is_empty()) return HPolyhedron::empty(m);
    ineqs = step.inequalities();
    eqs = step.equalities();
  }

  auto drop = [&](const LinearConstraint& t) {
    return LinearConstraint{RatVector(t.normal.begin() + static_cast<std::ptrdiff_t>(n), t.normal.end()), t.offset};
  };
  std::vector<LinearConstraint> out_ineqs;
  std::vector<LinearConstraint> out_eqs;
  for (const auto& t : ineqs) out_ineqs.push_back(drop(t));
  for (const auto& t : eqs) out_eqs.push_back(drop(t));
  return canonicalize(HPolyhedron(m, std::move(out_ineqs), std::move(out_eqs)));
}

HPolyhedron affine_preimage(const HPolyhedron& p, const IntMatrix& a, const RatVector& shift) {
  const std::size_t m = p.ambient_dim();
  const std::size_t n = a.cols();
  if (a.rows() != m || shift.size() != m) throw TropicalError(ErrorCode::DimMismatch, "affine map shape");
  HPolyhedron c = canonicalize(p);
  if (c.is_empty()) return HPolyhedron::empty(n);
  auto pull = [&](const LinearConstraint& t) {
    RatVector v = zero_rat_vector(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t.normal[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += t.normal[i] * a(i, j);
    }
    return LinearConstraint{std::move(v), t.offset - dot(t.normal, shift)};
  };
  std::vector<LinearConstraint> ineqs;
  std::vector<LinearConstraint> eqs;
  for (const auto& t : c.inequalities()) ineqs.push_back(pull(t));
  for (const auto& t : c.equalities()) eqs.push_back(pull(t));
  return canonicalize(HPolyhedron(n, std::move(ineqs), std::move(eqs)));
}

LinearConstraint normalized_hyperplane(const LinearConstraint& h) {
  if (is_zero(h.normal)) throw TropicalError(ErrorCode::ZeroForm, "hyperplane with zero normal");
  IntVector prim = primitive_integer_multiple(h.normal);
  std::size_t p = leading_index(h.normal);
  Rational factor = Rational(prim[p]) / h.normal[p];
  if (prim[p] < 0) {
    for (auto& x : prim) x = -x;
    factor = -factor;
  }
  return {to_rational(prim), h.offset * factor};
}

std::vector<LinearConstraint> hyperplanes_of(const HPolyhedron& p) {
  HPolyhedron c = canonicalize(p);
  std::vector<LinearConstraint> out;
  for (const auto* list : {&c.inequalities(), &c.equalities()}) {
    for (const auto& i : *list) out.push_back(normalized_hyperplane(i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Range evaluate_range(const HPolyhedron& p, const LinearConstraint& h) {
  HPolyhedron c = canonicalize(p);
  if (c.is_empty()) throw TropicalError(ErrorCode::EmptyInput, "range over an empty polyhedron");
  Range r;
  auto hi = lp::maximize(h.normal, c.inequalities(), c.equalities());
  if (hi.status == lp::Status::Optimal) r.max = hi.value - h.offset;
  auto lo = lp::minimize(h.normal, c.inequalities(), c.equalities());
  if (lo.status == lp::Status::Optimal) r.min = lo.value - h.offset;
  return r;
}

std::vector<HPolyhedron> split_by_hyperplanes(const HPolyhedron& p, std::span<const LinearConstraint> hyperplanes) {
  HPolyhedron c = canonicalize(p);
  if (c.is_empty()) return {};
  std::vector<HPolyhedron> pieces{c};
  for (const auto& h : hyperplanes) {
    std::vector<HPolyhedron> next;
    for (auto& piece : pieces) {
      Range r = evaluate_range(piece, h);
      bool above = !r.max || sgn(*r.max) > 0;
      bool below = !r.min || sgn(*r.min) < 0;
      if (above && below) {
        std::vector<LinearConstraint> up = piece.inequalities();
        up.push_back(h);
        std::vector<LinearConstraint> down = piece.inequalities();
        down.push_back(negate(h));
        next.push_back(canonicalize(HPolyhedron(piece.ambient_dim(), std::move(up), piece.equalities())));
        next.push_back(canonicalize(HPolyhedron(piece.ambient_dim(), std::move(down), piece.equalities())));
      } else {
        next.push_back(std::move(piece));
      }
    }
    pieces = std::move(next);
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

}  // namespace tropical
