#include "tropical/io.hpp"

#include "tropical/error.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace tropical::io {

namespace {

// A JSON value with its path from the document root, for diagnostics.
class Field {
 public:
  Field(const Json& value, std::string path) : value_(value), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw TropicalError(ErrorCode::SchemaError, (path_.empty() ? std::string("document") : path_) + ": " + message);
  }

  const Json& value() const { return value_; }

  bool has(std::string_view key) const { return value_.is_object() && value_.contains(key); }

  Field operator[](std::string_view key) const {
    if (!value_.is_object()) fail("expected an object");
    auto it = value_.find(key);
    if (it == value_.end()) Field(value_, child(key)).fail("missing");
    return Field(*it, child(key));
  }

  std::size_t size() const {
    if (!value_.is_array()) fail("expected an array");
    return value_.size();
  }

  Field at(std::size_t i) const { return Field(value_[i], path_ + "[" + std::to_string(i) + "]"); }

  std::string string() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }

  Rational rational() const {
    if (value_.is_number_integer()) return Rational(value_.dump());
    if (!value_.is_string()) fail("expected an exact rational string");
    try {
      return parse_rational(value_.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  Integer integer() const {
    Rational q = rational();
    if (q.get_den() != 1) fail("expected an integer, got " + to_string(q));
    return q.get_num();
  }

  std::size_t count() const {
    if (!value_.is_number_integer() || (!value_.is_number_unsigned() && value_.get<long long>() < 0)) {
      fail("expected a nonnegative integer");
    }
    return value_.get<std::size_t>();
  }

  RatVector rational_vector(std::size_t length) const {
    if (size() != length) fail("expected " + std::to_string(length) + " entries, got " + std::to_string(size()));
    RatVector v;
    for (std::size_t i = 0; i < length; ++i) v.push_back(at(i).rational());
    return v;
  }

  IntVector integer_vector(std::size_t length) const {
    if (size() != length) fail("expected " + std::to_string(length) + " entries, got " + std::to_string(size()));
    IntVector v;
    for (std::size_t i = 0; i < length; ++i) v.push_back(at(i).integer());
    return v;
  }

 private:
  std::string child(std::string_view key) const { return path_.empty() ? std::string(key) : path_ + "." + std::string(key); }

  const Json& value_;
  std::string path_;
};

void check_header(const Field& doc, std::string_view type) {
  if (doc["format_version"].string() != kFormatVersion) {
    doc["format_version"].fail("unsupported version, expected \"" + std::string(kFormatVersion) + "\"");
  }
  if (doc.has("type") && doc["type"].string() != type) doc["type"].fail("expected \"" + std::string(type) + "\"");
}

Json header(std::string_view type) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["type"] = type;
  return j;
}

Json vector_to_json(std::span<const Rational> v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(rational_to_json(x));
  return j;
}

Json constraints_to_json(const std::vector<LinearConstraint>& cs) {
  Json j = Json::array();
  for (const auto& c : cs) j.push_back({{"normal", vector_to_json(c.normal)}, {"offset", rational_to_json(c.offset)}});
  return j;
}

Json cell_to_json(const HPolyhedron& p) {
  HPolyhedron c = p.is_canonical() ? p : canonicalize(p);
  return {{"inequalities", constraints_to_json(c.inequalities())}, {"equalities", constraints_to_json(c.equalities())}};
}

std::vector<LinearConstraint> constraints_from(const Field& f, std::size_t r) {
  std::vector<LinearConstraint> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Field c = f.at(i);
    out.push_back({c["normal"].rational_vector(r), c["offset"].rational()});
  }
  return out;
}

HPolyhedron cell_from(const Field& f, std::size_t r) {
  if (!f.value().is_object()) f.fail("expected an object");
  std::vector<LinearConstraint> ineq, eq;
  if (f.has("inequalities")) ineq = constraints_from(f["inequalities"], r);
  if (f.has("equalities")) eq = constraints_from(f["equalities"], r);
  HPolyhedron p = canonicalize(HPolyhedron(r, std::move(ineq), std::move(eq)));
  if (p.is_empty()) f.fail("empty polyhedron");
  return p;
}

std::string ridge_label(const HPolyhedron& ridge) {
  return "cell of dimension " + std::to_string(dimension(ridge)) + " through " + to_string(relative_interior_point(ridge));
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw TropicalError(ErrorCode::SchemaError, e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_to_json(const Rational& q) { return to_string(q); }

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json cycle_to_json(const TropicalCycle& c) {
  Json j = header("cycle");
  j["ambient_dim"] = c.ambient_dim();
  if (c.dimension()) {
    j["dim"] = *c.dimension();
  } else {
    j["dim"] = "zero";
  }
  Json cells = Json::array(), weights = Json::array();
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    cells.push_back(cell_to_json(c.facets()[i].cell));
    weights.push_back({{"cell", i}, {"weight", integer_to_json(c.facets()[i].weight)}});
  }
  j["cells"] = std::move(cells);
  j["weights"] = std::move(weights);
  return j;
}

TropicalCycle cycle_from_json_unchecked(const Json& j) {
  Field doc(j, "");
  check_header(doc, "cycle");
  std::size_t r = doc["ambient_dim"].count();
  Field cells_field = doc["cells"];
  std::vector<HPolyhedron> cells;
  for (std::size_t i = 0; i < cells_field.size(); ++i) cells.push_back(cell_from(cells_field.at(i), r));

  Field weights_field = doc["weights"];
  std::vector<std::optional<Integer>> weights(cells.size());
  for (std::size_t k = 0; k < weights_field.size(); ++k) {
    Field w = weights_field.at(k);
    std::size_t i = w["cell"].count();
    if (i >= cells.size()) w["cell"].fail("no cell with index " + std::to_string(i));
    if (weights[i]) w["cell"].fail("second weight for cell " + std::to_string(i));
    weights[i] = w["weight"].integer();
  }
  std::vector<WeightedCell> facets;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!weights[i]) cells_field.at(i).fail("cell has no weight");
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k != i && cells[k] != cells[i] && contains(cells[k], cells[i])) {
        throw TropicalError(ErrorCode::ValidationError, "cells[" + std::to_string(i) + "]: weight on a non-maximal cell, a face of cells[" +
                                                            std::to_string(k) + "]");
      }
    }
    facets.push_back({cells[i], *weights[i]});
  }
  TropicalCycle c(r, std::move(facets));

  Field dim = doc["dim"];
  if (dim.value().is_string()) {
    if (dim.string() != "zero") dim.fail("expected an integer or \"zero\"");
    if (c.dimension()) dim.fail("declared zero, cells have dimension " + std::to_string(*c.dimension()));
  } else {
    std::size_t d = dim.count();
    if (!c.dimension() || static_cast<std::size_t>(*c.dimension()) != d) {
      dim.fail("declared " + std::to_string(d) + ", cells have dimension " +
               (c.dimension() ? std::to_string(*c.dimension()) : std::string("zero")));
    }
  }
  return c;
}

TropicalCycle cycle_from_json(const Json& j) {
  TropicalCycle c = cycle_from_json_unchecked(j);
  auto report = validate(c);
  if (!report.valid()) throw TropicalError(ErrorCode::ValidationError, describe(report));
  return c;
}

std::string describe(const ValidationReport& report) {
  std::ostringstream out;
  for (const auto& p : report.purity_violations) out << "purity: " << p << "\n";
  for (const auto& p : report.complex_violations) out << "complex: " << p << "\n";
  for (const auto& ridge : report.unbalanced()) {
    out << "unbalanced at " << ridge_label(ridge.ridge) << ": defect " << to_string(ridge.sum) << "\n";
  }
  std::string s = out.str();
  if (!s.empty()) s.pop_back();
  return s;
}

Json polynomial_to_json(const TropicalPolynomial& p) {
  Json j = header("tropical_polynomial");
  j["ambient_dim"] = p.ambient_dim();
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::array();
    for (const auto& e : t.exponent) exps.push_back(integer_to_json(e));
    terms.push_back({{"exponents", exps}, {"coefficient", rational_to_json(t.coefficient)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

Json function_to_json(const PiecewiseAffineFunction& f) {
  Json j = header("piecewise");
  j["ambient_dim"] = f.ambient_dim();
  Json pieces = Json::array();
  for (const auto& [cell, piece] : f.pieces()) {
    pieces.push_back({{"cell", cell_to_json(cell)}, {"linear", vector_to_json(piece.linear)}, {"constant", rational_to_json(piece.constant)}});
  }
  j["pieces"] = std::move(pieces);
  return j;
}

PiecewiseAffineFunction function_from_json(const Json& j) {
  Field doc(j, "");
  if (doc["format_version"].string() != kFormatVersion) doc["format_version"].fail("unsupported version");
  std::string type = doc["type"].string();
  std::size_t r = doc["ambient_dim"].count();
  if (type == "tropical_polynomial") {
    Field terms = doc["terms"];
    std::vector<TropicalPolynomial::Term> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out.push_back({terms.at(i)["exponents"].integer_vector(r), terms.at(i)["coefficient"].rational()});
    }
    if (out.empty()) terms.fail("no terms");
    return from_tropical_polynomial(TropicalPolynomial(std::move(out)));
  }
  if (type == "piecewise") {
    Field pieces = doc["pieces"];
    std::vector<std::pair<HPolyhedron, AffinePiece>> out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      Field p = pieces.at(i);
      out.emplace_back(cell_from(p["cell"], r), AffinePiece{p["linear"].rational_vector(r), p["constant"].rational()});
    }
    return PiecewiseAffineFunction(r, std::move(out));
  }
  doc["type"].fail("expected \"tropical_polynomial\" or \"piecewise\"");
}

Json map_to_json(const IntegerAffineMap& f) {
  Json j = header("affine_map");
  j["source_dim"] = f.source_dim();
  j["target_dim"] = f.target_dim();
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.target_dim(); ++i) {
    Json row = Json::array();
    for (const auto& a : f.matrix().row(i)) row.push_back(integer_to_json(a));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  j["shift"] = vector_to_json(f.shift());
  return j;
}

IntegerAffineMap map_from_json(const Json& j) {
  Field doc(j, "");
  check_header(doc, "affine_map");
  std::size_t n = doc["source_dim"].count(), m = doc["target_dim"].count();
  Field rows = doc["matrix"];
  if (rows.size() != m) rows.fail("expected " + std::to_string(m) + " rows");
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    RatVector row = rows.at(i).rational_vector(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (row[k].get_den() != 1) {
        throw TropicalError(ErrorCode::NonIntegralMatrix,
                            "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]: " + to_string(row[k]));
      }
      a(i, k) = row[k].get_num();
    }
  }
  RatVector shift = doc.has("shift") ? doc["shift"].rational_vector(m) : zero_rat_vector(m);
  return IntegerAffineMap(std::move(a), std::move(shift));
}

Json fan_to_json(const SimplicialFan& theta) {
  Json j = header("simplicial_fan");
  j["ambient_dim"] = theta.ambient_dim();
  Json rays = Json::array();
  for (const auto& v : theta.rays()) {
    Json ray = Json::array();
    for (const auto& x : v) ray.push_back(integer_to_json(x));
    rays.push_back(std::move(ray));
  }
  j["rays"] = std::move(rays);
  j["cones"] = theta.maximal_cones();
  return j;
}

namespace {

class Canvas {
 public:
  explicit Canvas(const Window& w) : w_(w) {
    width_ = 400;
    height_ = Rational(400) * (w.y_max - w.y_min) / (w.x_max - w.x_min);
  }

  std::string x(const Rational& value) const { return fixed((value - w_.x_min) / (w_.x_max - w_.x_min) * width_); }
  std::string y(const Rational& value) const { return fixed((w_.y_max - value) / (w_.y_max - w_.y_min) * height_); }
  std::string width() const { return fixed(width_); }
  std::string height() const { return fixed(height_); }

  static std::string fixed(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", q.get_d());
    return buf;
  }

 private:
  Window w_;
  Rational width_, height_;
};

std::vector<RatVector> vertices_of(const HPolyhedron& p) {
  std::vector<RatVector> out;
  int d = dimension(p);
  if (d == 0) return {relative_interior_point(p)};
  for (const auto& v : faces(p, d)) out.push_back(relative_interior_point(v));
  return out;
}

// Counterclockwise order around the centroid, compared exactly.
void sort_around(std::vector<RatVector>& pts) {
  RatVector c = zero_rat_vector(2);
  for (const auto& p : pts) c = c + p;
  c = Rational(1, static_cast<long>(pts.size())) * c;
  auto half = [&](const RatVector& p) {
    Rational dx = p[0] - c[0], dy = p[1] - c[1];
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const RatVector& a, const RatVector& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]) > 0;
  });
}

}  // namespace

std::string plot_svg(const TropicalCycle& c, const Window& window) {
  if (c.ambient_dim() != 2) throw TropicalError(ErrorCode::NotPlanar, "plotting needs a cycle in R^2");
  if (window.x_min >= window.x_max || window.y_min >= window.y_max) throw TropicalError(ErrorCode::EmptyInput, "empty window");
  HPolyhedron box(2, {{{Rational(1), Rational(0)}, window.x_min},
                      {{Rational(-1), Rational(0)}, -window.x_max},
                      {{Rational(0), Rational(1)}, window.y_min},
                      {{Rational(0), Rational(-1)}, -window.y_max}});
  Canvas canvas(window);
  std::ostringstream polygons, lines, labels, dots;
  std::set<RatVector> vertices;
  auto label = [&](const RatVector& at, const Integer& w) {
    if (w == 1) return;
    labels << "<text x=\"" << canvas.x(at[0]) << "\" y=\"" << canvas.y(at[1]) << "\" dx=\"4\" dy=\"-4\" font-size=\"12\">"
           << w.get_str() << "</text>\n";
  };

  for (const auto& f : c.facets()) {
    if (f.weight == 0) continue;
    int d = dimension(f.cell);
    HPolyhedron clipped = canonicalize(intersect(f.cell, box));
    if (clipped.is_empty() || dimension(clipped) < d) continue;
    auto corners = vertices_of(clipped);
    if (d == 0) {
      vertices.insert(corners.front());
      label(corners.front(), f.weight);
    } else if (d == 1) {
      const auto& a = corners.front();
      const auto& b = corners.back();
      lines << "<line x1=\"" << canvas.x(a[0]) << "\" y1=\"" << canvas.y(a[1]) << "\" x2=\"" << canvas.x(b[0]) << "\" y2=\""
            << canvas.y(b[1]) << "\"/>\n";
      label(Rational(1, 2) * (a + b), f.weight);
      for (const auto& v : faces(f.cell, 1)) {
        RatVector p = relative_interior_point(v);
        if (contains_point(box, p)) vertices.insert(p);
      }
    } else {
      sort_around(corners);
      polygons << "<polygon points=\"";
      for (std::size_t i = 0; i < corners.size(); ++i) {
        polygons << (i ? " " : "") << canvas.x(corners[i][0]) << "," << canvas.y(corners[i][1]);
      }
      polygons << "\"/>\n";
      RatVector centre = zero_rat_vector(2);
      for (const auto& p : corners) centre = centre + p;
      label(Rational(1, static_cast<long>(corners.size())) * centre, f.weight);
    }
  }
  for (const auto& v : vertices) dots << "<circle cx=\"" << canvas.x(v[0]) << "\" cy=\"" << canvas.y(v[1]) << "\" r=\"3\"/>\n";

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas.width() << "\" height=\"" << canvas.height()
      << "\" viewBox=\"0 0 " << canvas.width() << " " << canvas.height() << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g fill=\"#dce6f2\" stroke=\"none\">\n" << polygons.str() << "</g>\n"
      << "<g stroke=\"black\" stroke-width=\"2\">\n" << lines.str() << "</g>\n"
      << "<g fill=\"black\">\n" << dots.str() << "</g>\n"
      << "<g fill=\"#b00000\" font-family=\"sans-serif\">\n" << labels.str() << "</g>\n"
      << "</svg>\n";
  return svg.str();
}

}  // namespace tropical::io
