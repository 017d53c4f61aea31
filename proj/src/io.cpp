#include "minklen/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace minklen {

namespace {

PolytopeFile validate(PolytopeFile f) {
  if (f.dim != 2 && f.dim != 3) throw ParseError("dim must be 2 or 3");
  if (f.vertices.empty()) throw ParseError("at least one vertex required");
  return f;
}

PolytopeFile parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw ParseError("expected an object with \"dim\" and \"vertices\"");
  PolytopeFile f;
  if (!j["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
  f.dim = j["dim"].get<int>();
  if (f.dim != 2 && f.dim != 3) throw ParseError("dim must be 2 or 3");
  if (!j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || int(row.size()) != f.dim)
      throw ParseError("each vertex must have exactly dim coordinates");
    Vec v = Vec::zero(f.dim);
    for (int i = 0; i < f.dim; ++i) {
      if (!row[i].is_number_integer()) throw ParseError("coordinates must be integers");
      v.c[i] = row[i].get<i64>();
    }
    f.vertices.push_back(v);
  }
  return validate(std::move(f));
}

PolytopeFile parse_text(const std::string& text) {
  PolytopeFile f;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream row(line);
    std::vector<i64> coords;
    i64 x;
    while (row >> x) coords.push_back(x);
    if (!row.eof()) throw ParseError("non-integer token in vertex line: " + line);
    if (coords.empty()) continue;
    if (coords.size() != 2 && coords.size() != 3)
      throw ParseError("vertex lines must have 2 or 3 coordinates");
    if (f.dim == 0) f.dim = int(coords.size());
    if (int(coords.size()) != f.dim) throw ParseError("inconsistent vertex dimensions");
    Vec v = Vec::zero(f.dim);
    for (int i = 0; i < f.dim; ++i) v.c[i] = coords[i];
    f.vertices.push_back(v);
  }
  return validate(std::move(f));
}

}  // namespace

PolytopeFile parse_polytope_file(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? parse_json(text) : parse_text(text);
  }
  throw ParseError("empty input");
}

PolytopeFile load_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polytope_file(buf.str());
}

std::string serialize_polytope(const LatticePolytope& p) {
  nlohmann::ordered_json j;
  j["dim"] = p.dim_ambient();
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const Vec& v : p.vertices()) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int i = 0; i < p.dim_ambient(); ++i) row.push_back(v.c[i]);
    verts.push_back(row);
  }
  j["vertices"] = verts;
  return j.dump();
}

LatticePolytope to_polytope(const PolytopeFile& f) { return LatticePolytope::hull(f.vertices); }

LatticePolytope random_polytope(Mcg64& rng, int dim, i64 box) {
  int count = int(4 + rng.below(7));
  std::vector<Vec> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    Vec v = Vec::zero(dim);
    for (int d = 0; d < dim; ++d) v.c[d] = rng.range(0, box);
    pts.push_back(v);
  }
  return LatticePolytope::hull(pts);
}

UnimodularMap random_unimodular_map(Mcg64& rng, int dim) {
  UnimodularMap m;
  m.dim = dim;
  m.shift = Vec::zero(dim);
  for (int step = 0; step < 8; ++step) {
    int kind = int(rng.below(3));
    int i = int(rng.below(dim)), j = int(rng.below(dim));
    switch (kind) {
      case 0: {  // shear: row_i += c * row_j
        if (i == j) break;
        i64 c = rng.range(-2, 2);
        bool small = true;
        for (int k = 0; k < 3 && small; ++k)
          small = std::abs(m.matrix[i][k] + c * m.matrix[j][k]) <= 6;
        if (!small) break;
        for (int k = 0; k < 3; ++k) m.matrix[i][k] += c * m.matrix[j][k];
        break;
      }
      case 1:  // swap rows
        if (i != j) std::swap(m.matrix[i], m.matrix[j]);
        break;
      case 2:  // negate a row
        for (int k = 0; k < 3; ++k) m.matrix[i][k] = -m.matrix[i][k];
        break;
    }
  }
  for (int d = 0; d < dim; ++d) m.shift.c[d] = rng.range(-5, 5);
  if (m.det() != 1 && m.det() != -1) throw std::logic_error("random map is not unimodular");
  return m;
}

}  // namespace minklen
