#include "minklen/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace minklen {

std::vector<Vec> sorted_unique(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<Vec> canonical_translate(const std::vector<Vec>& pts) {
  if (pts.empty()) return pts;
  Vec base = pts.front();
  std::vector<Vec> out;
  out.reserve(pts.size());
  for (const Vec& p : pts) out.push_back(p - base);
  return out;
}

namespace {

int sign_of(i128 v) { return (v > 0) - (v < 0); }

// Greedy affine basis: indices into pts of up to dim+1 affinely independent
// points, starting from pts[0].
std::vector<int> affine_basis(const std::vector<Vec>& pts, int dim) {
  std::vector<int> basis{0};
  int n = int(pts.size());
  for (int i = 1; i < n && int(basis.size()) < dim + 1; ++i) {
    const Vec d = pts[i] - pts[0];
    bool indep = false;
    switch (basis.size()) {
      case 1:
        indep = !d.is_zero();
        break;
      case 2: {
        const Vec d1 = pts[basis[1]] - pts[0];
        indep = (dim == 2) ? det2(d1, d) != 0 : !cross(d1, d).is_zero();
        break;
      }
      case 3: {
        const Vec d1 = pts[basis[1]] - pts[0];
        const Vec d2 = pts[basis[2]] - pts[0];
        indep = det3(d1, d2, d) != 0;
        break;
      }
    }
    if (indep) basis.push_back(i);
  }
  return basis;
}

// ----- 2D convex hull (monotone chain, strict turns) -----

i64 cross2(const Vec& o, const Vec& a, const Vec& b) { return det2(a - o, b - o); }

// pts sorted unique, affine rank 2. Returns CCW vertex cycle.
std::vector<Vec> hull2d_ccw(const std::vector<Vec>& pts) {
  int n = int(pts.size());
  std::vector<Vec> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// ----- 3D convex hull (incremental, exact predicates) -----

struct Tri {
  int a, b, c;
};

int orient3d(const std::vector<Vec>& p, const Tri& t, const Vec& q) {
  const Vec n = cross(p[t.b] - p[t.a], p[t.c] - p[t.a]);
  return sign_of(dot128(n, q - p[t.a]));
}

// pts sorted unique with affine rank 3. Returns outward-oriented triangles.
std::vector<Tri> hull3d(const std::vector<Vec>& pts) {
  std::vector<int> basis = affine_basis(pts, 3);
  int i0 = basis[0], i1 = basis[1], i2 = basis[2], i3 = basis[3];
  if (det3(pts[i1] - pts[i0], pts[i2] - pts[i0], pts[i3] - pts[i0]) < 0) std::swap(i2, i3);
  std::vector<Tri> faces{{i0, i2, i1}, {i0, i1, i3}, {i0, i3, i2}, {i1, i2, i3}};

  int n = int(pts.size());
  std::vector<char> visible;
  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    visible.assign(faces.size(), 0);
    bool any = false;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (orient3d(pts, faces[f], pts[i]) > 0) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;  // inside or on the current hull

    std::map<std::pair<int, int>, size_t> edge_face;
    for (size_t f = 0; f < faces.size(); ++f) {
      const Tri& t = faces[f];
      edge_face[{t.a, t.b}] = f;
      edge_face[{t.b, t.c}] = f;
      edge_face[{t.c, t.a}] = f;
    }
    std::vector<Tri> next;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) next.push_back(faces[f]);
    }
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      const Tri& t = faces[f];
      const std::pair<int, int> edges[3] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
      for (const auto& [u, v] : edges) {
        if (!visible[edge_face.at({v, u})]) next.push_back({u, v, i});
      }
    }
    faces = std::move(next);
  }
  return faces;
}

struct FacetKey {
  Vec normal;
  i64 offset;
  bool operator<(const FacetKey& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

i64 bbox_cells(const Vec& lo, const Vec& hi, int dim) {
  i128 cells = 1;
  for (int i = 0; i < dim; ++i) cells *= i128(hi.c[i] - lo.c[i] + 1);
  if (cells > 100000000) throw std::runtime_error("lattice point enumeration too large");
  return i64(cells);
}

void bounding_box(const std::vector<Vec>& pts, Vec& lo, Vec& hi) {
  lo = hi = pts[0];
  for (const Vec& p : pts)
    for (int i = 0; i < 3; ++i) {
      lo.c[i] = std::min(lo.c[i], p.c[i]);
      hi.c[i] = std::max(hi.c[i], p.c[i]);
    }
}

}  // namespace

LatticePolytope LatticePolytope::hull(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("hull of empty point list");
  int dim = points[0].dim;
  for (const Vec& p : points)
    if (p.dim != dim) throw std::invalid_argument("mixed ambient dimensions");
  std::vector<Vec> pts = sorted_unique(points);

  LatticePolytope poly;
  poly.dim_ambient_ = dim;
  std::vector<int> basis = affine_basis(pts, dim);
  poly.dim_affine_ = int(basis.size()) - 1;

  // Point.
  if (poly.dim_affine_ == 0) {
    poly.vertices_ = {pts[0]};
    poly.lattice_points_ = {pts[0]};
    return poly;
  }

  // Segment: lex order along a canonical direction is monotone, so the
  // sorted extremes are the endpoints.
  if (poly.dim_affine_ == 1) {
    Vec span = pts.back() - pts.front();
    poly.line_dir_ = canonical_dir(primitive_part(span));
    poly.line_base_ = pts.front();
    int nz = 0;
    while (poly.line_dir_.c[nz] == 0) ++nz;
    poly.line_len_ = span.c[nz] / poly.line_dir_.c[nz];
    poly.vertices_ = {pts.front(), pts.back()};
    poly.lattice_points_.reserve(poly.line_len_ + 1);
    for (i64 k = 0; k <= poly.line_len_; ++k)
      poly.lattice_points_.push_back(poly.line_base_ + poly.line_dir_ * k);
    poly.lattice_points_ = sorted_unique(poly.lattice_points_);
    return poly;
  }

  // Planar polytope embedded in 3D: reduce to the z = 0 plane and delegate.
  if (poly.dim_affine_ == 2 && dim == 3) {
    auto [flat, to_plane] = plane_reduce(pts);
    poly.to_plane_ = to_plane;
    poly.from_plane_ = to_plane.inverse();
    poly.reduced_ = std::make_shared<const LatticePolytope>(hull(flat));
    auto lift = [&](const std::vector<Vec>& qs) {
      std::vector<Vec> out;
      out.reserve(qs.size());
      for (const Vec& q : qs) out.push_back(poly.from_plane_.apply(Vec(q.c[0], q.c[1], 0)));
      return sorted_unique(out);
    };
    poly.vertices_ = lift(poly.reduced_->vertices());
    poly.lattice_points_ = lift(poly.reduced_->lattice_points());
    return poly;
  }

  // Full-dimensional: facets first, then vertices and the point scan.
  std::map<FacetKey, int> planes;
  std::vector<int> corner_ids;
  if (dim == 2) {
    std::vector<Vec> cycle = hull2d_ccw(pts);
    int m = int(cycle.size());
    for (int i = 0; i < m; ++i) {
      const Vec &a = cycle[i], &b = cycle[(i + 1) % m];
      Vec d = b - a;
      Vec n = primitive_part(Vec(d.c[1], -d.c[0]));
      planes[{n, dot(n, a)}] = 1;
    }
    poly.vertices_ = sorted_unique(cycle);
  } else {
    std::vector<Tri> tris = hull3d(pts);
    std::unordered_set<int> corners;
    for (const Tri& t : tris) {
      Vec n = primitive_part(cross(pts[t.b] - pts[t.a], pts[t.c] - pts[t.a]));
      planes[{n, checked_i64(dot128(n, pts[t.a]))}] = 1;
      corners.insert(t.a);
      corners.insert(t.b);
      corners.insert(t.c);
    }
    corner_ids.assign(corners.begin(), corners.end());
  }
  poly.facets_.reserve(planes.size());
  for (const auto& [key, unused] : planes) {
    (void)unused;
    poly.facets_.push_back({key.normal, key.offset});
  }

  if (dim == 3) {
    // A corner of the triangulated surface is a vertex iff its active facet
    // normals span rank 3 (edge and face-interior corners have rank < 3).
    for (int id : corner_ids) {
      const Vec& p = pts[id];
      std::vector<Vec> active;
      for (const Facet& f : poly.facets_)
        if (dot128(f.normal, p) == f.offset) active.push_back(f.normal);
      bool rank3 = false;
      if (active.size() >= 3) {
        size_t j = 1;
        while (j < active.size() && cross(active[0], active[j]).is_zero()) ++j;
        if (j < active.size()) {
          for (size_t k = 1; k < active.size() && !rank3; ++k)
            rank3 = det3(active[0], active[j], active[k]) != 0;
        }
      }
      if (rank3) poly.vertices_.push_back(p);
    }
    poly.vertices_ = sorted_unique(poly.vertices_);
  }

  Vec lo, hi;
  bounding_box(poly.vertices_, lo, hi);
  bbox_cells(lo, hi, dim);
  Vec x = Vec::zero(dim);
  for (i64 xv = lo.c[0]; xv <= hi.c[0]; ++xv)
    for (i64 yv = lo.c[1]; yv <= hi.c[1]; ++yv)
      for (i64 zv = lo.c[2]; zv <= hi.c[2]; ++zv) {
        x.c[0] = xv;
        x.c[1] = yv;
        x.c[2] = zv;
        bool in = true;
        for (const Facet& f : poly.facets_)
          if (dot128(f.normal, x) > f.offset) {
            in = false;
            break;
          }
        if (in) poly.lattice_points_.push_back(x);
      }
  return poly;
}

bool LatticePolytope::contains(const Vec& x) const {
  if (x.dim != dim_ambient_) throw std::invalid_argument("ambient dimension mismatch");
  switch (dim_affine_) {
    case 0:
      return x == vertices_[0];
    case 1: {
      Vec d = x - line_base_;
      if (dim_ambient_ == 2 ? det2(d, line_dir_) != 0 : !cross(d, line_dir_).is_zero())
        return false;
      int nz = 0;
      while (line_dir_.c[nz] == 0) ++nz;
      if (d.c[nz] % line_dir_.c[nz] != 0) return false;
      i64 k = d.c[nz] / line_dir_.c[nz];
      return k >= 0 && k <= line_len_ && line_base_ + line_dir_ * k == x;
    }
    default:
      if (dim_affine_ < dim_ambient_) {
        Vec q = to_plane_.apply(x);
        if (q.c[2] != 0) return false;
        return reduced_->contains(Vec(q.c[0], q.c[1]));
      }
      for (const Facet& f : facets_)
        if (dot128(f.normal, x) > f.offset) return false;
      return true;
  }
}

std::vector<Vec> LatticePolytope::interior_points() const {
  std::vector<Vec> out;
  if (dim_affine_ < dim_ambient_) return out;
  for (const Vec& p : lattice_points_) {
    bool strict = true;
    for (const Facet& f : facets_)
      if (dot128(f.normal, p) >= f.offset) {
        strict = false;
        break;
      }
    if (strict) out.push_back(p);
  }
  return out;
}

LatticePolytope LatticePolytope::translated(const Vec& t) const {
  if (t.dim != dim_ambient_) throw std::invalid_argument("ambient dimension mismatch");
  LatticePolytope p = *this;
  for (Vec& v : p.vertices_) v += t;
  for (Vec& v : p.lattice_points_) v += t;
  for (Facet& f : p.facets_) f.offset = checked_i64(f.offset + dot128(f.normal, t));
  p.line_base_ += t;
  if (reduced_) {
    // Keep the reduction maps consistent: the plane's z-offset moves by
    // <last row, t>, the in-plane picture by the first two coordinates.
    Vec lt = to_plane_.apply_linear(t);
    p.to_plane_.shift = to_plane_.shift - Vec(0, 0, lt.c[2]);
    p.from_plane_ = p.to_plane_.inverse();
    p.reduced_ = std::make_shared<const LatticePolytope>(reduced_->translated(Vec(lt.c[0], lt.c[1])));
  }
  return p;
}

LatticePolytope LatticePolytope::canonical() const { return translated(-lattice_points_.front()); }

bool LatticePolytope::equal_up_to_translation(const LatticePolytope& o) const {
  if (dim_ambient_ != o.dim_ambient_ || dim_affine_ != o.dim_affine_) return false;
  if (vertices_.size() != o.vertices_.size()) return false;
  Vec a = vertices_.front(), b = o.vertices_.front();
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] - a != o.vertices_[i] - b) return false;
  return true;
}

LatticePolytope LatticePolytope::transformed(const UnimodularMap& m) const {
  std::vector<Vec> vs;
  vs.reserve(vertices_.size());
  for (const Vec& v : vertices_) vs.push_back(m.apply(v));
  return hull(vs);
}

const UnimodularMap& LatticePolytope::to_plane() const {
  if (!reduced_) throw std::logic_error("polytope has no plane reduction");
  return to_plane_;
}

const LatticePolytope& LatticePolytope::reduced2d() const {
  if (!reduced_) throw std::logic_error("polytope has no plane reduction");
  return *reduced_;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim_ambient() != q.dim_ambient()) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<Vec> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const Vec& a : p.vertices())
    for (const Vec& b : q.vertices()) sums.push_back(a + b);
  return LatticePolytope::hull(sums);
}

LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& parts) {
  if (parts.empty()) throw std::invalid_argument("minkowski_sum of empty list");
  LatticePolytope acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) acc = minkowski_sum(acc, parts[i]);
  return acc;
}

std::vector<Vec> erode(const std::vector<Vec>& s, const Vec& v) {
  if (v.is_zero()) throw std::invalid_argument("erode by zero vector");
  std::unordered_set<Vec, VecHash> member(s.begin(), s.end());
  std::vector<Vec> out;
  for (const Vec& x : s)
    if (member.count(x + v)) out.push_back(x);
  return out;
}

i64 zonotope_support(const std::vector<std::pair<int, Vec>>& parts, const Vec& normal) {
  i64 total = 0;
  for (const auto& [mult, dir] : parts) total += i64(mult) * std::max<i64>(dot(normal, dir), 0);
  return total;
}

std::pair<std::vector<Vec>, UnimodularMap> plane_reduce(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("plane_reduce of empty list");
  for (const Vec& p : points)
    if (p.dim != 3) throw std::invalid_argument("plane_reduce needs 3D points");
  std::vector<Vec> pts = sorted_unique(points);
  std::vector<int> basis = affine_basis(pts, 3);
  if (basis.size() != 3) throw std::invalid_argument("points do not span a plane");

  Vec d1 = pts[basis[1]] - pts[0], d2 = pts[basis[2]] - pts[0];
  Vec u = primitive_part(cross(d1, d2));
  UnimodularMap m = complete_to_unimodular(u);
  i64 c = dot(u, pts[0]);
  m.shift = Vec(0, 0, -c);

  std::vector<Vec> flat;
  flat.reserve(points.size());
  for (const Vec& p : points) {
    Vec q = m.apply(p);
    if (q.c[2] != 0) throw std::invalid_argument("points are not coplanar");
    flat.push_back(Vec(q.c[0], q.c[1]));
  }
  return {flat, m};
}

}  // namespace minklen
