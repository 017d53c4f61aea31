#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "minklen/lattice.hpp"
#include "minklen/vec.hpp"

namespace minklen {

// Halfspace <normal, x> <= offset with primitive outward normal.
struct Facet {
  Vec normal;
  i64 offset = 0;
};

// Convex lattice polytope in ambient dimension 2 or 3. Immutable after
// construction; vertex list, facets (when full-dimensional) and the full
// lattice point set are computed eagerly, so concurrent reads are safe.
//
// Points, segments and lower-dimensional polytopes are first class: a planar
// polytope in 3D carries a unimodular reduction to the z = 0 plane and a 2D
// polytope there, which containment and enumeration delegate to.
class LatticePolytope {
 public:
  static LatticePolytope hull(const std::vector<Vec>& points);

  int dim_ambient() const { return dim_ambient_; }
  int dim_affine() const { return dim_affine_; }

  // Extreme points, lex sorted.
  const std::vector<Vec>& vertices() const { return vertices_; }
  // Valid only when dim_affine == dim_ambient; sorted deterministically.
  const std::vector<Facet>& facets() const { return facets_; }
  // All of P intersect Z^n, lex sorted.
  const std::vector<Vec>& lattice_points() const { return lattice_points_; }

  bool contains(const Vec& x) const;

  // Lattice points strictly inside; empty whenever dim_affine < dim_ambient.
  std::vector<Vec> interior_points() const;

  LatticePolytope translated(const Vec& t) const;
  // Translate so the lex-smallest lattice point is the origin.
  LatticePolytope canonical() const;
  bool equal_up_to_translation(const LatticePolytope& o) const;

  // Image under a unimodular map (vertices are mapped and re-hulled).
  LatticePolytope transformed(const UnimodularMap& m) const;

  // Reduction onto the z = 0 plane for planar polytopes in 3D.
  const UnimodularMap& to_plane() const;
  const LatticePolytope& reduced2d() const;

 private:
  LatticePolytope() = default;

  int dim_ambient_ = 0;
  int dim_affine_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  std::vector<Vec> lattice_points_;

  // dim_affine == 1
  Vec line_base_, line_dir_;
  i64 line_len_ = 0;

  // planar in 3D
  std::shared_ptr<const LatticePolytope> reduced_;
  UnimodularMap to_plane_, from_plane_;
};

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& parts);

// { x in S : x + v in S }: the lattice points of the Minkowski difference of
// conv(S) by the segment [0, v]. S must be lex sorted; v nonzero.
std::vector<Vec> erode(const std::vector<Vec>& s, const Vec& v);

// Support function of the anchored zonotope sum(n_i * [0, v_i]) in the given
// direction: sum of n_i * max(<normal, v_i>, 0).
i64 zonotope_support(const std::vector<std::pair<int, Vec>>& parts, const Vec& normal);

// Maps coplanar 3D points (affine rank exactly 2) into the z = 0 plane by a
// unimodular map plus shift; returns the 2D projections and the map used.
std::pair<std::vector<Vec>, UnimodularMap> plane_reduce(const std::vector<Vec>& points);

std::vector<Vec> sorted_unique(std::vector<Vec> pts);

// Translate a nonempty sorted point set so its lex minimum is the origin.
std::vector<Vec> canonical_translate(const std::vector<Vec>& pts);

}  // namespace minklen
