#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minklen/polytope.hpp"

namespace minklen {

struct DecompositionPart {
  int multiplicity = 0;
  Vec direction;  // primitive, sign-canonical
};

// Witness for a lower bound on the Minkowski length: the zonotope
// anchor + sum(multiplicity_i * [0, direction_i]) fits inside the polytope
// it was computed from.
struct Decomposition {
  Vec anchor;
  std::vector<DecompositionPart> parts;

  int total() const {
    int t = 0;
    for (const auto& p : parts) t += p.multiplicity;
    return t;
  }
};

struct SearchStats {
  std::uint64_t quadruples_examined = 0;
  std::uint64_t planar_triples_examined = 0;
  std::uint64_t templates_searched = 0;
  std::uint64_t tuple_nodes = 0;
  std::uint64_t anchor_filters = 0;
  double elapsed_sec = 0.0;
};

enum class TemplateKind { Collinear, Planar, Volume1, Volume2 };

// Candidate segment directions E_1..E_7 for one zonotope family.
struct TemplateBasis {
  TemplateKind kind = TemplateKind::Collinear;
  std::vector<Vec> segments;
};

struct LengthResult {
  int length = 0;
  Decomposition witness;
  SearchStats stats;
};

// Largest M such that some lattice point F of P has F + M*v inside P.
// v must be primitive.
int max_cap(const LatticePolytope& p, const Vec& v);

// Lex-smallest lattice point F of P such that F + sum(tuple_i * [0, E_i])
// is contained in P, or nullopt if no translate fits.
std::optional<Vec> fit_zonotope(const LatticePolytope& p, const TemplateBasis& basis,
                                const std::vector<int>& tuple);

// Re-checks a witness from scratch: multiplicities positive, directions
// primitive and pairwise non-parallel, all zonotope vertices inside P.
bool verify_decomposition(const LatticePolytope& p, const Decomposition& d);

// Best single-direction decomposition (degenerate collinear case).
LengthResult length_1d(const LatticePolytope& p);

// Polygon Minkowski length via the three-segment template {u, v, u+v} over
// unimodular lattice-point triples. Requires ambient dimension 2.
LengthResult length_2d(const LatticePolytope& p);

// 3D Minkowski length via the seven-segment template families over lattice
// point quadruples of parallelepiped volume 1 or 2, plus the planar and
// collinear families. Requires a full-dimensional polytope.
LengthResult length_3d(const LatticePolytope& p);

// Dispatch by dimension; planar polytopes embedded in 3D are reduced to the
// plane and their witness mapped back.
LengthResult minkowski_length(const LatticePolytope& p);

}  // namespace minklen
