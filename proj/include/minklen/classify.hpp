#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "minklen/lattice.hpp"
#include "minklen/length.hpp"
#include "minklen/oracle.hpp"
#include "minklen/polytope.hpp"

namespace minklen {

// Multiplicity pattern of the mod-3 classes of the segments spanned by a
// 5-point lattice set inside a polytope of Minkowski length 1. Sets that
// match no pattern (possible only when the length-1 premise fails) are
// Unclassifiable.
enum class FivePointType {
  FourTwoTwoTwo,    // 4a, 2b, 2(a+b), 2(a-b)
  ThreeThreeTwoTwo, // 3a, 3b, 2(a+b), 2(a-b)
  ThreeSeven,       // 3a + singletons b, a+b, a-b, c, a+c, a-c, a+b-c
  TwoTwoSix,        // 2a, 2b + singletons a+b, a-b, c, a+c, b+c, a+b+c
  TenDistinct,      // all ten segments in distinct classes
  Unclassifiable,
};

std::string to_string(FivePointType t);

struct SegmentClassProfile {
  std::map<Mod3Class, int> counts;
  int zero_class_segments = 0;  // point differences divisible by 3
};

// Types the ten segments spanned by exactly five distinct points, verifying
// the structural class relations of each pattern (multiplicity multisets
// alone can coincide accidentally).
std::pair<FivePointType, SegmentClassProfile> five_point_type(const std::vector<Vec>& pts);

// Types of every 5-subset of a small point set (|pts| <= 8 in practice).
std::vector<FivePointType> five_subset_types(const std::vector<Vec>& pts);

enum class Length1PolygonKind { PrimitiveSegment, UnitSimplex, T0 };

std::string to_string(Length1PolygonKind k);

// Classifies a polygon of Minkowski length 1 by its unimodular invariants.
// Throws std::invalid_argument when L != 1 and std::logic_error when the
// invariants match none of the three known kinds.
Length1PolygonKind classify_length1_polygon(const LatticePolytope& p);

struct InteriorLedger {
  std::vector<std::pair<std::size_t, int>> per_part;  // (part index, interior count)
  int total = 0;
  int parts_with_interior = 0;
};

// Interior-point ledger of a Minkowski decomposition: verifies every part
// has length 1 and that the sum fits in the container by a lattice
// translation, then reports per-part interior counts (3D topology). The
// ledger reports; callers assert the bounds they care about.
InteriorLedger interior_ledger(const std::vector<LatticePolytope>& parts,
                               const LatticePolytope& container);

struct PairCheck {
  int length_p = 0, length_q = 0, length_sum = 0;
  bool all_subsets_type10_p = false, all_subsets_type10_q = false;
  bool same_up_to_translation = false;
  bool holds = false;  // L(P+Q) >= 3, or both type (10) and translates
};

// Both polytopes must have length 1 and at least five lattice points.
PairCheck check_pair_theorem(const LatticePolytope& p, const LatticePolytope& q,
                             std::uint64_t oracle_budget = kDefaultOracleBudget);

struct TripleCheck {
  int length_p = 0, length_q = 0, length_r = 0, length_sum = 0;
  bool holds = false;  // L(P+Q+R) >= 4
};

TripleCheck check_triple_theorem(const LatticePolytope& p, const LatticePolytope& q,
                                 const LatticePolytope& r,
                                 std::uint64_t oracle_budget = kDefaultOracleBudget);

// All translation-distinct 3D polytopes of Minkowski length 1 with at least
// min_points lattice points contained in [0, box]^3, in a deterministic
// order. Enumeration walks the eight mod-2 residue classes (no two lattice
// points of a length-1 polytope may agree mod 2) and keeps the sets whose
// pairwise differences are primitive and pairwise non-parallel, which the
// oracle then confirms.
std::vector<LatticePolytope> length1_census(i64 box, int min_points = 5,
                                            std::uint64_t oracle_budget = kDefaultOracleBudget);

}  // namespace minklen
