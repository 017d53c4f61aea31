#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "minklen/classify.hpp"
#include "minklen/io.hpp"

using namespace minklen;

namespace {

LatticePolytope tetra() {
  return LatticePolytope::hull({Vec(-1, -1, -1), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)});
}

LatticePolytope T0() { return LatticePolytope::hull({Vec(1, 0), Vec(0, 1), Vec(2, 2)}); }

}  // namespace

TEST_CASE("five_point_type basics") {
  std::vector<Vec> ten{Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1), Vec(-1, -1, -1), Vec(0, 0, 0)};
  auto [type, profile] = five_point_type(ten);
  CHECK(type == FivePointType::TenDistinct);
  CHECK(profile.counts.size() == 10);

  CHECK_THROWS_AS(five_point_type({Vec(0, 0, 0), Vec(1, 0, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(five_point_type({Vec(0, 0, 0), Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0),
                                   Vec(0, 0, 1)}),
                  std::invalid_argument);
}

TEST_CASE("parallel translated segments with mod-3-zero separation are unclassifiable") {
  // [0,e1] and its translate by (0,3,0): the difference (0,3,0) of their
  // endpoints reduces to zero mod 3, so the set fits in no length-1 polytope.
  std::vector<Vec> pts{Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 3, 0), Vec(1, 3, 0), Vec(0, 0, 1)};
  auto [type, profile] = five_point_type(pts);
  CHECK(type == FivePointType::Unclassifiable);
  CHECK(profile.zero_class_segments == 2);
}

TEST_CASE("five_point_type structural patterns from hand-built sets") {
  // Four segments of class (1,0,0): three collinear points plus the square
  // diagonal structure; classes 4a, 2b, 2(a+b), 2(a-b).
  std::vector<Vec> t4222{Vec(0, 0, 0), Vec(1, 0, 0), Vec(2, 0, 0), Vec(0, 1, 0), Vec(1, 1, 0)};
  CHECK(five_point_type(t4222).first == FivePointType::FourTwoTwoTwo);

  // Two mod-3 triangles sharing structure: 3a, 3b, 2(a+b), 2(a-b).
  std::vector<Vec> t3322{Vec(0, 0, 0), Vec(1, 0, 0), Vec(2, 0, 0), Vec(0, 1, 0), Vec(0, 2, 0)};
  CHECK(five_point_type(t3322).first == FivePointType::ThreeThreeTwoTwo);

  // T0 lifted to a plane plus an apex: 3a + seven singletons.
  std::vector<Vec> t37{Vec(1, 0, 0), Vec(0, 1, 0), Vec(2, 2, 0), Vec(1, 1, 0), Vec(0, 0, 1)};
  CHECK(five_point_type(t37).first == FivePointType::ThreeSeven);

  // Unit square plus an apex: 2a, 2b and six singletons.
  std::vector<Vec> t226{Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(1, 1, 0), Vec(0, 0, 1)};
  CHECK(five_point_type(t226).first == FivePointType::TwoTwoSix);
}

TEST_CASE("classify_length1_polygon") {
  CHECK(classify_length1_polygon(LatticePolytope::hull({Vec(0, 0), Vec(1, 0)})) ==
        Length1PolygonKind::PrimitiveSegment);
  CHECK(classify_length1_polygon(LatticePolytope::hull({Vec(0, 0), Vec(1, 0), Vec(0, 1)})) ==
        Length1PolygonKind::UnitSimplex);
  CHECK(classify_length1_polygon(T0()) == Length1PolygonKind::T0);

  // unimodular images keep their kind
  Mcg64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    UnimodularMap m = random_unimodular_map(rng, 2);
    CHECK(classify_length1_polygon(T0().transformed(m)) == Length1PolygonKind::T0);
  }

  CHECK_THROWS_AS(classify_length1_polygon(LatticePolytope::hull({Vec(0, 0), Vec(2, 0)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      classify_length1_polygon(LatticePolytope::hull({Vec(0, 0), Vec(2, 0), Vec(0, 2)})),
      std::invalid_argument);
}

TEST_CASE("interior ledger") {
  LatticePolytope sharp =
      LatticePolytope::hull({Vec(0, 0, 0), Vec(1, 3, 0), Vec(0, 2, 3), Vec(4, 1, 3)});
  InteriorLedger ledger = interior_ledger({sharp}, sharp);
  CHECK(ledger.total == 4);
  CHECK(ledger.parts_with_interior == 1);

  LatticePolytope seg_x = LatticePolytope::hull({Vec(0, 0, 0), Vec(1, 0, 0)});
  LatticePolytope seg_y = LatticePolytope::hull({Vec(0, 0, 0), Vec(0, 1, 0)});
  LatticePolytope seg_z = LatticePolytope::hull({Vec(0, 0, 0), Vec(0, 0, 1)});
  LatticePolytope cube = minkowski_sum({seg_x, seg_y, seg_z});
  InteriorLedger segs = interior_ledger({seg_x, seg_y, seg_z}, cube);
  CHECK(segs.total == 0);
  CHECK(segs.parts_with_interior == 0);

  InteriorLedger one = interior_ledger({tetra()}, tetra());
  CHECK(one.total == 1);

  // the parts must actually fit in the container
  CHECK_THROWS_AS(interior_ledger({sharp, sharp}, sharp), std::invalid_argument);
  // and every part must have length 1
  LatticePolytope long_seg = LatticePolytope::hull({Vec(0, 0, 0), Vec(2, 0, 0)});
  CHECK_THROWS_AS(interior_ledger({long_seg}, cube), std::invalid_argument);
}

TEST_CASE("pair theorem checker") {
  PairCheck same = check_pair_theorem(tetra(), tetra());
  CHECK(same.length_sum == 2);
  CHECK(same.all_subsets_type10_p);
  CHECK(same.same_up_to_translation);
  CHECK(same.holds);

  PairCheck shifted = check_pair_theorem(tetra(), tetra().translated(Vec(5, 0, 0)));
  CHECK(shifted.same_up_to_translation);
  CHECK(shifted.holds);

  CHECK_THROWS_AS(check_pair_theorem(tetra(), LatticePolytope::hull(
                                                  {Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0),
                                                   Vec(0, 0, 1)})),
                  std::invalid_argument);
}

TEST_CASE("triple theorem checker on the reflexive tetrahedron") {
  TripleCheck t = check_triple_theorem(tetra(), tetra(), tetra());
  CHECK(t.length_sum >= 4);
  CHECK(t.holds);
}

TEST_CASE("census in a small box") {
  std::vector<LatticePolytope> census = length1_census(2, 5);
  CHECK(census.size() > 0);
  std::map<FivePointType, int> seen;
  for (const LatticePolytope& p : census) {
    CHECK(p.lattice_points().size() <= 8);
    CHECK(p.lattice_points().size() >= 5);
    CHECK(p.dim_affine() == 3);
    for (FivePointType t : five_subset_types(p.lattice_points())) {
      CHECK(t != FivePointType::Unclassifiable);
      ++seen[t];
    }
  }
  // the box-2 census already realizes type (10)
  CHECK(seen[FivePointType::TenDistinct] > 0);

  // deterministic construction
  std::vector<LatticePolytope> again = length1_census(2, 5);
  REQUIRE(again.size() == census.size());
  for (size_t i = 0; i < census.size(); ++i)
    CHECK(again[i].lattice_points() == census[i].lattice_points());
}

TEST_CASE("census members have no repeated difference directions") {
  // Within a length-1 polytope, two same-class segments are translates, so
  // every primitive direction occurs for at most one parallel family; the
  // census construction is exactly the sets with all differences primitive
  // and pairwise non-parallel. Spot-check the first few members.
  std::vector<LatticePolytope> census = length1_census(2, 5);
  size_t checked = 0;
  for (const LatticePolytope& p : census) {
    if (++checked > 25) break;
    const std::vector<Vec>& pts = p.lattice_points();
    std::set<Vec> dirs;
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        Vec d = pts[j] - pts[i];
        CHECK(is_primitive(d));
        CHECK(dirs.insert(canonical_dir(d)).second);
      }
  }
}
