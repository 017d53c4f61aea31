#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "minklen/io.hpp"
#include "minklen/lattice.hpp"

using namespace minklen;

TEST_CASE("primitivity") {
  CHECK(is_primitive(Vec(1, 0, 0)));
  CHECK_FALSE(is_primitive(Vec(2, 4, 6)));
  CHECK(is_primitive(Vec(1, 2, 2)));
  CHECK_FALSE(is_primitive(Vec(0, 0, 0)));
  CHECK(is_primitive(Vec(-3, 5)));
  CHECK_FALSE(is_primitive(Vec(-2, 4)));
}

TEST_CASE("parallelepiped volume") {
  Vec e1(1, 0, 0), e2(0, 1, 0), e3v(0, 0, 1);
  CHECK(parallelepiped_volume(e1, e2, e3v) == 1);
  CHECK(parallelepiped_volume(e1, e2, Vec(1, 1, 2)) == 2);
  CHECK(parallelepiped_volume(e1, e2, Vec(0, 0, 0)) == 0);
  CHECK_THROWS_AS(parallelepiped_volume(Vec(1, 0), Vec(0, 1), e3v), std::invalid_argument);

  CHECK(parallelogram_area(Vec(1, 0), Vec(0, 1)) == 1);
  CHECK(parallelogram_area(Vec(2, 1), Vec(1, 1)) == 1);
}

TEST_CASE("parallelepiped volume is invariant under permutation and negation") {
  Mcg64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Vec v[3];
    for (auto& x : v) x = Vec(rng.range(-4, 4), rng.range(-4, 4), rng.range(-4, 4));
    i64 base = parallelepiped_volume(v[0], v[1], v[2]);
    CHECK(parallelepiped_volume(v[1], v[2], v[0]) == base);
    CHECK(parallelepiped_volume(v[2], v[1], v[0]) == base);
    CHECK(parallelepiped_volume(-v[0], v[1], v[2]) == base);
    CHECK(parallelepiped_volume(v[0], -v[1], -v[2]) == base);
  }
}

TEST_CASE("empty parallelogram criterion") {
  CHECK(empty_parallelogram(Vec(1, 0, 0), Vec(0, 1, 0)));
  CHECK(empty_parallelogram(Vec(1, 0, 0), Vec(0, 1, 2)));
  CHECK_FALSE(empty_parallelogram(Vec(1, 0, 0), Vec(1, 2, 0)));   // contains (1,1,0)
  CHECK_FALSE(empty_parallelogram(Vec(1, 0, 0), Vec(0, 2, 0)));   // edge midpoint
  CHECK_FALSE(empty_parallelogram(Vec(1, 1, 0), Vec(2, 2, 0)));   // parallel
  CHECK(empty_parallelogram(Vec(1, 0), Vec(0, 1)));
  CHECK_FALSE(empty_parallelogram(Vec(2, 1), Vec(0, 2)));
}

TEST_CASE("mod3 classes") {
  CHECK(mod3_class(Vec(1, 0, 0)).rep == Vec(1, 0, 0));
  CHECK(mod3_class(Vec(2, 1, 2)).rep == Vec(1, -1, 1));  // (-1,1,-1) negated
  CHECK(mod3_class(Vec(1, 2, 2)) == mod3_class(Vec(2, 1, 1)));
  CHECK_THROWS_AS(mod3_class(Vec(3, 0, 3)), std::invalid_argument);

  // v and -v always land in the same class.
  for (i64 x = -4; x <= 4; ++x)
    for (i64 y = -4; y <= 4; ++y)
      for (i64 z = -4; z <= 4; ++z) {
        Vec v(x, y, z);
        if (v.is_zero() || !is_primitive(v)) continue;
        CHECK(mod3_class(v) == mod3_class(-v));
      }
}

TEST_CASE("exactly 13 classes in 3D and 4 in 2D by enumeration") {
  std::set<Mod3Class> found3;
  for (i64 x = -4; x <= 4; ++x)
    for (i64 y = -4; y <= 4; ++y)
      for (i64 z = -4; z <= 4; ++z) {
        Vec v(x, y, z);
        if (!v.is_zero() && is_primitive(v)) found3.insert(mod3_class(v));
      }
  CHECK(found3.size() == 13);

  std::set<Mod3Class> found2;
  for (i64 x = -4; x <= 4; ++x)
    for (i64 y = -4; y <= 4; ++y) {
      Vec v(x, y);
      if (!v.is_zero() && is_primitive(v)) found2.insert(mod3_class(v));
    }
  CHECK(found2.size() == 4);

  CHECK(all_mod3_classes(3).size() == 13);
  CHECK(all_mod3_classes(2).size() == 4);
}

TEST_CASE("class combinations") {
  Mod3Class a = mod3_class(Vec(1, 0)), b = mod3_class(Vec(0, 1));
  auto combos = class_combinations(a, b);
  std::set<Mod3Class> got(combos.begin(), combos.end());
  std::set<Mod3Class> expect{mod3_class(Vec(1, 0)), mod3_class(Vec(0, 1)),
                             mod3_class(Vec(1, 1)), mod3_class(Vec(1, -1))};
  CHECK(got == expect);

  Mod3Class a3 = mod3_class(Vec(1, 0, 0)), b3 = mod3_class(Vec(0, 1, 0));
  auto combos3 = class_combinations(a3, b3);
  std::set<Mod3Class> got3(combos3.begin(), combos3.end());
  std::set<Mod3Class> expect3{mod3_class(Vec(1, 0, 0)), mod3_class(Vec(0, 1, 0)),
                              mod3_class(Vec(1, 1, 0)), mod3_class(Vec(1, -1, 0))};
  CHECK(got3 == expect3);

  CHECK_THROWS_AS(class_combinations(a, a), std::invalid_argument);
}

TEST_CASE("independent class triples generate all 13 classes") {
  Mod3Class a = mod3_class(Vec(1, 0, 0)), b = mod3_class(Vec(0, 1, 0)),
            c = mod3_class(Vec(0, 0, 1));
  std::set<Mod3Class> generated{a, b, c};
  for (int sb : {+1, -1}) {
    generated.insert(mod3_combine(a, b, sb));
    generated.insert(mod3_combine(a, c, sb));
    generated.insert(mod3_combine(b, c, sb));
  }
  // a +- b +- c
  for (const Vec& v : {Vec(1, 1, 1), Vec(1, 1, -1), Vec(1, -1, 1), Vec(1, -1, -1)})
    generated.insert(mod3_class(v));
  CHECK(generated.size() == 13);
}

TEST_CASE("complete_to_unimodular") {
  CHECK(complete_to_unimodular(Vec(0, 0, 1)).matrix ==
        std::array<std::array<i64, 3>, 3>{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});

  SUBCASE("last row and determinant for a general primitive vector") {
    for (const Vec& u : {Vec(1, 2, 3), Vec(0, 1, 0), Vec(-2, 3, 5), Vec(6, 10, 15)}) {
      UnimodularMap m = complete_to_unimodular(u);
      CHECK(Vec(m.matrix[2][0], m.matrix[2][1], m.matrix[2][2]) == u);
      CHECK(std::abs(m.det()) == 1);
    }
  }

  SUBCASE("points on <x,u> = c map to third coordinate c") {
    Mcg64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      Vec u(rng.range(-6, 6), rng.range(-6, 6), rng.range(-6, 6));
      if (u.is_zero()) continue;
      u = primitive_part(u);
      UnimodularMap m = complete_to_unimodular(u);
      Vec x(rng.range(-9, 9), rng.range(-9, 9), rng.range(-9, 9));
      CHECK(m.apply(x).c[2] == dot(u, x));
    }
  }

  CHECK_THROWS_AS(complete_to_unimodular(Vec(2, 4, 6)), std::invalid_argument);
}

TEST_CASE("unimodular map inverse round-trips") {
  Mcg64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    UnimodularMap m = random_unimodular_map(rng, 3);
    UnimodularMap inv = m.inverse();
    Vec x(rng.range(-10, 10), rng.range(-10, 10), rng.range(-10, 10));
    CHECK(inv.apply(m.apply(x)) == x);
    CHECK(m.apply(inv.apply(x)) == x);
  }
  for (int trial = 0; trial < 20; ++trial) {
    UnimodularMap m = random_unimodular_map(rng, 2);
    Vec x(rng.range(-10, 10), rng.range(-10, 10));
    Vec y = m.apply(x);
    CHECK(y.dim == 2);
    CHECK(m.inverse().apply(y) == x);
  }
}
