#include "minklen/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace minklen {

std::string to_string(FivePointType t) {
  switch (t) {
    case FivePointType::FourTwoTwoTwo: return "4+2+2+2";
    case FivePointType::ThreeThreeTwoTwo: return "3+3+2+2";
    case FivePointType::ThreeSeven: return "3+(7)";
    case FivePointType::TwoTwoSix: return "2+2+(6)";
    case FivePointType::TenDistinct: return "(10)";
    case FivePointType::Unclassifiable: return "unclassifiable";
  }
  return "?";
}

std::string to_string(Length1PolygonKind k) {
  switch (k) {
    case Length1PolygonKind::PrimitiveSegment: return "primitive segment";
    case Length1PolygonKind::UnitSimplex: return "unit simplex";
    case Length1PolygonKind::T0: return "T0";
  }
  return "?";
}

namespace {

using ClassSet = std::set<Mod3Class>;

bool contains_all(const ClassSet& s, std::initializer_list<Mod3Class> needed) {
  for (const Mod3Class& c : needed)
    if (!s.count(c)) return false;
  return true;
}

// Class of A + sb*B + sc*C, combined on raw representatives (canonicalizing
// an intermediate sum first would flip signs and change the result).
Mod3Class combo3(const Mod3Class& a, int sb, const Mod3Class& b, int sc, const Mod3Class& c) {
  Vec r = Vec::zero(a.rep.dim);
  for (int i = 0; i < 3; ++i) {
    i64 x = (a.rep.c[i] + sb * b.rep.c[i] + sc * c.rep.c[i]) % 3;
    if (x > 1) x -= 3;
    if (x < -1) x += 3;
    r.c[i] = x;
  }
  if (r.is_zero()) throw std::logic_error("dependent classes in three-term combo");
  return Mod3Class{canonical_dir(r)};
}

// The four classes of A +- B +- C.
std::array<Mod3Class, 4> three_term_combos(const Mod3Class& a, const Mod3Class& b,
                                           const Mod3Class& c) {
  return {combo3(a, +1, b, +1, c), combo3(a, +1, b, -1, c), combo3(a, -1, b, +1, c),
          combo3(a, -1, b, -1, c)};
}

bool independent_triple(const Mod3Class& a, const Mod3Class& b, const Mod3Class& c) {
  if (a == b || a == c || b == c) return false;
  auto span = class_combinations(a, b);
  return std::find(span.begin(), span.end(), c) == span.end();
}

FivePointType match_type(const SegmentClassProfile& profile) {
  std::vector<std::pair<int, Mod3Class>> by_count;
  for (const auto& [cls, count] : profile.counts) by_count.push_back({count, cls});
  std::stable_sort(by_count.begin(), by_count.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<int> pattern;
  for (const auto& [count, cls] : by_count) pattern.push_back(count);

  auto classes_with = [&](int count) {
    ClassSet s;
    for (const auto& [c, cls] : by_count)
      if (c == count) s.insert(cls);
    return s;
  };

  if (pattern == std::vector<int>{4, 2, 2, 2}) {
    Mod3Class a = by_count[0].second;
    ClassSet twos = classes_with(2);
    for (const Mod3Class& b : twos) {
      ClassSet rest = twos;
      rest.erase(b);
      if (rest == ClassSet{mod3_combine(a, b, +1), mod3_combine(a, b, -1)})
        return FivePointType::FourTwoTwoTwo;
    }
    return FivePointType::Unclassifiable;
  }

  if (pattern == std::vector<int>{3, 3, 2, 2}) {
    Mod3Class a = by_count[0].second, b = by_count[1].second;
    ClassSet twos = classes_with(2);
    if (twos == ClassSet{mod3_combine(a, b, +1), mod3_combine(a, b, -1)})
      return FivePointType::ThreeThreeTwoTwo;
    return FivePointType::Unclassifiable;
  }

  if (pattern == std::vector<int>{3, 1, 1, 1, 1, 1, 1, 1}) {
    Mod3Class a = by_count[0].second;
    ClassSet singles = classes_with(1);
    for (const Mod3Class& b : singles) {
      for (const Mod3Class& c : singles) {
        if (!independent_triple(a, b, c)) continue;
        ClassSet expected{b, c, mod3_combine(a, b, +1), mod3_combine(a, b, -1),
                          mod3_combine(a, c, +1), mod3_combine(a, c, -1)};
        if (expected.size() != 6) continue;
        if (!std::includes(singles.begin(), singles.end(), expected.begin(), expected.end()))
          continue;
        ClassSet rest;
        std::set_difference(singles.begin(), singles.end(), expected.begin(), expected.end(),
                            std::inserter(rest, rest.begin()));
        if (rest.size() != 1) continue;
        auto combos = three_term_combos(a, b, c);
        if (std::find(combos.begin(), combos.end(), *rest.begin()) != combos.end())
          return FivePointType::ThreeSeven;
      }
    }
    return FivePointType::Unclassifiable;
  }

  if (pattern == std::vector<int>{2, 2, 1, 1, 1, 1, 1, 1}) {
    Mod3Class a = by_count[0].second, b = by_count[1].second;
    ClassSet singles = classes_with(1);
    if (!contains_all(singles, {mod3_combine(a, b, +1), mod3_combine(a, b, -1)}))
      return FivePointType::Unclassifiable;
    ClassSet rest = singles;
    rest.erase(mod3_combine(a, b, +1));
    rest.erase(mod3_combine(a, b, -1));
    for (const Mod3Class& c : rest) {
      if (!independent_triple(a, b, c)) continue;
      for (int sa : {+1, -1}) {
        for (int sb : {+1, -1}) {
          Mod3Class ac = mod3_combine(c, a, sa);
          Mod3Class bc = mod3_combine(c, b, sb);
          Mod3Class abc = combo3(c, sa, a, sb, b);
          if (rest == ClassSet{c, ac, bc, abc}) return FivePointType::TwoTwoSix;
        }
      }
    }
    return FivePointType::Unclassifiable;
  }

  if (pattern == std::vector<int>(10, 1)) return FivePointType::TenDistinct;
  return FivePointType::Unclassifiable;
}

}  // namespace

std::pair<FivePointType, SegmentClassProfile> five_point_type(const std::vector<Vec>& pts) {
  if (pts.size() != 5) throw std::invalid_argument("five_point_type needs exactly 5 points");
  std::vector<Vec> unique = sorted_unique(pts);
  if (unique.size() != 5) throw std::invalid_argument("five_point_type needs distinct points");

  SegmentClassProfile profile;
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = i + 1; j < 5; ++j) {
      Vec d = unique[j] - unique[i];
      bool zero_mod3 = d.c[0] % 3 == 0 && d.c[1] % 3 == 0 && d.c[2] % 3 == 0;
      if (zero_mod3) {
        ++profile.zero_class_segments;
      } else {
        ++profile.counts[mod3_class(d)];
      }
    }
  if (profile.zero_class_segments > 0) return {FivePointType::Unclassifiable, profile};
  return {match_type(profile), profile};
}

std::vector<FivePointType> five_subset_types(const std::vector<Vec>& pts) {
  size_t n = pts.size();
  if (n < 5) throw std::invalid_argument("need at least 5 points");
  std::vector<FivePointType> out;
  std::vector<size_t> idx(5);
  // C(n,5) subsets in lex index order.
  for (idx[0] = 0; idx[0] < n - 4; ++idx[0])
    for (idx[1] = idx[0] + 1; idx[1] < n - 3; ++idx[1])
      for (idx[2] = idx[1] + 1; idx[2] < n - 2; ++idx[2])
        for (idx[3] = idx[2] + 1; idx[3] < n - 1; ++idx[3])
          for (idx[4] = idx[3] + 1; idx[4] < n; ++idx[4]) {
            std::vector<Vec> subset;
            for (size_t i : idx) subset.push_back(pts[i]);
            out.push_back(five_point_type(subset).first);
          }
  return out;
}

namespace {

i64 polygon_twice_area(const LatticePolytope& p) {
  std::vector<Vec> vs = p.vertices();
  const Vec origin = vs.front();
  std::sort(vs.begin() + 1, vs.end(), [&](const Vec& x, const Vec& y) {
    return det2(x - origin, y - origin) > 0;
  });
  i64 twice = 0;
  for (size_t i = 1; i + 1 < vs.size(); ++i)
    twice += det2(vs[i] - origin, vs[i + 1] - origin);
  return std::abs(twice);
}

}  // namespace

Length1PolygonKind classify_length1_polygon(const LatticePolytope& p) {
  if (p.dim_ambient() != 2) throw std::invalid_argument("classify_length1_polygon needs a 2D polytope");
  LengthResult len = minkowski_length(p);
  if (len.length != 1)
    throw std::invalid_argument("polygon has Minkowski length " + std::to_string(len.length) +
                                ", expected 1");
  size_t n = p.lattice_points().size();
  if (n == 2) return Length1PolygonKind::PrimitiveSegment;
  if (n == 3 && p.dim_affine() == 2 && polygon_twice_area(p) == 1)
    return Length1PolygonKind::UnitSimplex;
  if (n == 4 && p.dim_affine() == 2 && polygon_twice_area(p) == 3 &&
      p.interior_points().size() == 1)
    return Length1PolygonKind::T0;
  throw std::logic_error("length-1 polygon outside the known classification");
}

InteriorLedger interior_ledger(const std::vector<LatticePolytope>& parts,
                               const LatticePolytope& container) {
  if (parts.empty()) throw std::invalid_argument("interior_ledger: no parts");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].dim_ambient() != container.dim_ambient())
      throw std::invalid_argument("interior_ledger: ambient dimension mismatch");
    if (minkowski_length(parts[i]).length != 1)
      throw std::invalid_argument("interior_ledger: part " + std::to_string(i) +
                                  " does not have length 1");
  }

  // The sum must fit in the container after some lattice translation.
  LatticePolytope sum = minkowski_sum(parts);
  Vec slo = sum.vertices().front(), shi = slo, clo = container.vertices().front(), chi = clo;
  for (const Vec& v : sum.vertices())
    for (int i = 0; i < 3; ++i) {
      slo.c[i] = std::min(slo.c[i], v.c[i]);
      shi.c[i] = std::max(shi.c[i], v.c[i]);
    }
  for (const Vec& v : container.vertices())
    for (int i = 0; i < 3; ++i) {
      clo.c[i] = std::min(clo.c[i], v.c[i]);
      chi.c[i] = std::max(chi.c[i], v.c[i]);
    }
  bool fits = false;
  Vec t = Vec::zero(container.dim_ambient());
  for (t.c[0] = clo.c[0] - slo.c[0]; !fits && t.c[0] <= chi.c[0] - shi.c[0]; ++t.c[0])
    for (t.c[1] = clo.c[1] - slo.c[1]; !fits && t.c[1] <= chi.c[1] - shi.c[1]; ++t.c[1])
      for (t.c[2] = clo.c[2] - slo.c[2]; !fits && t.c[2] <= chi.c[2] - shi.c[2]; ++t.c[2]) {
        bool ok = true;
        for (const Vec& v : sum.vertices())
          if (!container.contains(v + t)) {
            ok = false;
            break;
          }
        fits = ok;
      }
  if (!fits)
    throw std::invalid_argument("interior_ledger: sum of parts does not fit in the container");

  InteriorLedger ledger;
  for (size_t i = 0; i < parts.size(); ++i) {
    int count = int(parts[i].interior_points().size());
    ledger.per_part.push_back({i, count});
    ledger.total += count;
    if (count > 0) ++ledger.parts_with_interior;
  }
  return ledger;
}

namespace {

bool all_subsets_type10(const LatticePolytope& p) {
  for (FivePointType t : five_subset_types(p.lattice_points()))
    if (t != FivePointType::TenDistinct) return false;
  return true;
}

void check_sum_preconditions(const LatticePolytope& p, const char* name) {
  if (p.dim_ambient() != 3) throw std::invalid_argument(std::string(name) + ": must be 3D");
  if (p.lattice_points().size() < 5)
    throw std::invalid_argument(std::string(name) + ": needs at least 5 lattice points");
  if (minkowski_length(p).length != 1)
    throw std::invalid_argument(std::string(name) + ": must have Minkowski length 1");
}

}  // namespace

PairCheck check_pair_theorem(const LatticePolytope& p, const LatticePolytope& q,
                             std::uint64_t oracle_budget) {
  check_sum_preconditions(p, "P");
  check_sum_preconditions(q, "Q");
  PairCheck r;
  r.length_p = 1;
  r.length_q = 1;
  r.length_sum = oracle_length_of_sum({p, q}, oracle_budget).length;
  r.all_subsets_type10_p = all_subsets_type10(p);
  r.all_subsets_type10_q = all_subsets_type10(q);
  r.same_up_to_translation = p.equal_up_to_translation(q);
  r.holds = r.length_sum >= 3 ||
            (r.all_subsets_type10_p && r.all_subsets_type10_q && r.same_up_to_translation);
  return r;
}

TripleCheck check_triple_theorem(const LatticePolytope& p, const LatticePolytope& q,
                                 const LatticePolytope& r, std::uint64_t oracle_budget) {
  check_sum_preconditions(p, "P");
  check_sum_preconditions(q, "Q");
  check_sum_preconditions(r, "R");
  TripleCheck t;
  t.length_p = t.length_q = t.length_r = 1;
  t.length_sum = oracle_length_of_sum({p, q, r}, oracle_budget).length;
  t.holds = t.length_sum >= 4;
  return t;
}

namespace {

struct CensusBuilder {
  i64 box;
  int min_points;
  std::uint64_t oracle_budget;
  std::vector<std::vector<Vec>> class_members;  // points per mod-2 residue class
  std::vector<Vec> chosen;
  std::unordered_set<Vec, VecHash> used_dirs;
  std::set<std::vector<Vec>> results;  // canonical lattice point sets

  void build() {
    class_members.assign(8, {});
    for (i64 x = 0; x <= box; ++x)
      for (i64 y = 0; y <= box; ++y)
        for (i64 z = 0; z <= box; ++z)
          class_members[(x % 2) * 4 + (y % 2) * 2 + (z % 2)].push_back(Vec(x, y, z));
    descend(0);
  }

  void descend(int cls) {
    if (int(chosen.size()) + (8 - cls) < min_points) return;
    if (cls == 8) {
      finish();
      return;
    }
    descend(cls + 1);  // skip this residue class
    for (const Vec& p : class_members[cls]) {
      std::vector<Vec> added;
      bool ok = true;
      for (const Vec& q : chosen) {
        Vec d = p - q;
        if (!is_primitive(d)) {
          ok = false;
          break;
        }
        Vec cd = canonical_dir(d);
        if (used_dirs.count(cd)) {
          ok = false;
          break;
        }
        used_dirs.insert(cd);
        added.push_back(cd);
      }
      if (ok) {
        chosen.push_back(p);
        descend(cls + 1);
        chosen.pop_back();
      }
      for (const Vec& cd : added) used_dirs.erase(cd);
    }
  }

  void finish() {
    if (int(chosen.size()) < min_points) return;
    LatticePolytope hull = LatticePolytope::hull(chosen);
    // Only keep hulls whose lattice points are exactly the chosen set, so
    // each polytope is generated once (by its full point set).
    if (hull.lattice_points().size() != chosen.size()) return;
    if (oracle_length(hull.lattice_points(), oracle_budget).length != 1) return;
    results.insert(canonical_translate(hull.lattice_points()));
  }
};

}  // namespace

std::vector<LatticePolytope> length1_census(i64 box, int min_points,
                                            std::uint64_t oracle_budget) {
  if (box < 1) throw std::invalid_argument("census box must be at least 1");
  CensusBuilder builder{box, min_points, oracle_budget, {}, {}, {}, {}};
  builder.build();
  std::vector<LatticePolytope> census;
  census.reserve(builder.results.size());
  for (const std::vector<Vec>& pts : builder.results)
    census.push_back(LatticePolytope::hull(pts));
  return census;
}

}  // namespace minklen
