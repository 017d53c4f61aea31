#include "minklen/length.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace minklen {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ----- generic helpers (any affine dimension) -----

int cap_by_walking(const std::vector<Vec>& pts, const Vec& v) {
  std::unordered_set<Vec, VecHash> member(pts.begin(), pts.end());
  int best = 0;
  for (const Vec& f : pts) {
    int t = 0;
    while (member.count(f + v * (t + 1))) ++t;
    best = std::max(best, t);
  }
  return best;
}

bool parallel(const Vec& a, const Vec& b) {
  return a.dim == 2 ? det2(a, b) == 0 : cross(a, b).is_zero();
}

// All sign-canonical primitive difference directions of a sorted point set.
std::vector<Vec> difference_dirs(const std::vector<Vec>& pts) {
  std::unordered_set<Vec, VecHash> seen;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      seen.insert(canonical_dir(primitive_part(pts[j] - pts[i])));
  std::vector<Vec> dirs(seen.begin(), seen.end());
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

// ----- the shared branch-and-bound tuple search -----

struct CapInfo {
  int cap = 0;
  int anchor = 0;  // index of the lex-smallest F attaining the cap
};

struct Search {
  const LatticePolytope& poly;
  const std::vector<Vec>& pts;
  const std::vector<Facet>& facets;
  // slack[a][i] = offset_a - <normal_a, pts[i]>, always >= 0.
  std::vector<std::vector<i64>> slack;
  std::unordered_map<Vec, CapInfo, VecHash> cap_cache;

  int best = 0;
  Decomposition witness;
  SearchStats stats;

  explicit Search(const LatticePolytope& p)
      : poly(p), pts(p.lattice_points()), facets(p.facets()) {
    slack.resize(facets.size());
    for (size_t a = 0; a < facets.size(); ++a) {
      slack[a].resize(pts.size());
      for (size_t i = 0; i < pts.size(); ++i)
        slack[a][i] = checked_i64(i128(facets[a].offset) - dot128(facets[a].normal, pts[i]));
    }
    witness.anchor = pts.front();
  }

  const CapInfo& cap(const Vec& dir) {
    auto it = cap_cache.find(dir);
    if (it != cap_cache.end()) return it->second;
    std::vector<std::pair<size_t, i64>> pos;  // facets with <normal, dir> > 0
    for (size_t a = 0; a < facets.size(); ++a) {
      i64 s = dot(facets[a].normal, dir);
      if (s > 0) pos.push_back({a, s});
    }
    if (pos.empty()) throw std::logic_error("unbounded direction in bounded polytope");
    CapInfo info;
    for (size_t i = 0; i < pts.size(); ++i) {
      i64 t = INT64_MAX;
      for (const auto& [a, s] : pos) t = std::min(t, slack[a][i] / s);
      if (t > info.cap) {
        info.cap = int(t);
        info.anchor = int(i);
      }
    }
    return cap_cache.emplace(dir, info).first->second;
  }

  void consider_collinear(const Vec& dir) {
    const CapInfo& c = cap(dir);
    if (c.cap > best) {
      best = c.cap;
      witness.anchor = pts[c.anchor];
      witness.parts = {{c.cap, dir}};
    }
  }

  // One template: candidate directions (already sign-canonical, deduplicated
  // by the caller's visited set). Runs the depth-first tuple search with the
  // global best as the pruning bound.
  void run_template(std::vector<Vec> segs) {
    ++stats.templates_searched;
    std::vector<std::pair<int, Vec>> active;  // (cap, dir), caps >= 1
    for (const Vec& s : segs) {
      const CapInfo& c = cap(s);
      if (c.cap >= 1) active.push_back({c.cap, s});
    }
    if (active.empty()) return;
    std::stable_sort(active.begin(), active.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });

    int k = int(active.size());
    std::vector<int> suffix(k + 1, 0);
    for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + active[i].first;
    if (suffix[0] <= best) return;

    // Per-segment facet support increments.
    std::vector<std::vector<i64>> sup(k, std::vector<i64>(facets.size()));
    for (int i = 0; i < k; ++i)
      for (size_t a = 0; a < facets.size(); ++a)
        sup[i][a] = std::max<i64>(dot(facets[a].normal, active[i].second), 0);

    std::vector<int> anchors(pts.size());
    std::iota(anchors.begin(), anchors.end(), 0);
    std::vector<i64> used(facets.size(), 0);
    std::vector<std::pair<int, Vec>> prefix;
    dfs(active, sup, suffix, 0, 0, anchors, used, prefix);
  }

  void dfs(const std::vector<std::pair<int, Vec>>& active,
           const std::vector<std::vector<i64>>& sup, const std::vector<int>& suffix, int level,
           int sum, const std::vector<int>& anchors, const std::vector<i64>& used,
           std::vector<std::pair<int, Vec>>& prefix) {
    if (level == int(active.size())) return;
    ++stats.tuple_nodes;
    const auto& [cap_i, dir] = active[level];
    for (int n = cap_i; n >= 0; --n) {
      if (sum + n + suffix[level + 1] <= best) break;
      if (n == 0) {
        dfs(active, sup, suffix, level + 1, sum, anchors, used, prefix);
        break;
      }
      std::vector<i64> next_used(used);
      for (size_t a = 0; a < facets.size(); ++a) next_used[a] += i64(n) * sup[level][a];
      std::vector<int> feasible;
      ++stats.anchor_filters;
      for (int idx : anchors) {
        bool ok = true;
        for (size_t a = 0; a < facets.size(); ++a)
          if (next_used[a] > slack[a][idx]) {
            ok = false;
            break;
          }
        if (ok) feasible.push_back(idx);
      }
      if (feasible.empty()) continue;
      prefix.push_back({n, dir});
      if (sum + n > best) {
        best = sum + n;
        witness.anchor = pts[feasible.front()];
        witness.parts.clear();
        for (const auto& [mult, d] : prefix) witness.parts.push_back({mult, d});
      }
      dfs(active, sup, suffix, level + 1, sum + n, feasible, next_used, prefix);
      prefix.pop_back();
    }
  }
};

// Canonical key for a set of raw template generators: sorted, then the
// lex-smaller of the set and its global negation (a global sign flip yields
// the same template up to segment orientation).
template <size_t N>
std::array<Vec, N> generator_key(std::array<Vec, N> gens) {
  std::sort(gens.begin(), gens.end());
  std::array<Vec, N> neg;
  for (size_t i = 0; i < N; ++i) neg[i] = -gens[i];
  std::sort(neg.begin(), neg.end());
  return neg < gens ? neg : gens;
}

template <size_t N>
struct GenKeyHash {
  size_t operator()(const std::array<Vec, N>& k) const {
    size_t h = 0;
    VecHash vh;
    for (const Vec& v : k) h ^= vh(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

std::vector<Vec> canonical_segments(std::initializer_list<Vec> raw) {
  std::vector<Vec> out;
  for (const Vec& v : raw)
    if (!v.is_zero()) out.push_back(canonical_dir(v));
  return out;
}

LengthResult trivial_result(const LatticePolytope& p) {
  LengthResult r;
  r.witness.anchor = p.lattice_points().front();
  return r;
}

// Divides v by 2, or returns nullopt if some coordinate is odd.
std::optional<Vec> half(const Vec& v) {
  Vec r = v;
  for (int i = 0; i < 3; ++i) {
    if (r.c[i] % 2 != 0) return std::nullopt;
    r.c[i] /= 2;
  }
  return r;
}

}  // namespace

int max_cap(const LatticePolytope& p, const Vec& v) {
  if (!is_primitive(v)) throw std::invalid_argument("max_cap needs a primitive direction");
  if (v.dim != p.dim_ambient()) throw std::invalid_argument("ambient dimension mismatch");
  if (p.dim_affine() == p.dim_ambient()) {
    Search s(p);
    return s.cap(canonical_dir(v)).cap;
  }
  return cap_by_walking(p.lattice_points(), v);
}

std::optional<Vec> fit_zonotope(const LatticePolytope& p, const TemplateBasis& basis,
                                const std::vector<int>& tuple) {
  if (tuple.size() != basis.segments.size())
    throw std::invalid_argument("tuple length does not match basis");
  std::vector<std::pair<int, Vec>> parts;
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0) throw std::invalid_argument("negative multiplicity");
    if (tuple[i] > 0) parts.push_back({tuple[i], basis.segments[i]});
  }
  if (p.dim_affine() == p.dim_ambient()) {
    for (const Vec& f : p.lattice_points()) {
      bool ok = true;
      for (const Facet& fc : p.facets())
        if (dot128(fc.normal, f) + zonotope_support(parts, fc.normal) > fc.offset) {
          ok = false;
          break;
        }
      if (ok) return f;
    }
    return std::nullopt;
  }
  // Lower-dimensional fallback: check all zonotope corners by containment.
  for (const Vec& f : p.lattice_points()) {
    bool ok = true;
    for (size_t mask = 0; ok && mask < (size_t(1) << parts.size()); ++mask) {
      Vec corner = f;
      for (size_t i = 0; i < parts.size(); ++i)
        if (mask & (size_t(1) << i)) corner += parts[i].second * parts[i].first;
      ok = p.contains(corner);
    }
    if (ok) return f;
  }
  return std::nullopt;
}

bool verify_decomposition(const LatticePolytope& p, const Decomposition& d) {
  for (const auto& part : d.parts) {
    if (part.multiplicity < 1) return false;
    if (!is_primitive(part.direction)) return false;
  }
  for (size_t i = 0; i < d.parts.size(); ++i)
    for (size_t j = i + 1; j < d.parts.size(); ++j)
      if (parallel(d.parts[i].direction, d.parts[j].direction)) return false;
  size_t k = d.parts.size();
  for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
    Vec corner = d.anchor;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t(1) << i))
        corner += d.parts[i].direction * d.parts[i].multiplicity;
    if (!p.contains(corner)) return false;
  }
  return true;
}

LengthResult length_1d(const LatticePolytope& p) {
  auto start = Clock::now();
  LengthResult r = trivial_result(p);
  const std::vector<Vec>& pts = p.lattice_points();
  if (pts.size() < 2) return r;
  bool full_dim = p.dim_affine() == p.dim_ambient();
  std::optional<Search> search;
  if (full_dim) search.emplace(p);
  for (const Vec& v : difference_dirs(pts)) {
    int m = full_dim ? search->cap(v).cap : cap_by_walking(pts, v);
    if (m > r.length) {
      r.length = m;
      r.witness.parts = {{m, v}};
      for (const Vec& f : pts) {
        if (p.contains(f + v * m)) {
          r.witness.anchor = f;
          break;
        }
      }
    }
  }
  r.stats.elapsed_sec = seconds_since(start);
  return r;
}

LengthResult length_2d(const LatticePolytope& p) {
  if (p.dim_ambient() != 2)
    throw std::invalid_argument("length_2d requires ambient dimension 2 (use length_3d or minkowski_length)");
  auto start = Clock::now();
  if (p.dim_affine() < 2) {
    LengthResult r = length_1d(p);
    r.stats.elapsed_sec = seconds_since(start);
    return r;
  }

  Search s(p);
  for (const Vec& v : difference_dirs(s.pts)) s.consider_collinear(v);

  int n = int(s.pts.size());
  std::unordered_set<std::array<Vec, 2>, GenKeyHash<2>> visited;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = b + 1; c < n; ++c) {
        if (c == a) continue;
        Vec u = s.pts[b] - s.pts[a], v = s.pts[c] - s.pts[a];
        if (std::abs(det2(u, v)) != 1) continue;
        ++s.stats.planar_triples_examined;
        if (!visited.insert(generator_key<2>({u, v})).second) continue;
        s.run_template(canonical_segments({u, v, u + v}));
      }
    }
  }

  LengthResult r{s.best, s.witness, s.stats};
  r.stats.elapsed_sec = seconds_since(start);
  return r;
}

LengthResult length_3d(const LatticePolytope& p) {
  if (p.dim_ambient() != 3 || p.dim_affine() != 3)
    throw std::invalid_argument("length_3d requires a full-dimensional 3D polytope");
  auto start = Clock::now();
  Search s(p);
  int n = int(s.pts.size());

  // (a) collinear family
  for (const Vec& v : difference_dirs(s.pts)) s.consider_collinear(v);

  // (b) planar family: coplanar triples spanning an empty parallelogram,
  // searched with both in-plane template variants.
  std::unordered_set<std::array<Vec, 2>, GenKeyHash<2>> planar_visited;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = b + 1; c < n; ++c) {
        if (c == a) continue;
        Vec u = s.pts[b] - s.pts[a], v = s.pts[c] - s.pts[a];
        if (!empty_parallelogram(u, v)) continue;
        ++s.stats.planar_triples_examined;
        Vec cu = canonical_dir(u), cv = canonical_dir(v);
        if (!planar_visited.insert(generator_key<2>({cu, cv})).second) continue;
        s.run_template(canonical_segments({cu, cv, cu + cv}));
        s.run_template(canonical_segments({cu, cv, cu - cv}));
      }
    }
  }

  // (c) + (d) volume families over quadruples (A; {B, C, D}).
  std::unordered_set<std::array<Vec, 3>, GenKeyHash<3>> vol_visited;
  std::vector<Vec> diff(n);
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < n; ++i) diff[i] = s.pts[i] - s.pts[a];
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = b + 1; c < n; ++c) {
        if (c == a) continue;
        for (int d = c + 1; d < n; ++d) {
          if (d == a) continue;
          ++s.stats.quadruples_examined;
          const Vec &d1 = diff[b], &d2 = diff[c], &d3 = diff[d];
          i64 vol = std::abs(det3(d1, d2, d3));
          if (vol != 1 && vol != 2) continue;
          if (!vol_visited.insert(generator_key<3>({d1, d2, d3})).second) continue;
          if (vol == 1) {
            // {B,C,D} is unordered, so the one +- slot of the family is
            // realized by trying the minus on each of the three pairs.
            Vec sum = d1 + d2 + d3;
            s.run_template(canonical_segments({d1, d2, d3, sum, d1 + d2, d1 + d3, d2 + d3}));
            s.run_template(canonical_segments({d1, d2, d3, sum, d1 - d2, d1 + d3, d2 + d3}));
            s.run_template(canonical_segments({d1, d2, d3, sum, d1 + d2, d1 - d3, d2 + d3}));
            s.run_template(canonical_segments({d1, d2, d3, sum, d1 + d2, d1 + d3, d2 - d3}));
          } else {
            if (!is_primitive(d1) || !is_primitive(d2) || !is_primitive(d3)) continue;
            if (!empty_parallelogram(d1, d2) || !empty_parallelogram(d1, d3) ||
                !empty_parallelogram(d2, d3))
              continue;
            auto e4 = half(d1 + d2 + d3), e5 = half(d1 + d3 - d2), e6 = half(d2 + d3 - d1),
                 e7 = half(d3 - d1 - d2);
            if (!e4 || !e5 || !e6 || !e7) continue;
            if (e4->is_zero() || e5->is_zero() || e6->is_zero() || e7->is_zero()) continue;
            std::vector<Vec> segs = canonical_segments({d1, d2, d3});
            for (const Vec& e : {*e4, *e5, *e6, *e7})
              if (is_primitive(e)) segs.push_back(canonical_dir(e));
            s.run_template(std::move(segs));
          }
        }
      }
    }
  }

  LengthResult r{s.best, s.witness, s.stats};
  r.stats.elapsed_sec = seconds_since(start);
  return r;
}

LengthResult minkowski_length(const LatticePolytope& p) {
  switch (p.dim_affine()) {
    case 0:
      return trivial_result(p);
    case 1:
      return length_1d(p);
    default:
      break;
  }
  if (p.dim_ambient() == 2) return length_2d(p);
  if (p.dim_affine() == 3) return length_3d(p);

  // Planar polytope in 3D: solve in the plane, map the witness back.
  auto start = Clock::now();
  LengthResult flat = length_2d(p.reduced2d());
  UnimodularMap back = p.to_plane().inverse();
  LengthResult r;
  r.length = flat.length;
  r.stats = flat.stats;
  r.witness.anchor = back.apply(Vec(flat.witness.anchor.c[0], flat.witness.anchor.c[1], 0));
  for (const auto& part : flat.witness.parts) {
    Vec d3 = back.apply_linear(Vec(part.direction.c[0], part.direction.c[1], 0));
    r.witness.parts.push_back({part.multiplicity, canonical_dir(d3)});
  }
  r.stats.elapsed_sec = seconds_since(start);
  return r;
}

}  // namespace minklen
