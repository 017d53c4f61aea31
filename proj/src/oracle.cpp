#include "minklen/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace minklen {

namespace {

struct MemoEntry {
  int length;
  Vec best_dir;  // lex-smallest canonical direction attaining the max
};

struct Searcher {
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::unordered_map<std::vector<Vec>, MemoEntry, VecVectorHash> memo;

  // Candidate directions: primitive parts of pairwise differences of the
  // current set, sign-canonical, deduplicated, lex ascending.
  static std::vector<Vec> candidate_dirs(const std::vector<Vec>& s) {
    std::unordered_set<Vec, VecHash> seen;
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j)
        seen.insert(canonical_dir(primitive_part(s[j] - s[i])));
    std::vector<Vec> dirs(seen.begin(), seen.end());
    std::sort(dirs.begin(), dirs.end());
    return dirs;
  }

  // s: lex sorted lattice points of a convex region.
  const MemoEntry& run(const std::vector<Vec>& s) {
    std::vector<Vec> key = canonical_translate(s);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (++nodes > budget) throw OracleBudgetExceeded(nodes);

    MemoEntry entry{0, Vec::zero(s.empty() ? 3 : s[0].dim)};
    if (s.size() >= 2) {
      // For every candidate v both q and q + v lie in the set for some pair,
      // so each erosion is nonempty and strictly smaller.
      for (const Vec& v : candidate_dirs(s)) {
        int len = 1 + run(erode(s, v)).length;
        if (len > entry.length) {
          entry.length = len;
          entry.best_dir = v;
        }
      }
    }
    return memo.emplace(std::move(key), entry).first->second;
  }
};

}  // namespace

OracleResult oracle_length(const std::vector<Vec>& s, std::uint64_t node_budget) {
  Searcher searcher{node_budget, 0, {}};
  std::vector<Vec> cur = sorted_unique(s);
  OracleResult result;
  result.length = searcher.run(cur).length;
  // Reconstruct the witness by walking best directions down the memo.
  while (true) {
    MemoEntry e = searcher.run(cur);
    if (e.length == 0) break;
    result.witness.push_back(e.best_dir);
    cur = erode(cur, e.best_dir);
  }
  result.nodes = searcher.nodes;
  return result;
}

OracleResult oracle_length_of_sum(const std::vector<LatticePolytope>& parts,
                                  std::uint64_t node_budget) {
  return oracle_length(minkowski_sum(parts).lattice_points(), node_budget);
}

}  // namespace minklen
