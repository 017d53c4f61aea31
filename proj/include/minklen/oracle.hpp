#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "minklen/polytope.hpp"

namespace minklen {

inline constexpr std::uint64_t kDefaultOracleBudget = 10000000;

struct OracleResult {
  int length = 0;
  // Primitive directions, repetition allowed; size == length. Some lattice
  // translate of the zonotope sum([0, v_i]) fits in the queried polytope.
  std::vector<Vec> witness;
  std::uint64_t nodes = 0;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  explicit OracleBudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("oracle node budget exceeded"), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

// Brute-force Minkowski length of the convex lattice set S by recursive
// erosion over primitive difference directions, memoized on the translation
// canonical form. Ground truth for differential tests; exponential worst
// case, so it throws OracleBudgetExceeded instead of running away.
OracleResult oracle_length(const std::vector<Vec>& s,
                           std::uint64_t node_budget = kDefaultOracleBudget);

OracleResult oracle_length_of_sum(const std::vector<LatticePolytope>& parts,
                                  std::uint64_t node_budget = kDefaultOracleBudget);

}  // namespace minklen
