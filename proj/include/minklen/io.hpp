#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "minklen/lattice.hpp"
#include "minklen/polytope.hpp"

namespace minklen {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolytopeFile {
  int dim = 0;
  std::vector<Vec> vertices;
};

// Accepts the canonical JSON form {"dim": d, "vertices": [[...], ...]} or
// the plain-text alternative (one vertex per line, whitespace-separated
// integers, dimension inferred). Throws ParseError on malformed input.
PolytopeFile parse_polytope_file(const std::string& text);

PolytopeFile load_polytope_file(const std::string& path);

// Canonical JSON serialization; parse(serialize(P)) rebuilds the same
// polytope.
std::string serialize_polytope(const LatticePolytope& p);

LatticePolytope to_polytope(const PolytopeFile& f);

// Multiplicative congruential generator: state_{n+1} = state_n * M mod 2^64
// with M = 0xf1357aea2e62a9c5 and state_0 = 2*seed + 1 (the state must be
// odd). Bounded draws use the 128-bit multiply-shift reduction. Fixed here
// so seeds reproduce bit-identically across platforms.
struct Mcg64 {
  std::uint64_t state;

  explicit Mcg64(std::uint64_t seed) : state(2 * seed + 1) { next(); }

  std::uint64_t next() {
    state *= 0xf1357aea2e62a9c5ull;
    return state;
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return std::uint64_t((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  i64 range(i64 lo, i64 hi) { return lo + i64(below(std::uint64_t(hi - lo + 1))); }
};

// Hull of 4..10 uniform points in [0, box]^dim.
LatticePolytope random_polytope(Mcg64& rng, int dim, i64 box);

// Random product of elementary row operations (shears, swaps, sign flips)
// plus a small shift; |det| = 1 by construction.
UnimodularMap random_unimodular_map(Mcg64& rng, int dim);

}  // namespace minklen
