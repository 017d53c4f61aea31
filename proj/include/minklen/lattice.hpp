#pragma once

#include <array>
#include <vector>

#include "minklen/vec.hpp"

namespace minklen {

// |det(v1, v2, v3)|, the lattice volume of the parallelepiped spanned by
// three 3D vectors.
i64 parallelepiped_volume(const Vec& v1, const Vec& v2, const Vec& v3);

// 2D analogue: |det(v1, v2)|.
i64 parallelogram_area(const Vec& v1, const Vec& v2);

// True iff the parallelogram spanned by u, v (in 2D or 3D) contains no
// lattice point besides its four vertices, i.e. {u, v} is a basis of the
// rank-2 lattice it spans. Criterion: the gcd of the 2x2 minors is 1.
bool empty_parallelogram(const Vec& u, const Vec& v);

// Direction of a lattice segment reduced modulo 3, identified up to sign.
// rep has entries in {-1,0,1} and its first nonzero entry is +1, so class
// equality is plain value equality. There are 13 classes in 3D, 4 in 2D.
struct Mod3Class {
  Vec rep;

  bool operator==(const Mod3Class& o) const { return rep == o.rep; }
  bool operator!=(const Mod3Class& o) const { return rep != o.rep; }
  bool operator<(const Mod3Class& o) const { return rep < o.rep; }
  std::string str() const { return rep.str(); }
};

struct Mod3ClassHash {
  size_t operator()(const Mod3Class& c) const { return VecHash{}(c.rep); }
};

// Class of v; throws if v is divisible by 3 (never happens for primitive v).
Mod3Class mod3_class(const Vec& v);

// Class of a + s*b for s = +1 or -1, where a != b as classes.
Mod3Class mod3_combine(const Mod3Class& a, const Mod3Class& b, int s);

// The subgroup-like span {a, b, a+b, a-b} of two distinct classes.
std::array<Mod3Class, 4> class_combinations(const Mod3Class& a, const Mod3Class& b);

// All classes of the given ambient dimension, sorted (13 in 3D, 4 in 2D).
std::vector<Mod3Class> all_mod3_classes(int dim);

// Affine lattice automorphism x -> matrix * x + shift with |det(matrix)| = 1.
// 2D maps are embedded in the top-left block with matrix[2][2] = 1.
struct UnimodularMap {
  std::array<std::array<i64, 3>, 3> matrix{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Vec shift;
  int dim = 3;

  Vec apply(const Vec& x) const;
  Vec apply_linear(const Vec& x) const;
  i64 det() const;
  UnimodularMap inverse() const;
};

// A unimodular map (zero shift) whose matrix has last row u; applying it
// sends any x to a vector whose third coordinate is <u, x>, flattening the
// family of lattice planes orthogonal to u. u must be primitive and 3D.
UnimodularMap complete_to_unimodular(const Vec& u);

}  // namespace minklen
