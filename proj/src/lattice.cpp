#include "minklen/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace minklen {

i64 parallelepiped_volume(const Vec& v1, const Vec& v2, const Vec& v3) {
  if (v1.dim != 3 || v2.dim != 3 || v3.dim != 3)
    throw std::invalid_argument("parallelepiped_volume needs 3D vectors");
  return std::abs(det3(v1, v2, v3));
}

i64 parallelogram_area(const Vec& v1, const Vec& v2) {
  if (v1.dim != 2 || v2.dim != 2)
    throw std::invalid_argument("parallelogram_area needs 2D vectors");
  return std::abs(det2(v1, v2));
}

bool empty_parallelogram(const Vec& u, const Vec& v) {
  if (u.dim != v.dim) throw std::invalid_argument("dimension mismatch");
  if (u.dim == 2) return std::abs(det2(u, v)) == 1;
  Vec m = cross(u, v);
  return content(m) == 1;
}

namespace {
i64 mod3_centered(i64 x) {
  i64 r = x % 3;
  if (r > 1) r -= 3;
  if (r < -1) r += 3;
  return r;
}
}  // namespace

Mod3Class mod3_class(const Vec& v) {
  Vec r = Vec::zero(v.dim);
  for (int i = 0; i < 3; ++i) r.c[i] = mod3_centered(v.c[i]);
  if (r.is_zero()) throw std::invalid_argument("vector is divisible by 3: " + v.str());
  return Mod3Class{canonical_dir(r)};
}

Mod3Class mod3_combine(const Mod3Class& a, const Mod3Class& b, int s) {
  Vec r = Vec::zero(a.rep.dim);
  for (int i = 0; i < 3; ++i) r.c[i] = mod3_centered(a.rep.c[i] + s * b.rep.c[i]);
  if (r.is_zero()) throw std::invalid_argument("combining a class with itself");
  return Mod3Class{canonical_dir(r)};
}

std::array<Mod3Class, 4> class_combinations(const Mod3Class& a, const Mod3Class& b) {
  if (a == b) throw std::invalid_argument("class_combinations requires distinct classes");
  return {a, b, mod3_combine(a, b, +1), mod3_combine(a, b, -1)};
}

std::vector<Mod3Class> all_mod3_classes(int dim) {
  std::set<Mod3Class> out;
  for (i64 x = -1; x <= 1; ++x)
    for (i64 y = -1; y <= 1; ++y) {
      if (dim == 2) {
        Vec v(x, y);
        if (!v.is_zero()) out.insert(Mod3Class{canonical_dir(v)});
        continue;
      }
      for (i64 z = -1; z <= 1; ++z) {
        Vec v(x, y, z);
        if (!v.is_zero()) out.insert(Mod3Class{canonical_dir(v)});
      }
    }
  return {out.begin(), out.end()};
}

Vec UnimodularMap::apply_linear(const Vec& x) const {
  Vec r = Vec::zero(dim);
  for (int i = 0; i < 3; ++i)
    r.c[i] = matrix[i][0] * x.c[0] + matrix[i][1] * x.c[1] + matrix[i][2] * x.c[2];
  return r;
}

Vec UnimodularMap::apply(const Vec& x) const { return apply_linear(x) + shift; }

i64 UnimodularMap::det() const {
  Vec r0(matrix[0][0], matrix[0][1], matrix[0][2]);
  Vec r1(matrix[1][0], matrix[1][1], matrix[1][2]);
  Vec r2(matrix[2][0], matrix[2][1], matrix[2][2]);
  return det3(r0, r1, r2);
}

UnimodularMap UnimodularMap::inverse() const {
  i64 d = det();
  if (d != 1 && d != -1) throw std::logic_error("matrix is not unimodular");
  UnimodularMap inv;
  inv.dim = dim;
  const auto& m = matrix;
  // adjugate / det, exact since det = +-1
  inv.matrix[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
  inv.matrix[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
  inv.matrix[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
  inv.matrix[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
  inv.matrix[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
  inv.matrix[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
  inv.matrix[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
  inv.matrix[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
  inv.matrix[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
  inv.shift = -inv.apply_linear(shift);
  inv.shift.dim = dim;
  return inv;
}

namespace {
// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g, g >= 0.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = (a >= 0) ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  i64 x1, y1;
  i64 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Right-multiply A by the elementary matrix acting on columns i, j that
// maps row vector w so that w[j] <- gcd(w[i], w[j]) and w[i] <- 0.
void column_gcd_step(std::array<std::array<i64, 3>, 3>& A, Vec& w, int i, int j) {
  if (w.c[i] == 0) return;
  i64 x, y;
  i64 g = ext_gcd(w.c[i], w.c[j], x, y);
  i64 ci = -w.c[j] / g, cj = w.c[i] / g;  // det of [[ci, x],[cj, y]] column pair = 1
  for (int r = 0; r < 3; ++r) {
    i64 ai = A[r][i], aj = A[r][j];
    A[r][i] = ai * ci + aj * cj;
    A[r][j] = ai * x + aj * y;
  }
  i64 wi = w.c[i], wj = w.c[j];
  w.c[i] = wi * ci + wj * cj;  // = 0
  w.c[j] = wi * x + wj * y;    // = g
}
}  // namespace

UnimodularMap complete_to_unimodular(const Vec& u) {
  if (u.dim != 3) throw std::invalid_argument("complete_to_unimodular needs a 3D vector");
  if (!is_primitive(u)) throw std::invalid_argument("vector is not primitive: " + u.str());

  // Reduce the row vector u to e3 by unimodular column operations collected
  // in A, so that u * A = e3; then M = A^{-1} has last row u.
  std::array<std::array<i64, 3>, 3> A{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Vec w = u;
  column_gcd_step(A, w, 0, 2);
  column_gcd_step(A, w, 1, 2);
  if (w.c[2] == -1) {
    for (int r = 0; r < 3; ++r) A[r][2] = -A[r][2];
    w.c[2] = 1;
  }
  if (w != Vec(0, 0, 1)) throw std::logic_error("gcd reduction failed");

  UnimodularMap col;
  col.matrix = A;
  col.dim = 3;
  UnimodularMap m = col.inverse();
  m.shift = Vec::zero(3);
  if (Vec(m.matrix[2][0], m.matrix[2][1], m.matrix[2][2]) != u)
    throw std::logic_error("completion lost the input row");
  return m;
}

}  // namespace minklen
