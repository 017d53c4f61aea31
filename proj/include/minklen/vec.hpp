#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace minklen {

using i64 = std::int64_t;
using i128 = __int128;

// Exact lattice vector in ambient dimension 2 or 3. 2D vectors keep c[2] == 0
// so the same storage and operators serve both dimensions.
struct Vec {
  std::array<i64, 3> c{0, 0, 0};
  int dim = 3;

  Vec() = default;
  Vec(i64 x, i64 y) : c{x, y, 0}, dim(2) {}
  Vec(i64 x, i64 y, i64 z) : c{x, y, z}, dim(3) {}

  static Vec zero(int d) {
    Vec v;
    v.dim = d;
    return v;
  }

  i64 operator[](int i) const { return c[i]; }
  i64& operator[](int i) { return c[i]; }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

  Vec operator+(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < 3; ++i) r.c[i] += o.c[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < 3; ++i) r.c[i] -= o.c[i];
    return r;
  }
  Vec operator-() const {
    Vec r = *this;
    for (int i = 0; i < 3; ++i) r.c[i] = -r.c[i];
    return r;
  }
  Vec operator*(i64 s) const {
    Vec r = *this;
    for (int i = 0; i < 3; ++i) r.c[i] *= s;
    return r;
  }
  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }

  bool operator==(const Vec& o) const { return dim == o.dim && c == o.c; }
  bool operator!=(const Vec& o) const { return !(*this == o); }
  // Lexicographic; vectors of different ambient dimension never mix in one container.
  bool operator<(const Vec& o) const {
    if (dim != o.dim) return dim < o.dim;
    return c < o.c;
  }

  std::string str() const {
    std::string s = "(" + std::to_string(c[0]) + "," + std::to_string(c[1]);
    if (dim == 3) s += "," + std::to_string(c[2]);
    return s + ")";
  }
};

inline i64 dot(const Vec& a, const Vec& b) {
  return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}

inline i128 dot128(const Vec& a, const Vec& b) {
  return i128(a.c[0]) * b.c[0] + i128(a.c[1]) * b.c[1] + i128(a.c[2]) * b.c[2];
}

inline Vec cross(const Vec& a, const Vec& b) {
  return Vec(a.c[1] * b.c[2] - a.c[2] * b.c[1],
             a.c[2] * b.c[0] - a.c[0] * b.c[2],
             a.c[0] * b.c[1] - a.c[1] * b.c[0]);
}

inline i64 det2(const Vec& a, const Vec& b) {
  return a.c[0] * b.c[1] - a.c[1] * b.c[0];
}

inline i64 checked_i64(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow");
  return i64(v);
}

inline i64 det3(const Vec& a, const Vec& b, const Vec& c) {
  i128 d = i128(a.c[0]) * (i128(b.c[1]) * c.c[2] - i128(b.c[2]) * c.c[1]) -
           i128(a.c[1]) * (i128(b.c[0]) * c.c[2] - i128(b.c[2]) * c.c[0]) +
           i128(a.c[2]) * (i128(b.c[0]) * c.c[1] - i128(b.c[1]) * c.c[0]);
  return checked_i64(d);
}

inline i64 gcd_abs(i64 a, i64 b) { return std::gcd(std::abs(a), std::abs(b)); }

// gcd of the absolute values of all coordinates; 0 for the zero vector.
inline i64 content(const Vec& v) {
  return std::gcd(std::gcd(std::abs(v.c[0]), std::abs(v.c[1])), std::abs(v.c[2]));
}

inline bool is_primitive(const Vec& v) { return content(v) == 1; }

// v divided by its content; v must be nonzero.
inline Vec primitive_part(const Vec& v) {
  i64 g = content(v);
  if (g == 0) throw std::invalid_argument("primitive_part of zero vector");
  Vec r = v;
  for (int i = 0; i < 3; ++i) r.c[i] /= g;
  return r;
}

// Sign-normalize so the first nonzero coordinate is positive. [0,v] and
// [0,-v] are the same segment, so directions are stored this way throughout.
inline Vec canonical_dir(const Vec& v) {
  for (int i = 0; i < 3; ++i) {
    if (v.c[i] > 0) return v;
    if (v.c[i] < 0) return -v;
  }
  return v;
}

struct VecHash {
  size_t operator()(const Vec& v) const {
    size_t h = 1469598103934665603ull ^ size_t(v.dim);
    for (int i = 0; i < 3; ++i) {
      h ^= size_t(v.c[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct VecVectorHash {
  size_t operator()(const std::vector<Vec>& pts) const {
    size_t h = 1469598103934665603ull;
    VecHash vh;
    for (const Vec& p : pts) h ^= vh(p) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace minklen
