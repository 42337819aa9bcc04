#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <vector>

#include "errors.hpp"

namespace sgb {

using Int = std::int64_t;

struct Vec2 {
  Int x = 0;
  Int y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(Int k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const Vec2 &, const Vec2 &) = default;
  friend auto operator<=>(const Vec2 &, const Vec2 &) = default;

  bool is_zero() const { return x == 0 && y == 0; }

  friend std::ostream &operator<<(std::ostream &os, Vec2 v) {
    return os << '(' << v.x << ',' << v.y << ')';
  }
};

/// Divides out the content and fixes the sign so the first nonzero entry is positive.
inline Vec2 primitive_line_rep(Vec2 v) {
  Int g = std::gcd(v.x, v.y);
  if (g == 0)
    return v;
  v = {v.x / g, v.y / g};
  if (v.x < 0 || (v.x == 0 && v.y < 0))
    v = -v;
  return v;
}

/// Row-major 2x2 integer matrix acting on column vectors.
struct Mat2 {
  std::array<Int, 4> a{1, 0, 0, 1};

  static Mat2 identity() { return {}; }
  static Mat2 of(Int a00, Int a01, Int a10, Int a11) { return Mat2{{a00, a01, a10, a11}}; }

  Int operator()(int r, int c) const { return a[2 * r + c]; }
  Int det() const { return a[0] * a[3] - a[1] * a[2]; }
  Int trace() const { return a[0] + a[3]; }

  friend Mat2 operator*(const Mat2 &m, const Mat2 &n) {
    return of(m.a[0] * n.a[0] + m.a[1] * n.a[2], m.a[0] * n.a[1] + m.a[1] * n.a[3],
              m.a[2] * n.a[0] + m.a[3] * n.a[2], m.a[2] * n.a[1] + m.a[3] * n.a[3]);
  }
  friend Vec2 operator*(const Mat2 &m, Vec2 v) {
    return {m.a[0] * v.x + m.a[1] * v.y, m.a[2] * v.x + m.a[3] * v.y};
  }
  friend Mat2 operator-(const Mat2 &m, const Mat2 &n) {
    return of(m.a[0] - n.a[0], m.a[1] - n.a[1], m.a[2] - n.a[2], m.a[3] - n.a[3]);
  }
  friend bool operator==(const Mat2 &, const Mat2 &) = default;

  /// Inverse of a unimodular matrix.
  Mat2 unimodular_inverse() const {
    Int d = det();
    if (d != 1 && d != -1)
      throw InvalidInput("matrix is not unimodular");
    return of(d * a[3], -d * a[1], -d * a[2], d * a[0]);
  }

  Mat2 transpose() const { return of(a[0], a[2], a[1], a[3]); }

  friend std::ostream &operator<<(std::ostream &os, const Mat2 &m) {
    return os << "[[" << m.a[0] << ',' << m.a[1] << "],[" << m.a[2] << ',' << m.a[3] << "]]";
  }
};

/// Square integer matrix of small dynamic size (0, 1 or 2 in practice).
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::size_t n, std::vector<Int> entries) : n_(n), data_(std::move(entries)) {
    if (data_.size() != n * n)
      throw InvalidInput("entry count does not match matrix size");
  }
  explicit IntMatrix(const Mat2 &m) : n_(2), data_(m.a.begin(), m.a.end()) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  Int &operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  const std::vector<Int> &entries() const { return data_; }

  Int det() const {
    switch (n_) {
    case 0: return 1;
    case 1: return data_[0];
    case 2: return data_[0] * data_[3] - data_[1] * data_[2];
    default: throw UnsupportedRank("determinant only implemented up to size 2");
    }
  }

  friend IntMatrix operator*(const IntMatrix &x, const IntMatrix &y) {
    if (x.n_ != y.n_)
      throw InvalidInput("matrix size mismatch");
    IntMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k)
        for (std::size_t j = 0; j < x.n_; ++j)
          r(i, j) += x(i, k) * y(k, j);
    return r;
  }
  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  friend std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
    os << '[';
    for (std::size_t i = 0; i < m.n_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.n_; ++j)
        os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

private:
  std::size_t n_ = 0;
  std::vector<Int> data_;
};

} // namespace sgb

template <> struct std::hash<sgb::Mat2> {
  std::size_t operator()(const sgb::Mat2 &m) const noexcept {
    std::size_t h = 0;
    for (auto x : m.a)
      h = h * 31 + static_cast<std::size_t>(x + 7);
    return h;
  }
};

template <> struct std::hash<sgb::IntMatrix> {
  std::size_t operator()(const sgb::IntMatrix &m) const noexcept {
    std::size_t h = m.size();
    for (auto x : m.entries())
      h = h * 31 + static_cast<std::size_t>(x + 7);
    return h;
  }
};
