#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "finite_group.hpp"

namespace sgb {

/// Exact element (c0 + c1*sqrt2 + c2*sqrt5 + c3*sqrt10) / 4 of Q(sqrt2, sqrt5).
///
/// Every coordinate of a binary polyhedral group element has this form with
/// integer numerators, so products stay exact.
struct Surd {
  std::array<std::int64_t, 4> c{};

  using Raw = std::array<std::int64_t, 4>; // numerators over 16

  static Surd integer(std::int64_t k) { return Surd{{4 * k, 0, 0, 0}}; }

  Surd operator-() const { return Surd{{-c[0], -c[1], -c[2], -c[3]}}; }

  static Raw mul_raw(const Surd &x, const Surd &y) {
    const auto &a = x.c;
    const auto &b = y.c;
    // basis products: r2*r2=2, r5*r5=5, r10*r10=10, r2*r5=r10, r2*r10=2 r5, r5*r10=5 r2
    return Raw{a[0] * b[0] + 2 * a[1] * b[1] + 5 * a[2] * b[2] + 10 * a[3] * b[3],
               a[0] * b[1] + a[1] * b[0] + 5 * (a[2] * b[3] + a[3] * b[2]),
               a[0] * b[2] + a[2] * b[0] + 2 * (a[1] * b[3] + a[3] * b[1]),
               a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]};
  }

  static Surd from_raw(const Raw &r) {
    Surd s;
    for (std::size_t i = 0; i < 4; ++i) {
      if (r[i] % 4 != 0)
        throw InvalidInput("quaternion product left the exact coordinate ring");
      s.c[i] = r[i] / 4;
    }
    return s;
  }

  friend bool operator==(const Surd &, const Surd &) = default;
};

/// Quaternion w + x i + y j + z k with exact coordinates.
struct Quaternion {
  Surd w, x, y, z;

  friend Quaternion operator*(const Quaternion &p, const Quaternion &q) {
    auto acc = [](std::initializer_list<std::pair<int, Surd::Raw>> terms) {
      Surd::Raw r{};
      for (const auto &[sign, t] : terms)
        for (std::size_t i = 0; i < 4; ++i)
          r[i] += sign * t[i];
      return Surd::from_raw(r);
    };
    using S = Surd;
    return Quaternion{
        acc({{1, S::mul_raw(p.w, q.w)}, {-1, S::mul_raw(p.x, q.x)}, {-1, S::mul_raw(p.y, q.y)}, {-1, S::mul_raw(p.z, q.z)}}),
        acc({{1, S::mul_raw(p.w, q.x)}, {1, S::mul_raw(p.x, q.w)}, {1, S::mul_raw(p.y, q.z)}, {-1, S::mul_raw(p.z, q.y)}}),
        acc({{1, S::mul_raw(p.w, q.y)}, {-1, S::mul_raw(p.x, q.z)}, {1, S::mul_raw(p.y, q.w)}, {1, S::mul_raw(p.z, q.x)}}),
        acc({{1, S::mul_raw(p.w, q.z)}, {1, S::mul_raw(p.x, q.y)}, {-1, S::mul_raw(p.y, q.x)}, {1, S::mul_raw(p.z, q.w)}})};
  }

  Quaternion conjugate() const { return {w, -x, -y, -z}; }

  friend bool operator==(const Quaternion &, const Quaternion &) = default;
};

} // namespace sgb

template <> struct std::hash<sgb::Surd> {
  std::size_t operator()(const sgb::Surd &s) const noexcept {
    std::size_t h = 0;
    for (auto v : s.c)
      h = h * 131 + static_cast<std::size_t>(v + 64);
    return h;
  }
};

template <> struct std::hash<sgb::Quaternion> {
  std::size_t operator()(const sgb::Quaternion &q) const noexcept {
    std::hash<sgb::Surd> h;
    return ((h(q.w) * 31 + h(q.x)) * 31 + h(q.y)) * 31 + h(q.z);
  }
};

namespace sgb {

namespace quat {

inline const Surd kZero{};
inline const Surd kOne = Surd::integer(1);
inline const Surd kHalf{{2, 0, 0, 0}};
inline const Surd kInvSqrt2{{0, 2, 0, 0}};
inline const Surd kHalfPhi{{1, 0, 1, 0}};    // (1 + sqrt5) / 4
inline const Surd kHalfInvPhi{{-1, 0, 1, 0}}; // (sqrt5 - 1) / 4

inline Quaternion one() { return {kOne, kZero, kZero, kZero}; }
inline Quaternion minus_one() { return {Surd::integer(-1), kZero, kZero, kZero}; }
inline Quaternion i() { return {kZero, kOne, kZero, kZero}; }
inline Quaternion j() { return {kZero, kZero, kOne, kZero}; }
inline Quaternion k() { return {kZero, kZero, kZero, kOne}; }
/// (1 + i + j + k) / 2, order 6, cycles i -> j -> k under conjugation.
inline Quaternion omega() { return {kHalf, kHalf, kHalf, kHalf}; }
/// (1 + i) / sqrt2, order 8.
inline Quaternion eighth_turn() { return {kInvSqrt2, kInvSqrt2, kZero, kZero}; }
/// (phi + phi^-1 i + j) / 2, order 10.
inline Quaternion tenth_turn() { return {kHalfPhi, kHalfInvPhi, kHalf, kZero}; }

} // namespace quat

using QuaternionGroup = FiniteGroup<Quaternion>;

inline QuaternionGroup quaternion_group() { return {quat::one(), {quat::i(), quat::j()}}; }
inline QuaternionGroup binary_tetrahedral() {
  return {quat::one(), {quat::i(), quat::j(), quat::omega()}};
}
inline QuaternionGroup binary_octahedral() {
  return {quat::one(), {quat::eighth_turn(), quat::omega()}};
}
inline QuaternionGroup binary_icosahedral() {
  return {quat::one(), {quat::i(), quat::omega(), quat::tenth_turn()}};
}
/// Binary dihedral group of order 16.
inline QuaternionGroup binary_dihedral16() {
  return {quat::one(), {quat::eighth_turn(), quat::j()}};
}

/// A finite subgroup of Sp(1) together with its full normalizer in Sp(1).
struct BinaryPolyhedral {
  std::string name;            // 2A5, 2S4, 2A4, Q8
  std::string so3_image;       // A_5, S_4, A_4, D_4
  QuaternionGroup normalizer;  // N_{Sp(1)}(F)
  ElementSet subgroup;         // F inside the normalizer
};

/// The four undominated finite subgroups of Sp(1), largest first, each inside its normalizer.
///
/// Normalizers: 2A5 is self-normalizing; 2S4, 2A4 and Q8 are normalized by 2S4.
inline std::vector<BinaryPolyhedral> sp1_finite_family() {
  std::vector<BinaryPolyhedral> out;
  auto icosa = binary_icosahedral();
  out.push_back({"2A5", "A_5", icosa, icosa.all()});
  auto octa = binary_octahedral();
  auto idx = [&](const Quaternion &q) { return octa.index_of(q); };
  out.push_back({"2S4", "S_4", octa, octa.all()});
  out.push_back({"2A4", "A_4", octa, octa.generate({idx(quat::i()), idx(quat::j()), idx(quat::omega())})});
  out.push_back({"Q8", "D_4", octa, octa.generate({idx(quat::i()), idx(quat::j())})});
  return out;
}

} // namespace sgb
