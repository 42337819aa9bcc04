#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "finite_group.hpp"
#include "int_matrix.hpp"

namespace sgb {

enum class RootType { A1xA1, A2, C2 };

inline std::string to_string(RootType t) {
  switch (t) {
  case RootType::A1xA1: return "A1xA1";
  case RootType::A2: return "A2";
  case RootType::C2: return "C2";
  }
  return "?";
}

inline RootType parse_root_type(std::string_view s) {
  if (s == "A1xA1")
    return RootType::A1xA1;
  if (s == "A2")
    return RootType::A2;
  if (s == "C2")
    return RootType::C2;
  throw InvalidInput("unknown root system type: " + std::string(s));
}

/// Rank-2 root datum on the cocharacter lattice Z^2.
///
/// Roots are stored in lattice coordinates; `invariant_form` identifies roots
/// with functionals, so B(alpha, v) is the value of alpha on the cocharacter v
/// up to a positive constant per root system.
struct RootDatum {
  RootType type;
  int lattice_rank = 2;
  std::vector<Vec2> roots;
  std::vector<Vec2> positive_roots;
  std::vector<Vec2> simple_roots;
  Mat2 invariant_form;

  Int form(Vec2 u, Vec2 v) const {
    const auto &b = invariant_form;
    return u.x * (b(0, 0) * v.x + b(0, 1) * v.y) + u.y * (b(1, 0) * v.x + b(1, 1) * v.y);
  }

  bool is_root(Vec2 v) const { return std::find(roots.begin(), roots.end(), v) != roots.end(); }

  /// Long roots have maximal squared length; in a simply laced system every root is long.
  bool is_long(Vec2 root) const {
    Int longest = 0;
    for (auto r : roots)
      longest = std::max(longest, form(r, r));
    return form(root, root) == longest;
  }

  /// v -> v - (2 B(alpha, v) / B(alpha, alpha)) alpha.
  Mat2 reflection(Vec2 alpha) const {
    auto image = [&](Vec2 v) {
      Int num = 2 * form(alpha, v);
      Int den = form(alpha, alpha);
      if (den == 0 || num % den != 0)
        throw InvalidInput("reflection is not integral on the lattice");
      return v - (num / den) * alpha;
    };
    Vec2 c0 = image({1, 0});
    Vec2 c1 = image({0, 1});
    return Mat2::of(c0.x, c1.x, c0.y, c1.y);
  }
};

inline RootDatum build_root_datum(RootType t) {
  RootDatum rd{t, 2, {}, {}, {}, Mat2::identity()};
  switch (t) {
  case RootType::A1xA1:
    rd.positive_roots = {{1, 0}, {0, 1}};
    rd.simple_roots = {{1, 0}, {0, 1}};
    break;
  case RootType::A2:
    // simple-root coordinates; the form is the Cartan matrix
    rd.positive_roots = {{1, 0}, {0, 1}, {1, 1}};
    rd.simple_roots = {{1, 0}, {0, 1}};
    rd.invariant_form = Mat2::of(2, -1, -1, 2);
    break;
  case RootType::C2:
    // long roots +-2e_i, short roots +-e1 +- e2
    rd.positive_roots = {{1, -1}, {0, 2}, {1, 1}, {2, 0}};
    rd.simple_roots = {{1, -1}, {0, 2}};
    break;
  }
  for (auto r : rd.positive_roots)
    rd.roots.push_back(r);
  for (auto r : rd.positive_roots)
    rd.roots.push_back(-r);
  return rd;
}

inline RootDatum build_root_datum(std::string_view label) { return build_root_datum(parse_root_type(label)); }

using MatrixGroup = FiniteGroup<Mat2>;

/// Group generated by the simple reflections.
inline MatrixGroup weyl_group(const RootDatum &rd) {
  std::vector<Mat2> gens;
  for (auto s : rd.simple_roots)
    gens.push_back(rd.reflection(s));
  return MatrixGroup(Mat2::identity(), gens);
}

/// Determinant -1 and order 2, so it fixes a rank-1 sublattice pointwise.
inline bool is_reflection(const Mat2 &m) { return m.det() == -1 && m * m == Mat2::identity(); }

inline std::vector<bool> reflection_flags(const MatrixGroup &w) {
  std::vector<bool> flags;
  for (const auto &m : w.elements())
    flags.push_back(is_reflection(m));
  return flags;
}

/// Name of the whole Weyl group; D_{2n} has order 2n.
inline std::string weyl_group_name(RootType t) {
  switch (t) {
  case RootType::A1xA1: return "D_4";
  case RootType::A2: return "D_6";
  case RootType::C2: return "D_8";
  }
  return "?";
}

} // namespace sgb
