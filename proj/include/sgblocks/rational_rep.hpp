#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "int_matrix.hpp"

namespace sgb {

/// A finite group acting on Z^dim, given by its image matrices.
struct IntegralRep {
  std::size_t dim = 0;
  std::vector<IntMatrix> elements;

  /// Closes `generators` under products; the identity is always included.
  static IntegralRep generated(std::size_t dim, const std::vector<IntMatrix> &generators) {
    IntegralRep rep{dim, {IntMatrix::identity(dim)}};
    std::unordered_set<IntMatrix> seen{rep.elements.front()};
    for (std::size_t i = 0; i < rep.elements.size(); ++i)
      for (const auto &g : generators) {
        if (g.size() != dim)
          throw InvalidInput("generator size does not match representation dimension");
        auto y = rep.elements[i] * g;
        if (seen.insert(y).second)
          rep.elements.push_back(y);
        if (rep.elements.size() > 1024)
          throw InvalidInput("generators do not span a finite group");
      }
    return rep;
  }

  /// Deduplicated image list, identity first.
  static IntegralRep from_images(std::size_t dim, const std::vector<IntMatrix> &images) {
    IntegralRep rep{dim, {IntMatrix::identity(dim)}};
    std::unordered_set<IntMatrix> seen{rep.elements.front()};
    for (const auto &m : images)
      if (seen.insert(m).second)
        rep.elements.push_back(m);
    return rep;
  }

  bool is_group() const {
    std::unordered_set<IntMatrix> set(elements.begin(), elements.end());
    for (const auto &x : elements) {
      auto d = x.det();
      if (d != 1 && d != -1)
        return false;
      for (const auto &y : elements)
        if (!set.count(x * y))
          return false;
    }
    return set.count(IntMatrix::identity(dim)) > 0;
  }
};

enum class SummandKind { Trivial, Sign, Simple2 };

struct Summand {
  SummandKind kind = SummandKind::Trivial;
  std::size_t dim = 1;
  /// Character values on `IntegralRep::elements` (1-dim summands only).
  std::vector<int> character;

  std::string describe() const {
    switch (kind) {
    case SummandKind::Trivial: return "trivial";
    case SummandKind::Simple2: return "2-dim simple";
    case SummandKind::Sign: {
      std::string s = "sign character [";
      for (std::size_t i = 0; i < character.size(); ++i)
        s += (i ? "," : "") + std::string(character[i] > 0 ? "+" : "-");
      return s + "]";
    }
    }
    return "?";
  }

  friend bool operator==(const Summand &, const Summand &) = default;
};

/// Rational decomposition of an integral representation:
/// a trivial summands and b nontrivial simple summands counted with multiplicity.
struct DecompositionProfile {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<Summand> summands;

  std::size_t dimension() const { return a + b; }
};

struct FixedSpace {
  std::size_t dim = 0;
  /// Saturated integral basis, each vector of length rep.dim.
  std::vector<std::vector<Int>> basis;
};

namespace detail {

/// Primitive generator of the kernel of a rank-1 2x2 integer matrix.
inline Vec2 kernel_line(const IntMatrix &m) {
  for (std::size_t r = 0; r < 2; ++r)
    if (m(r, 0) != 0 || m(r, 1) != 0)
      return primitive_line_rep({-m(r, 1), m(r, 0)});
  return {1, 0};
}

inline IntMatrix shifted(const IntMatrix &g, Int lambda) {
  IntMatrix d = g;
  for (std::size_t i = 0; i < g.size(); ++i)
    d(i, i) -= lambda;
  return d;
}

inline std::optional<int> eigenvalue_on(const IntMatrix &g, Vec2 v) {
  Int gx = g(0, 0) * v.x + g(0, 1) * v.y;
  Int gy = g(1, 0) * v.x + g(1, 1) * v.y;
  if (gx == v.x && gy == v.y)
    return 1;
  if (gx == -v.x && gy == -v.y)
    return -1;
  return std::nullopt;
}

inline bool is_scalar(const IntMatrix &g) { return g(0, 1) == 0 && g(1, 0) == 0 && g(0, 0) == g(1, 1); }

} // namespace detail

inline FixedSpace fixed_space(const IntegralRep &rep) {
  switch (rep.dim) {
  case 0: return {};
  case 1: {
    for (const auto &g : rep.elements)
      if (g(0, 0) != 1)
        return {};
    return {1, {{1}}};
  }
  case 2: {
    std::vector<Vec2> rows;
    for (const auto &g : rep.elements) {
      auto d = detail::shifted(g, 1);
      for (std::size_t r = 0; r < 2; ++r)
        if (d(r, 0) != 0 || d(r, 1) != 0)
          rows.push_back({d(r, 0), d(r, 1)});
    }
    if (rows.empty())
      return {2, {{1, 0}, {0, 1}}};
    for (auto r : rows)
      if (rows.front().x * r.y - rows.front().y * r.x != 0)
        return {};
    Vec2 v = primitive_line_rep({-rows.front().y, rows.front().x});
    return {1, {{v.x, v.y}}};
  }
  default: throw UnsupportedRank("fixed space only implemented up to dimension 2");
  }
}

inline std::size_t fixed_dim(const IntegralRep &rep) { return fixed_space(rep).dim; }

/// Lines through the origin spanned by a common eigenvector of every element.
/// Finite-order integer matrices only have rational eigenvalues +-1.
inline std::vector<Vec2> common_eigenlines(const IntegralRep &rep) {
  if (rep.dim != 2)
    throw UnsupportedRank("eigenline search needs dimension 2");
  std::vector<Vec2> candidates;
  bool non_scalar = false;
  for (const auto &g : rep.elements) {
    if (detail::is_scalar(g))
      continue;
    non_scalar = true;
    for (Int lambda : {Int{1}, Int{-1}}) {
      auto d = detail::shifted(g, lambda);
      if (d.det() == 0)
        candidates.push_back(detail::kernel_line(d));
    }
    break;
  }
  if (!non_scalar)
    candidates = {{1, 0}, {0, 1}};
  std::vector<Vec2> out;
  for (auto v : candidates) {
    bool ok = std::all_of(rep.elements.begin(), rep.elements.end(),
                          [&](const IntMatrix &g) { return detail::eigenvalue_on(g, v).has_value(); });
    if (ok && std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  }
  return out;
}

/// Splits the representation over Q into trivial and nontrivial simple summands.
///
/// After removing the fixed part, a 2-dimensional complement splits into two
/// characters exactly when every element shares a rational eigenvector.
inline DecompositionProfile decompose_profile(const IntegralRep &rep) {
  if (rep.dim > 2)
    throw UnsupportedRank("decomposition only implemented up to dimension 2");
  DecompositionProfile p;
  p.a = fixed_dim(rep);
  for (std::size_t i = 0; i < p.a; ++i)
    p.summands.push_back({SummandKind::Trivial, 1, std::vector<int>(rep.elements.size(), 1)});
  const std::size_t complement = rep.dim - p.a;
  if (complement == 1) {
    Summand s{SummandKind::Sign, 1, {}};
    for (const auto &g : rep.elements)
      s.character.push_back(static_cast<int>(g.det()));
    p.summands.push_back(std::move(s));
    p.b = 1;
  } else if (complement == 2) {
    auto lines = common_eigenlines(rep);
    if (lines.size() >= 2) {
      for (std::size_t l = 0; l < 2; ++l) {
        Summand s{SummandKind::Sign, 1, {}};
        for (const auto &g : rep.elements)
          s.character.push_back(*detail::eigenvalue_on(g, lines[l]));
        p.summands.push_back(std::move(s));
      }
      p.b = 2;
    } else {
      p.summands.push_back({SummandKind::Simple2, 2, {}});
      p.b = 1;
    }
  }
  return p;
}

inline std::pair<std::size_t, std::size_t> block_dimension(const DecompositionProfile &p) { return {p.a, p.b}; }

} // namespace sgb
