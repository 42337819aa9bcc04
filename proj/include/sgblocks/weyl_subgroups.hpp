#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "group_ops.hpp"
#include "root_datum.hpp"
#include "subgroup_lattice.hpp"

namespace sgb {

struct WeylSubgroupClass {
  ElementSet representative;
  std::vector<ElementSet> conjugates;
  std::size_t order = 0;
  bool is_reflection_group = false;
  std::string label;
};

/// Positive roots whose reflections lie in `h`.
inline std::vector<Vec2> reflection_roots(const RootDatum &rd, const MatrixGroup &w, const ElementSet &h) {
  std::vector<Vec2> out;
  for (auto r : rd.positive_roots) {
    auto idx = w.find(rd.reflection(r));
    if (idx && h.test(*idx))
      out.push_back(r);
  }
  return out;
}

inline bool generated_by_reflections(const MatrixGroup &w, const ElementSet &h) {
  ElementSet refl;
  for (auto x : members(h))
    if (is_reflection(w.element(x)))
      refl.set(x);
  return w.generate(refl) == h;
}

/// Canonical name of a subgroup of W.
///
/// X / X' are generated by one long / short root reflection and V / V' by the
/// two long / short reflections (type C2). For A1xA1, C_2^x is the reflection
/// fixing the first axis and C_2^Delta is {I, -I}.
inline std::string weyl_subgroup_label(const RootDatum &rd, const MatrixGroup &w, const ElementSet &h) {
  const auto order = h.count();
  if (order == 1)
    return "1";
  if (order == w.order())
    return weyl_group_name(rd.type);
  auto roots = reflection_roots(rd, w, h);
  if (order == 2) {
    if (roots.empty())
      return rd.type == RootType::A1xA1 ? "C_2^Delta" : "C_2";
    switch (rd.type) {
    case RootType::A1xA1: return roots.front() == Vec2{0, 1} ? "C_2^x" : "C_2^y";
    case RootType::A2: return "C_2";
    case RootType::C2: return rd.is_long(roots.front()) ? "X" : "X'";
    }
  }
  if (order == 4 && rd.type == RootType::C2) {
    if (roots.empty())
      return "C_4";
    return rd.is_long(roots.front()) ? "V" : "V'";
  }
  return recognize(w, h).name;
}

/// All conjugacy classes of subgroups of W, flagged by whether reflections generate them.
/// Sorted by (order, label).
inline std::vector<WeylSubgroupClass> reflection_subgroup_classes(const RootDatum &rd, const MatrixGroup &w) {
  std::vector<WeylSubgroupClass> out;
  for (const auto &c : subgroup_classes(w)) {
    WeylSubgroupClass wc;
    wc.representative = c.representative;
    wc.conjugates = w.conjugacy_orbit(c.representative);
    std::sort(wc.conjugates.begin(), wc.conjugates.end(), set_less);
    wc.order = c.order;
    wc.is_reflection_group = generated_by_reflections(w, c.representative);
    wc.label = weyl_subgroup_label(rd, w, c.representative);
    out.push_back(std::move(wc));
  }
  std::stable_sort(out.begin(), out.end(), [](const WeylSubgroupClass &a, const WeylSubgroupClass &b) {
    if (a.order != b.order)
      return a.order < b.order;
    return a.label < b.label;
  });
  return out;
}

/// Saturated basis of {v in Z^2 : g v = v for all g}.
inline std::vector<Vec2> fixed_basis(const std::vector<Mat2> &mats) {
  std::vector<Vec2> rows;
  for (const auto &m : mats) {
    auto d = m - Mat2::identity();
    for (int r = 0; r < 2; ++r)
      if (d(r, 0) != 0 || d(r, 1) != 0)
        rows.push_back({d(r, 0), d(r, 1)});
  }
  if (rows.empty())
    return {{1, 0}, {0, 1}};
  const Vec2 first = rows.front();
  for (auto r : rows)
    if (first.x * r.y - first.y * r.x != 0)
      return {};
  // perpendicular to a nonzero row; primitive, hence saturated
  return {primitive_line_rep({-first.y, first.x})};
}

/// Integer matrix of `m` restricted to the span of `basis` (assumed m-invariant).
inline IntMatrix restrict_to_basis(const Mat2 &m, const std::vector<Vec2> &basis) {
  if (basis.empty())
    return IntMatrix(0);
  if (basis.size() == 1) {
    Vec2 v = basis.front();
    Vec2 mv = m * v;
    Int lambda = v.x != 0 ? mv.x / v.x : mv.y / v.y;
    if (lambda * v.x != mv.x || lambda * v.y != mv.y)
      throw InvalidInput("matrix does not preserve the fixed line");
    return IntMatrix(1, {lambda});
  }
  Mat2 b = Mat2::of(basis[0].x, basis[1].x, basis[0].y, basis[1].y);
  return IntMatrix(b.unimodular_inverse() * m * b);
}

/// Fixed sublattice of R with the induced action of N_W(R)/R.
struct FixedSublattice {
  std::vector<Vec2> basis;
  ElementSet normalizer;
  Quotient omega; // N_W(R)/R
  /// Action of each element of omega on the basis.
  std::vector<IntMatrix> action;

  std::size_t rank() const { return basis.size(); }
};

inline FixedSublattice fixed_sublattice(const MatrixGroup &w, const ElementSet &r) {
  std::vector<Mat2> mats;
  for (auto x : members(r))
    mats.push_back(w.element(x));
  auto basis = fixed_basis(mats);
  auto n = w.normalizer(r);
  auto q = quotient(w, n, r);
  std::vector<IntMatrix> action;
  for (auto rep : q.representative)
    action.push_back(restrict_to_basis(w.element(rep), basis));
  return FixedSublattice{std::move(basis), n, std::move(q), std::move(action)};
}

inline FixedSublattice fixed_sublattice(const WeylSubgroupClass &r, const MatrixGroup &w) {
  return fixed_sublattice(w, r.representative);
}

} // namespace sgb
