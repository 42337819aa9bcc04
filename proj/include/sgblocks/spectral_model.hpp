#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "block_table.hpp"

namespace sgb {

enum class ShapeKind { Point, CotoralLine, FlatLine, Dim2 };

inline std::string to_string(ShapeKind s) {
  switch (s) {
  case ShapeKind::Point: return "point";
  case ShapeKind::CotoralLine: return "cotoral_line";
  case ShapeKind::FlatLine: return "flat_line";
  case ShapeKind::Dim2: return "dim2";
  }
  return "?";
}

struct BlockShape {
  ShapeKind kind = ShapeKind::Point;
  std::size_t a = 0, b = 0;
  BlockKind tag = BlockKind::Discrete;
  /// Free-form slot for finer structure attached later.
  std::string annotation;

  std::size_t dimension() const {
    switch (kind) {
    case ShapeKind::Point: return 0;
    case ShapeKind::CotoralLine:
    case ShapeKind::FlatLine: return 1;
    case ShapeKind::Dim2: return a + b;
    }
    return 0;
  }
};

inline BlockShape shape_of(const DecompositionProfile &p, BlockKind tag) {
  BlockShape s{ShapeKind::Point, p.a, p.b, tag, {}};
  if (p.dimension() == 0)
    s.kind = ShapeKind::Point;
  else if (p.dimension() == 1)
    s.kind = p.a == 1 ? ShapeKind::CotoralLine : ShapeKind::FlatLine;
  else if (p.dimension() == 2)
    s.kind = ShapeKind::Dim2;
  else
    throw UnsupportedRank("blocks of dimension above 2 are not modelled");
  return s;
}

inline BlockShape shape_of(const DominantRecord &r) { return shape_of(r.profile, r.kind); }

/// Finite poset standing in for a block: `below` holds pairs (x, y) with x a
/// cotoral specialization of y, i.e. x < y.
struct FiniteSpectralApprox {
  std::vector<std::string> points;
  std::vector<std::pair<std::size_t, std::size_t>> below;
  std::optional<std::size_t> limit_point;

  std::size_t size() const { return points.size(); }

  /// Reflexive-transitive closure of `below`; leq[x][y] means x <= y.
  std::vector<std::vector<bool>> order() const {
    const auto n = size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      leq[i][i] = true;
    for (auto [x, y] : below)
      leq[x][y] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k][j])
              leq[i][j] = true;
    return leq;
  }

  bool is_partial_order() const {
    auto leq = order();
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (i != j && leq[i][j] && leq[j][i])
          return false;
    return true;
  }

  /// Everything below some member of `s`.
  std::set<std::size_t> down_closure(const std::set<std::size_t> &s) const {
    auto leq = order();
    std::set<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
      for (auto y : s)
        if (leq[x][y])
          out.insert(x);
    return out;
  }
};

namespace detail {

inline FiniteSpectralApprox factor_poset(ShapeKind k, std::size_t n) {
  FiniteSpectralApprox f;
  for (std::size_t i = 0; i < n; ++i)
    f.points.push_back("p" + std::to_string(i));
  if (k == ShapeKind::CotoralLine) {
    f.points.push_back("generic");
    for (std::size_t i = 0; i < n; ++i)
      f.below.emplace_back(i, n);
  } else {
    f.points.push_back("limit");
    f.limit_point = n;
  }
  return f;
}

inline FiniteSpectralApprox product(const FiniteSpectralApprox &x, const FiniteSpectralApprox &y) {
  FiniteSpectralApprox p;
  const auto m = y.size();
  for (const auto &px : x.points)
    for (const auto &py : y.points)
      p.points.push_back("(" + px + "," + py + ")");
  for (auto [u, v] : x.below)
    for (std::size_t j = 0; j < m; ++j)
      p.below.emplace_back(u * m + j, v * m + j);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (auto [u, v] : y.below)
      p.below.emplace_back(i * m + u, i * m + v);
  if (x.limit_point || y.limit_point) {
    auto lx = x.limit_point.value_or(x.size() - 1);
    auto ly = y.limit_point.value_or(y.size() - 1);
    p.limit_point = lx * m + ly;
  }
  return p;
}

} // namespace detail

/// Finite skeleton with n minimal points per graded coordinate.
inline FiniteSpectralApprox finite_approximation(const BlockShape &shape, std::size_t n) {
  if (n == 0)
    throw InvalidInput("approximation needs at least one point");
  switch (shape.kind) {
  case ShapeKind::Point: return FiniteSpectralApprox{{"pt"}, {}, std::nullopt};
  case ShapeKind::CotoralLine:
  case ShapeKind::FlatLine: return detail::factor_poset(shape.kind, n);
  case ShapeKind::Dim2: {
    std::vector<FiniteSpectralApprox> factors;
    for (std::size_t i = 0; i < shape.a; ++i)
      factors.push_back(detail::factor_poset(ShapeKind::CotoralLine, n));
    for (std::size_t i = 0; i < shape.b; ++i)
      factors.push_back(detail::factor_poset(ShapeKind::FlatLine, n));
    auto p = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
      p = detail::product(p, factors[i]);
    return p;
  }
  }
  return {};
}

struct Violation {
  std::size_t row = 0;
  std::string code;
  std::string message;
};

struct DimensionCounts {
  std::map<std::size_t, std::size_t> by_dimension;
  std::map<std::pair<std::size_t, BlockKind>, std::size_t> by_kind;
  /// Zero-dimensional blocks whose dominant subgroup has positive rank.
  std::size_t zero_dim_infinite = 0;

  std::size_t kind_count(std::size_t dim, BlockKind k) const {
    auto it = by_kind.find({dim, k});
    return it == by_kind.end() ? 0 : it->second;
  }
  std::size_t dimension_count(std::size_t dim) const {
    auto it = by_dimension.find(dim);
    return it == by_dimension.end() ? 0 : it->second;
  }

  DimensionCounts &operator+=(const DimensionCounts &o) {
    for (auto [k, v] : o.by_dimension)
      by_dimension[k] += v;
    for (auto [k, v] : o.by_kind)
      by_kind[k] += v;
    zero_dim_infinite += o.zero_dim_infinite;
    return *this;
  }
  friend bool operator==(const DimensionCounts &, const DimensionCounts &) = default;
};

/// Multiplicity-weighted block counts; placeholder rows are skipped.
inline DimensionCounts count_by_dimension(const std::vector<DominantRecord> &rows) {
  DimensionCounts c;
  for (const auto &r : rows) {
    if (r.placeholder)
      continue;
    c.by_dimension[r.dimension()] += r.multiplicity;
    c.by_kind[{r.dimension(), r.kind}] += r.multiplicity;
    if (r.dimension() == 0 && r.rank() > 0)
      c.zero_dim_infinite += r.multiplicity;
  }
  return c;
}

inline DimensionCounts count_by_dimension(const BlockTable &t) { return count_by_dimension(t.rows); }

struct SpectralReport {
  std::vector<Violation> violations;
  DimensionCounts counts;
  std::size_t blocks = 0;

  bool ok() const { return violations.empty(); }
};

namespace detail {

inline void check_skeleton(const FiniteSpectralApprox &f, const BlockShape &shape, std::size_t row,
                           std::vector<Violation> &out) {
  auto fail = [&](std::string code, std::string msg) { out.push_back({row, std::move(code), std::move(msg)}); };
  if (!f.is_partial_order())
    fail("order_axioms", "specialization relation has a cycle");
  if (shape.kind == ShapeKind::FlatLine && !f.below.empty())
    fail("flat_relations", "flat line carries cotoral relations");
  if (shape.kind == ShapeKind::CotoralLine) {
    auto leq = f.order();
    const auto generic = f.size() - 1;
    for (std::size_t i = 0; i < generic; ++i)
      if (!leq[i][generic])
        fail("cotoral_generic", "minimal point not below the generic point");
  }
  // closed sets are the down-closed ones: closing twice changes nothing
  auto leq = f.order();
  std::vector<std::set<std::size_t>> seeds{{}};
  for (std::size_t i = 0; i < f.size(); ++i) {
    seeds.push_back({i});
    for (std::size_t j = i + 1; j < f.size(); ++j)
      seeds.push_back({i, j});
  }
  for (const auto &s : seeds) {
    auto d = f.down_closure(s);
    if (f.down_closure(d) != d) {
      fail("down_closure", "down-closure is not idempotent");
      return;
    }
    for (auto x : d)
      for (std::size_t y = 0; y < f.size(); ++y)
        if (leq[y][x] && !d.count(y)) {
          fail("down_closure", "down-closed set misses a specialization");
          return;
        }
  }
}

} // namespace detail

/// Checks that the rows of a table describe a partition into well-formed blocks.
inline SpectralReport verify_spectral_partition(const BlockTable &t, std::size_t n = 3) {
  SpectralReport rep;
  std::set<std::string> labels;
  std::map<std::size_t, std::size_t> shape_histogram;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto &r = t.rows[i];
    auto fail = [&](std::string code, std::string msg) { rep.violations.push_back({i, std::move(code), std::move(msg)}); };
    try {
      auto expected = classify_block_kind(r.profile, r.h_e);
      if (expected != r.kind)
        fail("kind_mismatch", "stored kind " + to_string(r.kind) + ", profile gives " + to_string(expected));
      if (model_label(r.kind) != r.model)
        fail("model_mismatch", "model " + r.model + " does not match kind " + to_string(r.kind));
    } catch (const ClassificationError &e) {
      fail("classification_error", e.what());
    }
    if (r.multiplicity == 0)
      fail("multiplicity", "row represents no conjugacy class");
    BlockShape shape;
    try {
      shape = shape_of(r);
    } catch (const std::exception &e) {
      fail("shape", e.what());
      continue;
    }
    if (shape.dimension() != r.profile.a + r.profile.b)
      fail("dimension", "shape dimension differs from a+b");
    if (!r.placeholder)
      shape_histogram[shape.dimension()] += r.multiplicity;
    auto f = finite_approximation(shape, n);
    detail::check_skeleton(f, shape, i, rep.violations);
    const auto block = "(" + r.h_e.name + ", " + r.h_d + ")";
    for (const auto &p : f.points)
      if (!labels.insert(block + ":" + p).second) {
        fail("overlap", "block " + block + " listed twice");
        break;
      }
    ++rep.blocks;
  }
  rep.counts = count_by_dimension(t);
  std::map<std::size_t, std::size_t> summary_histogram;
  for (const auto &s : t.summary().ranks)
    for (auto [d, c] : s.classes_by_dim)
      summary_histogram[d] += c;
  if (summary_histogram != shape_histogram)
    rep.violations.push_back({t.rows.size(), "histogram", "shape dimensions disagree with the summary"});
  return rep;
}

} // namespace sgb
