#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sgb {

/// Materialization bound for every group in this library.
inline constexpr std::size_t kMaxGroupOrder = 240;

/// Subset of a group's elements, indexed by element position.
using ElementSet = std::bitset<256>;

inline std::vector<std::size_t> members(const ElementSet &s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.test(i))
      out.push_back(i);
  return out;
}

inline bool is_subset(const ElementSet &a, const ElementSet &b) { return (a & ~b).none(); }

/// Total order on element sets: the set holding the smallest differing index comes first.
inline bool set_less(const ElementSet &a, const ElementSet &b) {
  ElementSet d = a ^ b;
  if (d.none())
    return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.test(i))
      return a.test(i);
  return false;
}

/// Group of order two written multiplicatively as {+1, -1}.
struct Sign {
  int value = 1;
  friend Sign operator*(Sign a, Sign b) { return {a.value * b.value}; }
  friend bool operator==(const Sign &, const Sign &) = default;
};

/// Element of a direct product A x B.
template <class A, class B> struct Pair {
  A first;
  B second;
  friend Pair operator*(const Pair &x, const Pair &y) {
    return {x.first * y.first, x.second * y.second};
  }
  friend bool operator==(const Pair &, const Pair &) = default;
};

} // namespace sgb

template <> struct std::hash<sgb::Sign> {
  std::size_t operator()(const sgb::Sign &s) const noexcept { return s.value > 0 ? 1 : 2; }
};

template <class A, class B> struct std::hash<sgb::Pair<A, B>> {
  std::size_t operator()(const sgb::Pair<A, B> &p) const noexcept {
    return std::hash<A>{}(p.first) * 1000003u ^ std::hash<B>{}(p.second);
  }
};

namespace sgb {

/// A finite group with every element materialized and a full multiplication table.
///
/// `Element` needs `operator*`, `operator==` and a `std::hash` specialization.
/// Element 0 is always the identity. Subgroups and subsets are `ElementSet`s
/// over element indices, so all set-level operations are index arithmetic.
template <class Element> class FiniteGroup {
public:
  using element_type = Element;

  FiniteGroup(Element identity, const std::vector<Element> &generators,
              std::size_t max_order = kMaxGroupOrder) {
    elements_.push_back(identity);
    index_.emplace(identity, 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (const auto &g : generators) {
        Element y = elements_[i] * g;
        if (index_.find(y) != index_.end())
          continue;
        if (elements_.size() >= max_order)
          throw CapacityError("group order exceeds bound of " + std::to_string(max_order));
        index_.emplace(y, static_cast<std::uint16_t>(elements_.size()));
        elements_.push_back(std::move(y));
      }
    }
    for (const auto &g : generators)
      generators_.push_back(index_of(g));
    build_tables();
  }

  /// Wraps an explicit element list, which must be closed and hold the identity first.
  static FiniteGroup from_elements(std::vector<Element> elements) {
    if (elements.empty() || elements.size() > kMaxGroupOrder)
      throw CapacityError("element list size out of range");
    FiniteGroup g;
    g.elements_ = std::move(elements);
    for (std::size_t i = 0; i < g.elements_.size(); ++i)
      if (!g.index_.emplace(g.elements_[i], static_cast<std::uint16_t>(i)).second)
        throw InvalidInput("duplicate element in element list");
    if (!(g.elements_[0] * g.elements_[0] == g.elements_[0]))
      throw InvalidInput("first element is not the identity");
    for (std::size_t i = 1; i < g.elements_.size(); ++i)
      g.generators_.push_back(i);
    g.build_tables();
    return g;
  }

  std::size_t order() const { return elements_.size(); }
  const Element &element(std::size_t i) const { return elements_[i]; }
  const std::vector<Element> &elements() const { return elements_; }
  const std::vector<std::size_t> &generator_indices() const { return generators_; }

  std::optional<std::size_t> find(const Element &e) const {
    auto it = index_.find(e);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const Element &e) const {
    auto i = find(e);
    if (!i)
      throw InvalidInput("element does not belong to the group");
    return *i;
  }

  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const { return orders_[a]; }
  bool is_abelian() const { return is_abelian(all()); }

  ElementSet all() const {
    ElementSet s;
    for (std::size_t i = 0; i < order(); ++i)
      s.set(i);
    return s;
  }

  ElementSet trivial() const {
    ElementSet s;
    s.set(0);
    return s;
  }

  ElementSet generate(std::span<const std::size_t> gens) const {
    ElementSet s;
    s.set(0);
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (auto x : frontier)
        for (auto g : gens) {
          auto y = mul(x, g);
          if (!s.test(y)) {
            s.set(y);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    return s;
  }

  ElementSet generate(const ElementSet &gens) const {
    auto m = members(gens);
    return generate(std::span<const std::size_t>(m));
  }

  ElementSet generate(std::initializer_list<std::size_t> gens) const {
    std::vector<std::size_t> v(gens);
    return generate(std::span<const std::size_t>(v));
  }

  ElementSet cyclic(std::size_t g) const {
    ElementSet s;
    std::size_t x = 0;
    do {
      s.set(x);
      x = mul(x, g);
    } while (x != 0);
    return s;
  }

  bool is_subgroup(const ElementSet &h) const {
    if (!h.test(0))
      return false;
    auto m = members(h);
    for (auto x : m)
      for (auto y : m)
        if (!h.test(mul(x, y)))
          return false;
    return true;
  }

  bool is_abelian(const ElementSet &h) const {
    auto m = members(h);
    for (auto x : m)
      for (auto y : m)
        if (mul(x, y) != mul(y, x))
          return false;
    return true;
  }

  /// g h g^-1 for every h in the set.
  ElementSet conjugate(const ElementSet &h, std::size_t g) const {
    ElementSet out;
    auto gi = inv(g);
    for (std::size_t i = 0; i < order(); ++i)
      if (h.test(i))
        out.set(mul(mul(g, i), gi));
    return out;
  }

  ElementSet normalizer(const ElementSet &h, const ElementSet &within) const {
    ElementSet n;
    for (std::size_t g = 0; g < order(); ++g)
      if (within.test(g) && conjugate(h, g) == h)
        n.set(g);
    return n;
  }
  ElementSet normalizer(const ElementSet &h) const { return normalizer(h, all()); }

  bool is_normal(const ElementSet &h, const ElementSet &in) const {
    return is_subset(in, normalizer(h, in));
  }

  ElementSet commutator_subgroup(const ElementSet &h) const {
    ElementSet comms;
    auto m = members(h);
    for (auto x : m)
      for (auto y : m)
        comms.set(mul(mul(x, y), mul(inv(x), inv(y))));
    return generate(comms);
  }

  /// Distinct conjugates of `h` under elements of `by`, in order of first appearance.
  std::vector<ElementSet> conjugacy_orbit(const ElementSet &h, const ElementSet &by) const {
    std::vector<ElementSet> orbit;
    for (std::size_t g = 0; g < order(); ++g) {
      if (!by.test(g))
        continue;
      auto c = conjugate(h, g);
      bool seen = false;
      for (const auto &o : orbit)
        if (o == c) {
          seen = true;
          break;
        }
      if (!seen)
        orbit.push_back(c);
    }
    return orbit;
  }
  std::vector<ElementSet> conjugacy_orbit(const ElementSet &h) const {
    return conjugacy_orbit(h, all());
  }

private:
  FiniteGroup() = default;

  void build_tables() {
    const std::size_t n = order();
    table_.assign(n * n, 0);
    inverse_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto it = index_.find(elements_[i] * elements_[j]);
        if (it == index_.end())
          throw InvalidInput("element list is not closed under multiplication");
        table_[i * n + j] = it->second;
        if (it->second == 0)
          inverse_[i] = static_cast<std::uint16_t>(j);
      }
    orders_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t k = 1;
      std::size_t x = i;
      while (x != 0) {
        x = mul(x, i);
        ++k;
      }
      orders_[i] = i == 0 ? 1 : k;
    }
  }

  std::vector<Element> elements_;
  std::unordered_map<Element, std::uint16_t> index_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> generators_;
};

} // namespace sgb
