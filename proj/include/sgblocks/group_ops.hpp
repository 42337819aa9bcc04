#pragma once

#include <cstddef>
#include <vector>

#include "finite_group.hpp"
#include "permutation.hpp"

namespace sgb {

using PermGroup = FiniteGroup<Permutation>;

inline PermGroup group_from_generators(std::size_t degree, const std::vector<Permutation> &generators) {
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw InvalidInput("generator degree does not match");
  return PermGroup(Permutation::identity(degree), generators);
}

/// Left-regular representation. Element i of the result is left multiplication by element i.
template <class E> PermGroup regular_representation(const FiniteGroup<E> &g) {
  std::vector<Permutation> perms;
  perms.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<Permutation::point_type> im(g.order());
    for (std::size_t y = 0; y < g.order(); ++y)
      im[y] = static_cast<Permutation::point_type>(g.mul(x, y));
    perms.emplace_back(std::move(im));
  }
  return PermGroup::from_elements(std::move(perms));
}

template <class A, class B>
FiniteGroup<Pair<A, B>> direct_product(const FiniteGroup<A> &a, const FiniteGroup<B> &b) {
  using P = Pair<A, B>;
  std::vector<P> gens;
  for (auto i : a.generator_indices())
    gens.push_back(P{a.element(i), b.element(0)});
  for (auto j : b.generator_indices())
    gens.push_back(P{a.element(0), b.element(j)});
  return FiniteGroup<P>(P{a.element(0), b.element(0)}, gens);
}

/// N/H realized as the regular action on left cosets of H in N.
struct Quotient {
  PermGroup group;
  /// Coset index of each ambient element, or -1 outside N.
  std::vector<std::ptrdiff_t> coset_of;
  /// One ambient element per quotient element; representative[0] is the identity.
  std::vector<std::size_t> representative;

  /// Image in the quotient of a subset of N.
  ElementSet image(const ElementSet &s) const {
    ElementSet out;
    for (std::size_t i = 0; i < coset_of.size(); ++i)
      if (s.test(i) && coset_of[i] >= 0)
        out.set(static_cast<std::size_t>(coset_of[i]));
    return out;
  }

  /// Full preimage in N of a subset of the quotient.
  ElementSet preimage(const ElementSet &q) const {
    ElementSet out;
    for (std::size_t i = 0; i < coset_of.size(); ++i)
      if (coset_of[i] >= 0 && q.test(static_cast<std::size_t>(coset_of[i])))
        out.set(i);
    return out;
  }
};

template <class E>
Quotient quotient(const FiniteGroup<E> &g, const ElementSet &n, const ElementSet &h) {
  if (!is_subset(h, n) || !g.is_subgroup(n) || !g.is_subgroup(h) || !g.is_normal(h, n))
    throw InvalidInput("quotient requires a normal subgroup of a subgroup");
  std::vector<std::ptrdiff_t> coset(g.order(), -1);
  std::vector<std::size_t> reps;
  auto hm = members(h);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!n.test(x) || coset[x] >= 0)
      continue;
    auto id = static_cast<std::ptrdiff_t>(reps.size());
    reps.push_back(x);
    for (auto y : hm)
      coset[g.mul(x, y)] = id;
  }
  std::vector<Permutation> perms;
  perms.reserve(reps.size());
  for (auto r : reps) {
    std::vector<Permutation::point_type> im(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      im[c] = static_cast<Permutation::point_type>(coset[g.mul(r, reps[c])]);
    perms.emplace_back(std::move(im));
  }
  return Quotient{PermGroup::from_elements(std::move(perms)), std::move(coset), std::move(reps)};
}

} // namespace sgb
