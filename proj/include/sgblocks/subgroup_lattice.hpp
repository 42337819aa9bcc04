#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "recognition.hpp"

namespace sgb {

struct SubgroupClass {
  /// Canonical member: the `set_less`-smallest subgroup in the class.
  ElementSet representative;
  std::size_t order = 0;
  std::size_t class_size = 0;
  ElementSet normalizer;
  std::string label;
};

/// Conjugacy classes of subgroups by cyclic extension.
///
/// Layer k+1 is formed by joining each layer-k class representative with every
/// cyclic subgroup of G it does not contain; new subgroups are kept only when no
/// conjugate has been seen. Classes come back sorted by (order, representative).
template <class E> std::vector<SubgroupClass> subgroup_classes(const FiniteGroup<E> &g) {
  std::vector<ElementSet> cyclics;
  std::vector<std::size_t> cyclic_gen;
  {
    std::unordered_set<ElementSet> seen;
    for (std::size_t x = 1; x < g.order(); ++x) {
      auto c = g.cyclic(x);
      if (seen.insert(c).second) {
        cyclics.push_back(c);
        cyclic_gen.push_back(x);
      }
    }
  }

  struct Found {
    ElementSet set;
    std::vector<std::size_t> gens;
  };
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> reps;
  std::vector<Found> layer{{g.trivial(), {}}};
  seen.insert(g.trivial());
  reps.push_back(g.trivial());

  while (!layer.empty()) {
    std::vector<Found> next;
    for (const auto &k : layer)
      for (std::size_t c = 0; c < cyclics.size(); ++c) {
        if (is_subset(cyclics[c], k.set))
          continue;
        auto gens = k.gens;
        gens.push_back(cyclic_gen[c]);
        auto joined = g.generate(std::span<const std::size_t>(gens));
        if (seen.count(joined))
          continue;
        for (const auto &conj : g.conjugacy_orbit(joined))
          seen.insert(conj);
        reps.push_back(joined);
        next.push_back({joined, std::move(gens)});
      }
    layer = std::move(next);
  }

  std::vector<SubgroupClass> out;
  out.reserve(reps.size());
  for (const auto &r : reps) {
    auto orbit = g.conjugacy_orbit(r);
    auto canon = *std::min_element(orbit.begin(), orbit.end(), set_less);
    SubgroupClass sc;
    sc.representative = canon;
    sc.order = canon.count();
    sc.class_size = orbit.size();
    sc.normalizer = g.normalizer(canon);
    sc.label = recognize(g, canon).name;
    out.push_back(std::move(sc));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupClass &a, const SubgroupClass &b) {
    if (a.order != b.order)
      return a.order < b.order;
    return set_less(a.representative, b.representative);
  });
  return out;
}

/// Every subgroup, expanded from the conjugacy classes.
template <class E>
std::vector<ElementSet> all_subgroups(const FiniteGroup<E> &g, const std::vector<SubgroupClass> &classes) {
  std::vector<ElementSet> out;
  for (const auto &c : classes)
    for (const auto &s : g.conjugacy_orbit(c.representative))
      out.push_back(s);
  return out;
}

/// Subgroup generated by all squares and commutators of H.
template <class E> ElementSet squares_and_commutators(const FiniteGroup<E> &g, const ElementSet &h) {
  ElementSet gens = g.commutator_subgroup(h);
  for (auto x : members(h))
    gens.set(g.mul(x, x));
  return g.generate(gens);
}

/// All index-2 subgroups of H, i.e. kernels of surjections H -> C_2.
///
/// H / (H^2 [H,H]) is elementary abelian of some rank r; the kernels are the
/// 2^r - 1 hyperplanes, each generated from a lifted basis.
template <class E> std::vector<ElementSet> index2_kernels(const FiniteGroup<E> &g, const ElementSet &h) {
  const ElementSet base = squares_and_commutators(g, h);
  std::vector<std::size_t> basis;
  ElementSet span = base;
  for (auto x : members(h))
    if (!span.test(x)) {
      basis.push_back(x);
      ElementSet gens = span;
      gens.set(x);
      span = g.generate(gens);
    }
  std::vector<ElementSet> out;
  const std::size_t r = basis.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
    std::size_t pivot = 0;
    while (!(mask >> pivot & 1))
      ++pivot;
    ElementSet gens = base;
    for (std::size_t i = 0; i < r; ++i) {
      if (!(mask >> i & 1))
        gens.set(basis[i]);
      else if (i != pivot)
        gens.set(g.mul(basis[i], basis[pivot]));
    }
    out.push_back(g.generate(gens));
  }
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

template <class E> std::vector<ElementSet> index2_kernels(const FiniteGroup<E> &g) {
  return index2_kernels(g, g.all());
}

/// N_G(H)/H, recognized by fingerprint.
template <class E> Recognition normalizer_quotient(const FiniteGroup<E> &g, const ElementSet &h) {
  auto n = g.normalizer(h);
  return recognize(quotient(g, n, h).group);
}

} // namespace sgb
