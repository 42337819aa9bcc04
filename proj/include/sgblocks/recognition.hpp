#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "group_ops.hpp"
#include "quaternion.hpp"

namespace sgb {

/// Isomorphism invariants used to name small groups.
struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = true;
  std::size_t exponent = 1;
  std::map<std::size_t, std::size_t> order_histogram;
  std::size_t derived_order = 1;

  friend bool operator==(const GroupFingerprint &, const GroupFingerprint &) = default;
};

template <class E>
GroupFingerprint fingerprint(const FiniteGroup<E> &g, const ElementSet &h) {
  GroupFingerprint fp;
  for (auto x : members(h)) {
    ++fp.order;
    auto o = g.element_order(x);
    ++fp.order_histogram[o];
    fp.exponent = std::lcm(fp.exponent, o);
  }
  fp.abelian = g.is_abelian(h);
  fp.derived_order = g.commutator_subgroup(h).count();
  return fp;
}

template <class E> GroupFingerprint fingerprint(const FiniteGroup<E> &g) {
  return fingerprint(g, g.all());
}

namespace detail {

inline std::size_t euler_phi(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1)
      ++count;
  return count;
}

} // namespace detail

inline GroupFingerprint cyclic_fingerprint(std::size_t n) {
  GroupFingerprint fp;
  fp.order = n;
  fp.exponent = n;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0)
      fp.order_histogram[d] = detail::euler_phi(d);
  return fp;
}

/// Dihedral group of order 2m (m >= 2): m rotations and m reflections.
inline GroupFingerprint dihedral_fingerprint(std::size_t m) {
  GroupFingerprint fp = cyclic_fingerprint(m);
  fp.order = 2 * m;
  fp.order_histogram[2] += m;
  fp.exponent = std::lcm(m, std::size_t{2});
  fp.abelian = m <= 2;
  fp.derived_order = m % 2 == 1 ? m : m / 2;
  return fp;
}

inline PermGroup cyclic_perm_group(std::size_t n) {
  if (n == 1)
    return PermGroup(Permutation::identity(1), {});
  std::vector<Permutation::point_type> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Permutation::point_type{0});
  return PermGroup(Permutation::identity(n), {Permutation::from_cycles(n, {cycle})});
}

/// Dihedral group of order 2m acting on the m-gon (m >= 3), or on 4 points for m = 2.
inline PermGroup dihedral_perm_group(std::size_t m) {
  if (m == 1)
    return cyclic_perm_group(2);
  if (m == 2)
    return PermGroup(Permutation::identity(4),
                     {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                      Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  std::vector<Permutation::point_type> rot(m), refl(m);
  for (std::size_t i = 0; i < m; ++i) {
    rot[i] = static_cast<Permutation::point_type>((i + 1) % m);
    refl[i] = static_cast<Permutation::point_type>((m - i) % m);
  }
  return PermGroup(Permutation::identity(m), {Permutation(rot), Permutation(refl)});
}

namespace detail {

inline PermGroup alternating_or_symmetric(std::size_t n, bool alternating) {
  std::vector<Permutation> gens;
  if (alternating) {
    for (std::size_t i = 2; i < n; ++i)
      gens.push_back(Permutation::from_cycles(n, {{0, 1, static_cast<Permutation::point_type>(i)}}));
  } else {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<Permutation::point_type> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Permutation::point_type{0});
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup(Permutation::identity(n), gens);
}

template <class A, class B> PermGroup product_as_perm(const FiniteGroup<A> &a, const FiniteGroup<B> &b) {
  return regular_representation(direct_product(a, b));
}

inline std::size_t parse_count(std::string_view s) {
  std::size_t v = 0;
  if (s.empty())
    throw InvalidInput("missing group parameter");
  for (char ch : s) {
    if (ch < '0' || ch > '9')
      throw InvalidInput("bad group parameter: " + std::string(s));
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

inline PermGroup model_factor(std::string_view name) {
  if (name == "1")
    return cyclic_perm_group(1);
  if (name.starts_with("C_"))
    return cyclic_perm_group(parse_count(name.substr(2)));
  if (name.starts_with("D_")) {
    auto ord = parse_count(name.substr(2));
    if (ord % 2 != 0 || ord < 2)
      throw InvalidInput("dihedral order must be even: " + std::string(name));
    return dihedral_perm_group(ord / 2);
  }
  if (name == "Q_8" || name == "Q8")
    return regular_representation(quaternion_group());
  if (name == "Q_16")
    return regular_representation(binary_dihedral16());
  if (name == "2A4")
    return regular_representation(binary_tetrahedral());
  if (name == "2S4")
    return regular_representation(binary_octahedral());
  if (name == "2A5")
    return regular_representation(binary_icosahedral());
  if (name == "A_4" || name == "A4")
    return alternating_or_symmetric(4, true);
  if (name == "S_4" || name == "S4")
    return alternating_or_symmetric(4, false);
  if (name == "A_5" || name == "A5")
    return alternating_or_symmetric(5, true);
  throw InvalidInput("no model for group name: " + std::string(name));
}

} // namespace detail

/// Builds a concrete group for a name such as "C_4", "D_8", "Q_8", "2S4" or a
/// product "D_6xC_2". Dihedral names give the order, so "D_4" is the Klein group.
inline PermGroup model_group(std::string_view name) {
  std::vector<std::string_view> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i)
    if (i == name.size() || name[i] == 'x') {
      factors.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  PermGroup g = detail::model_factor(factors.front());
  for (std::size_t f = 1; f < factors.size(); ++f)
    g = detail::product_as_perm(g, detail::model_factor(factors[f]));
  return g;
}

struct Recognition {
  std::string name; // "unknown" when no unique match
  GroupFingerprint fingerprint;
  bool known = false;
};

namespace detail {

struct NamedFingerprint {
  std::string name;
  GroupFingerprint fp;
};

/// Named groups outside the cyclic and dihedral families.
inline const std::vector<NamedFingerprint> &named_table() {
  static const std::vector<NamedFingerprint> table = [] {
    std::vector<NamedFingerprint> t;
    for (const char *n : {"Q_8", "C_2xC_2xC_2", "C_4xC_2", "Q_16", "A_4", "2A4", "S_4", "2S4",
                          "A_5", "2A5"})
      t.push_back({n, fingerprint(model_group(n))});
    return t;
  }();
  return table;
}

} // namespace detail

inline Recognition recognize(const GroupFingerprint &fp) {
  std::vector<std::string> hits;
  if (fp == cyclic_fingerprint(fp.order))
    hits.push_back(fp.order == 1 ? "1" : "C_" + std::to_string(fp.order));
  if (fp.order >= 4 && fp.order % 2 == 0 && fp == dihedral_fingerprint(fp.order / 2))
    hits.push_back(fp.order == 12 ? "D_6xC_2" : "D_" + std::to_string(fp.order));
  for (const auto &entry : detail::named_table())
    if (entry.fp == fp)
      hits.push_back(entry.name);
  if (hits.size() != 1)
    return Recognition{"unknown", fp, false};
  return Recognition{hits.front(), fp, true};
}

template <class E> Recognition recognize(const FiniteGroup<E> &g, const ElementSet &h) {
  return recognize(fingerprint(g, h));
}

template <class E> Recognition recognize(const FiniteGroup<E> &g) { return recognize(g, g.all()); }

/// True when the fingerprint matches the model built for `name` (e.g. "D_6xC_2").
inline bool matches_name(const GroupFingerprint &fp, std::string_view name) {
  return fp == fingerprint(model_group(name));
}

} // namespace sgb
