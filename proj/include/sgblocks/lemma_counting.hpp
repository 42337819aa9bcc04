#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "subgroup_lattice.hpp"

namespace sgb {

/// How a finite subgroup S of Sp(1) x C_2 with full projection F sits over F.
enum class LiftType {
  Trivial, ///< F x 1
  Graph,   ///< graph of a surjection F -> C_2
  Product, ///< F x C_2
};

inline std::string to_string(LiftType t) {
  switch (t) {
  case LiftType::Trivial: return "Fx1";
  case LiftType::Graph: return "F^-";
  case LiftType::Product: return "FxC_2";
  }
  return "?";
}

struct LiftClass {
  std::string base;  // 2A5, 2S4, 2A4, Q8
  LiftType type;
  std::size_t order = 0;
  std::size_t class_size = 0; // conjugates under N x C_2
  std::string weyl;           // N_{N x C_2}(S) / S
  GroupFingerprint weyl_fingerprint;
};

/// Finite subgroups of Sp(1) x C_2 projecting onto `base`, up to conjugacy by N x C_2
/// where N is the Sp(1)-normalizer of the base group.
inline std::vector<LiftClass> lemma_counting_oracle(std::string_view base) {
  auto family = sp1_finite_family();
  auto it = std::find_if(family.begin(), family.end(), [&](const auto &b) { return b.name == base; });
  if (it == family.end())
    throw InvalidInput("unknown base group: " + std::string(base));

  const QuaternionGroup &n = it->normalizer;
  const FiniteGroup<Sign> c2(Sign{1}, {Sign{-1}});
  const auto ambient = direct_product(n, c2);

  ElementSet over_f;   // F x C_2
  ElementSet central;  // (1, -1)
  for (std::size_t x = 0; x < ambient.order(); ++x) {
    const auto &e = ambient.element(x);
    if (it->subgroup.test(n.index_of(e.first)))
      over_f.set(x);
    if (e.first == n.element(0) && e.second.value == -1)
      central.set(x);
  }

  std::vector<LiftClass> out;
  for (const auto &cls : subgroup_classes(ambient)) {
    const auto &s = cls.representative;
    if (!is_subset(s, over_f))
      continue;
    ElementSet proj;
    bool all_plus = true;
    for (auto x : members(s)) {
      proj.set(n.index_of(ambient.element(x).first));
      all_plus = all_plus && ambient.element(x).second.value == 1;
    }
    if (proj != it->subgroup)
      continue;
    LiftClass lc;
    lc.base = it->name;
    lc.type = (s & central).any() ? LiftType::Product : all_plus ? LiftType::Trivial : LiftType::Graph;
    lc.order = cls.order;
    lc.class_size = cls.class_size;
    auto w = normalizer_quotient(ambient, s);
    lc.weyl = w.name;
    lc.weyl_fingerprint = w.fingerprint;
    out.push_back(std::move(lc));
  }
  std::stable_sort(out.begin(), out.end(), [](const LiftClass &a, const LiftClass &b) { return a.type < b.type; });
  return out;
}

/// All four bases, in the order 2A5, 2S4, 2A4, Q8.
inline std::vector<LiftClass> lemma_counting_oracle() {
  std::vector<LiftClass> out;
  for (const char *b : {"2A5", "2S4", "2A4", "Q8"}) {
    auto part = lemma_counting_oracle(b);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

} // namespace sgb
