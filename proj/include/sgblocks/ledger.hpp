#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "block_enumerator.hpp"
#include "lemma_counting.hpp"

namespace sgb {

/// A place where a value computed here differs from the published tables.
struct LedgerEntry {
  std::string group;
  std::string location;
  std::string quantity;
  std::string reference_value;
  std::string computed_value;
  std::string note;

  friend bool operator==(const LedgerEntry &, const LedgerEntry &) = default;
};

inline const std::string kLemmaGroup = "Sp(1)xC_2";

namespace detail {

inline std::optional<DominantRecord> find_row(const BlockTable &t, std::string_view h_e, std::string_view h_d) {
  for (const auto &r : t.rows)
    if (r.h_e.name == h_e && r.h_d == h_d)
      return r;
  return std::nullopt;
}

inline std::string profile_string(const DecompositionProfile &p) {
  return std::to_string(p.a) + "+" + std::to_string(p.b);
}

inline void family_weyl_entries(const BlockTable &t, std::vector<LedgerEntry> &out, const std::string &table) {
  for (const auto &r : t.rows)
    if (!r.family.empty())
      out.push_back({t.group, table + ", row (" + r.h_e.name + ", " + r.h_d + ")", "Weyl group",
                     "pointer to the counting lemma", r.weyl,
                     "the table names no groups; the computed list gives N/S per base group"});
}

} // namespace detail

inline std::vector<LedgerEntry> ledger_for(AmbientGroup g) {
  std::vector<LedgerEntry> out;
  if (ambient_rank(g) == 1)
    return out;
  const auto table = assemble_table(g);
  switch (g) {
  case AmbientGroup::SU2xSU2: {
    if (auto r = detail::find_row(table, "T^2", "D_4"); r && detail::profile_string(r->profile) != "0+1")
      out.push_back({table.group, "A1xA1 working table, row (T^2, D_4)", "block dimension a+b", "0+1",
                     detail::profile_string(r->profile),
                     "the final SU(2)xSU(2) table lists 0+2; the two reflections give distinct sign characters"});
    for (const char *h_e : {"1xSU(2)", "SU(2)x1"})
      for (const char *h_d : {"2A5", "2S4", "2A4", "Q8"})
        if (auto r = detail::find_row(table, h_e, h_d); r && r->weyl != "1")
          out.push_back({table.group, std::string("SU(2)xSU(2) final table, row (") + h_e + ", " + h_d + ")",
                         "Weyl group", "1", r->weyl,
                         "normalizer is N_Sp(1)(F) x SU(2); the Sp(2) table lists the same quotient"});
    detail::family_weyl_entries(table, out, "SU(2)xSU(2) final table");
    break;
  }
  case AmbientGroup::SU3: {
    const auto *rank2 = table.summary().rank(2);
    if (rank2 && rank2->split() != "t1 m2 f0")
      out.push_back({table.group, "SU(3) summary, rank 2", "toral/mixed/flat split of 2-dim blocks", "t1 m2 f0",
                     rank2->split(), "the stated split does not sum to the two 2-dim blocks in the table"});
    break;
  }
  case AmbientGroup::Sp2: {
    if (auto r = detail::find_row(table, "T_long", "Fx1"); r && r->model != "gqwf")
      out.push_back({table.group, "Sp(2) final table, row (T_long, 1xF)", "model label", "gqwf", r->model,
                     "the row has dimension 1+0, a cotoral line; the matching T_short row uses gq1"});
    detail::family_weyl_entries(table, out, "Sp(2) final table");
    break;
  }
  default: break;
  }
  return out;
}

/// Entries about the classification of finite subgroups of Sp(1) x C_2.
inline std::vector<LedgerEntry> lemma_ledger() {
  std::vector<LedgerEntry> out;
  std::string computed;
  for (const auto &c : lemma_counting_oracle())
    if (c.type == LiftType::Graph)
      computed += (computed.empty() ? "" : ", ") + c.base + ": " + c.weyl;
  if (computed != "2S4: 1, Q8: D_6")
    out.push_back({kLemmaGroup, "counting lemma, graph-type subgroups", "Weyl groups", "2S4: 1, Q8: D_6", computed,
                   "(1,-1) is central and lies outside every graph subgroup, so each Weyl group has even order"});
  auto q8 = lemma_counting_oracle("Q8");
  auto graph = std::find_if(q8.begin(), q8.end(), [](const LiftClass &c) { return c.type == LiftType::Graph; });
  if (graph != q8.end()) {
    auto kernels = index2_kernels(model_group("Q_8")).size();
    out.push_back({kLemmaGroup, "counting lemma proof, Q8 graph subgroups", "graph subgroups over Q8",
                   "one image for all three surjections to C_2",
                   std::to_string(kernels) + " distinct subgroups, " + std::to_string(graph->class_size) +
                       " conjugates forming 1 class",
                   "read as conjugacy, not equality"});
  }
  return out;
}

/// Every discrepancy, or only those for one group.
inline std::vector<LedgerEntry> discrepancy_ledger(std::optional<AmbientGroup> g = std::nullopt) {
  if (g)
    return ledger_for(*g);
  std::vector<LedgerEntry> out;
  for (auto a : kAllAmbientGroups) {
    auto part = ledger_for(a);
    out.insert(out.end(), part.begin(), part.end());
  }
  auto lemma = lemma_ledger();
  out.insert(out.end(), lemma.begin(), lemma.end());
  return out;
}

} // namespace sgb
