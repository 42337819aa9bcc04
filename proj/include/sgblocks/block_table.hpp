#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "descriptors.hpp"
#include "rational_rep.hpp"

namespace sgb {

enum class BlockKind { Discrete, CotoralLine, WeylFinite, Mixed, Toral };

inline std::string to_string(BlockKind k) {
  switch (k) {
  case BlockKind::Discrete: return "discrete";
  case BlockKind::CotoralLine: return "cotoral_line";
  case BlockKind::WeylFinite: return "weyl_finite";
  case BlockKind::Mixed: return "mixed";
  case BlockKind::Toral: return "toral";
  }
  return "?";
}

inline BlockKind parse_block_kind(std::string_view s) {
  for (auto k : {BlockKind::Discrete, BlockKind::CotoralLine, BlockKind::WeylFinite, BlockKind::Mixed, BlockKind::Toral})
    if (to_string(k) == s)
      return k;
  throw InvalidInput("unknown block kind: " + std::string(s));
}

inline std::string model_label(BlockKind k) {
  switch (k) {
  case BlockKind::Discrete: return "Discrete";
  case BlockKind::CotoralLine: return "gq1";
  case BlockKind::WeylFinite: return "gqwf";
  case BlockKind::Mixed: return "mixed";
  case BlockKind::Toral: return "gqtoral";
  }
  return "?";
}

/// (a, b) together with H_e determine the block kind.
inline BlockKind classify_block_kind(const DecompositionProfile &p, const ConnectedSubgroupDescriptor &h_e) {
  if (p.a == 0 && p.b == 0)
    return BlockKind::Discrete;
  if (p.a == 1 && p.b == 0)
    return BlockKind::CotoralLine;
  if (p.a == 0)
    return BlockKind::WeylFinite;
  if (p.b > 0)
    return BlockKind::Mixed;
  if (h_e.maximal_torus && p.a == ambient_rank(parse_ambient_group(h_e.ambient)))
    return BlockKind::Toral;
  throw ClassificationError("profile (" + std::to_string(p.a) + ",0) on " + h_e.name + " is not a maximal torus");
}

/// One member of a family row such as (T_long, Fx1)[4].
struct FamilyMember {
  std::string h_d;
  std::size_t order = 0;
  std::string weyl;

  friend bool operator==(const FamilyMember &, const FamilyMember &) = default;
};

struct DominantRecord {
  ConnectedSubgroupDescriptor h_e;
  /// Reflection subgroup of W giving H_e (maximal-rank rows only).
  std::string reflection_subgroup;
  std::string h_d;
  /// |H_d|; for family rows the largest member, 0 for placeholders.
  std::size_t h_d_order = 0;
  std::size_t multiplicity = 1;
  std::string weyl;
  std::vector<FamilyMember> family;
  DecompositionProfile profile;
  BlockKind kind = BlockKind::Discrete;
  std::string model;
  bool placeholder = false;

  std::size_t rank() const { return h_e.rank; }
  std::size_t dimension() const { return profile.dimension(); }
};

/// Emission order: rank, then dimension of H_e, then |H_d|, all descending.
inline bool row_precedes(const DominantRecord &x, const DominantRecord &y) {
  if (x.rank() != y.rank())
    return x.rank() > y.rank();
  if (x.h_e.dim != y.h_e.dim)
    return x.h_e.dim > y.h_e.dim;
  return x.h_d_order > y.h_d_order;
}

inline void sort_rows(std::vector<DominantRecord> &rows) { std::stable_sort(rows.begin(), rows.end(), row_precedes); }

struct RankSummary {
  std::size_t rank = 0;
  std::map<std::size_t, std::size_t> rows_by_dim;
  std::map<std::size_t, std::size_t> classes_by_dim;
  bool has_split = false;
  std::size_t toral = 0, mixed = 0, flat = 0;

  /// e.g. "2^6 1^6 0^5"
  std::string notation() const {
    std::string s;
    for (auto it = rows_by_dim.rbegin(); it != rows_by_dim.rend(); ++it) {
      if (!s.empty())
        s += ' ';
      s += std::to_string(it->first) + "^" + std::to_string(it->second);
    }
    return s;
  }

  std::string split() const {
    return "t" + std::to_string(toral) + " m" + std::to_string(mixed) + " f" + std::to_string(flat);
  }
};

struct TableSummary {
  std::vector<RankSummary> ranks; // descending rank

  const RankSummary *rank(std::size_t r) const {
    for (const auto &s : ranks)
      if (s.rank == r)
        return &s;
    return nullptr;
  }

  /// e.g. "Rank 2: 2^6 1^6 0^5 (t1 m2 f3); Rank 1: 1^6 0^7"
  std::string line() const {
    std::string s;
    for (const auto &r : ranks) {
      if (!s.empty())
        s += "; ";
      s += "Rank " + std::to_string(r.rank) + ": " + r.notation();
      if (r.has_split)
        s += " (" + r.split() + ")";
    }
    return s;
  }
};

inline TableSummary summarize(const std::vector<DominantRecord> &rows) {
  std::map<std::size_t, RankSummary, std::greater<>> by_rank;
  for (const auto &row : rows) {
    if (row.placeholder)
      continue;
    auto &s = by_rank[row.rank()];
    s.rank = row.rank();
    s.has_split = s.rank == 2;
    s.rows_by_dim[row.dimension()] += 1;
    s.classes_by_dim[row.dimension()] += row.multiplicity;
    if (row.dimension() == 2) {
      if (row.kind == BlockKind::Toral)
        ++s.toral;
      else if (row.kind == BlockKind::Mixed)
        ++s.mixed;
      else
        ++s.flat;
    }
  }
  TableSummary out;
  for (auto &[r, s] : by_rank)
    out.ranks.push_back(std::move(s));
  return out;
}

struct BlockTable {
  std::string group;
  std::vector<DominantRecord> rows;

  TableSummary summary() const { return summarize(rows); }
};

} // namespace sgb
