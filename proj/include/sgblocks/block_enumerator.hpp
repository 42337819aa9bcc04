#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "block_table.hpp"
#include "descriptors.hpp"
#include "lemma_counting.hpp"
#include "quaternion.hpp"
#include "rational_rep.hpp"
#include "weyl_subgroups.hpp"

namespace sgb {

inline AmbientGroup ambient_for(RootType t) {
  switch (t) {
  case RootType::A1xA1: return AmbientGroup::SU2xSU2;
  case RootType::A2: return AmbientGroup::SU3;
  case RootType::C2: return AmbientGroup::Sp2;
  }
  throw InvalidInput("no ambient group for root type");
}

inline RootType root_type_for(AmbientGroup g) {
  switch (g) {
  case AmbientGroup::SU2xSU2: return RootType::A1xA1;
  case AmbientGroup::SU3: return RootType::A2;
  case AmbientGroup::Sp2: return RootType::C2;
  default: throw UnsupportedRank(to_string(g) + " has rank 1");
  }
}

inline DominantRecord finish_record(DominantRecord r) {
  r.kind = classify_block_kind(r.profile, r.h_e);
  r.model = model_label(r.kind);
  return r;
}

/// Blocks whose dominant subgroup has maximal rank: H_e is determined by a
/// reflection subgroup R of W and H_d runs over subgroups of N_W(R)/R.
inline std::vector<DominantRecord> maximal_rank_blocks(const RootDatum &rd,
                                                       const CuratedData &data = default_curated_data()) {
  const auto ambient = ambient_for(rd.type);
  const auto w = weyl_group(rd);
  std::vector<DominantRecord> out;
  for (const auto &r : reflection_subgroup_classes(rd, w)) {
    if (!r.is_reflection_group)
      continue;
    const auto fixed = fixed_sublattice(r, w);
    const auto &omega = fixed.omega.group;

    ConnectedSubgroupDescriptor h_e;
    h_e.name = data.maximal_rank_name(ambient, r.label);
    h_e.rank = 2;
    h_e.dim = 2 + 2 * reflection_roots(rd, w, r.representative).size();
    h_e.ambient = to_string(ambient);
    h_e.weyl_of_He = recognize(omega).name;
    h_e.lambda0 = {fixed.rank(), "trivial"};
    h_e.maximal_torus = r.order == 1;
    h_e.provenance = "reflection subgroup " + r.label + " of the Weyl group";

    for (const auto &hd : subgroup_classes(omega)) {
      std::vector<IntMatrix> images;
      for (auto x : members(hd.representative))
        images.push_back(fixed.action[x]);
      DominantRecord rec;
      rec.h_e = h_e;
      rec.reflection_subgroup = r.label;
      rec.h_d = r.order == 1 ? weyl_subgroup_label(rd, w, fixed.omega.preimage(hd.representative))
                             : recognize(omega, hd.representative).name;
      rec.h_d_order = hd.order;
      rec.weyl = normalizer_quotient(omega, hd.representative).name;
      rec.profile = decompose_profile(IntegralRep::from_images(fixed.rank(), images));
      out.push_back(finish_record(std::move(rec)));
    }
  }
  sort_rows(out);
  return out;
}

namespace detail {

inline IntegralRep lambda0_rep(const Lambda0Template &t, bool acts_nontrivially) {
  if (t.dim == 0)
    return IntegralRep{0, {IntMatrix(0)}};
  if (t.dim != 1)
    throw UnsupportedRank("curated lambda0 templates have dimension at most 1");
  if (t.action == "sign" && acts_nontrivially)
    return IntegralRep::from_images(1, {IntMatrix(1, {-1})});
  return IntegralRep::from_images(1, {});
}

inline const std::vector<LiftClass> &cached_lift_classes() {
  static const std::vector<LiftClass> classes = lemma_counting_oracle();
  return classes;
}

struct PolyhedralWeyl {
  std::string sp1_name, so3_name;
  std::size_t order;
  std::string weyl;
};

/// Finite subgroups of Sp(1) (and their images in SO(3)) not contained in a
/// circle normalizer, with Weyl groups N/F.
inline const std::vector<PolyhedralWeyl> &polyhedral_weyl() {
  static const std::vector<PolyhedralWeyl> table = [] {
    std::vector<PolyhedralWeyl> t;
    for (const auto &b : sp1_finite_family())
      t.push_back({b.name, b.so3_image, b.subgroup.count(), normalizer_quotient(b.normalizer, b.subgroup).name});
    return t;
  }();
  return table;
}

} // namespace detail

/// Expand one curated connected subgroup into its dominant rows.
inline std::vector<DominantRecord> expand_descriptor(const ConnectedSubgroupDescriptor &d) {
  std::vector<DominantRecord> out;
  auto base = [&] {
    DominantRecord r;
    r.h_e = d;
    return r;
  };
  const std::string &wt = d.weyl_of_He;
  if (wt == "U(1)")
    return out;
  if (wt == "Sp(1)" || wt == "SO(3)") {
    for (const auto &p : detail::polyhedral_weyl()) {
      auto r = base();
      r.h_d = wt == "Sp(1)" ? p.sp1_name : p.so3_name;
      r.h_d_order = wt == "Sp(1)" ? p.order : p.order / 2;
      r.weyl = p.weyl;
      r.profile = decompose_profile(detail::lambda0_rep(d.lambda0, false));
      out.push_back(finish_record(std::move(r)));
    }
  } else if (wt == "Sp(1)xC_2") {
    for (auto type : {LiftType::Trivial, LiftType::Graph, LiftType::Product}) {
      auto r = base();
      r.h_d = to_string(type);
      r.multiplicity = 0;
      std::string weyls;
      for (const auto &c : detail::cached_lift_classes()) {
        if (c.type != type)
          continue;
        r.family.push_back({c.base, c.order, c.weyl});
        r.h_d_order = std::max(r.h_d_order, c.order);
        ++r.multiplicity;
        weyls += (weyls.empty() ? "" : ", ") + c.base + ": " + c.weyl;
      }
      r.weyl = weyls;
      r.profile = decompose_profile(detail::lambda0_rep(d.lambda0, type != LiftType::Trivial));
      out.push_back(finish_record(std::move(r)));
    }
  } else if (wt == "C_2-finite") {
    for (bool full : {true, false}) {
      auto r = base();
      r.h_d = full ? "C_2" : "1";
      r.h_d_order = full ? 2 : 1;
      r.weyl = full ? "1" : "C_2";
      r.profile = decompose_profile(detail::lambda0_rep(d.lambda0, full));
      out.push_back(finish_record(std::move(r)));
    }
  } else {
    auto r = base();
    r.h_d = "1";
    r.h_d_order = 1;
    r.weyl = wt;
    r.profile = decompose_profile(detail::lambda0_rep(d.lambda0, false));
    out.push_back(finish_record(std::move(r)));
  }
  return out;
}

inline std::vector<DominantRecord> rank1_blocks(AmbientGroup g, const CuratedData &data = default_curated_data()) {
  if (ambient_rank(g) != 2)
    throw InvalidInput(to_string(g) + " is not a rank-2 group");
  std::vector<DominantRecord> out;
  for (const auto &d : data.descriptors_for(g)) {
    if (d.rank != 1)
      continue;
    auto rows = expand_descriptor(d);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  sort_rows(out);
  return out;
}

inline std::vector<DominantRecord> rank0_rows(AmbientGroup g, const CuratedData &data = default_curated_data()) {
  std::vector<DominantRecord> out;
  for (const auto &s : data.rank0_for(g)) {
    DominantRecord r;
    r.h_e.name = "1";
    r.h_e.ambient = to_string(g);
    r.h_e.weyl_of_He = to_string(g);
    r.h_e.provenance = "finite subgroup";
    r.h_d = s.h_d;
    r.h_d_order = s.order;
    r.weyl = s.weyl;
    r.placeholder = s.placeholder;
    r.profile = decompose_profile(IntegralRep{0, {IntMatrix(0)}});
    out.push_back(finish_record(std::move(r)));
  }
  sort_rows(out);
  return out;
}

inline BlockTable rank1_ambient_table(AmbientGroup g, const CuratedData &data = default_curated_data()) {
  if (ambient_rank(g) != 1)
    throw InvalidInput(to_string(g) + " is not a rank-1 group");
  BlockTable t{to_string(g), {}};
  for (const auto &d : data.descriptors_for(g)) {
    auto rows = expand_descriptor(d);
    t.rows.insert(t.rows.end(), rows.begin(), rows.end());
  }
  sort_rows(t.rows);
  return t;
}

inline BlockTable assemble_table(AmbientGroup g, const CuratedData &data = default_curated_data()) {
  if (ambient_rank(g) == 1)
    return rank1_ambient_table(g, data);
  BlockTable t{to_string(g), maximal_rank_blocks(build_root_datum(root_type_for(g)), data)};
  for (auto part : {rank1_blocks(g, data), rank0_rows(g, data)})
    t.rows.insert(t.rows.end(), part.begin(), part.end());
  sort_rows(t.rows);
  return t;
}

inline BlockTable assemble_table(std::string_view group) { return assemble_table(parse_ambient_group(group)); }

struct RegularLine {
  Vec2 direction;
  bool regular = false; // pairs nontrivially with every root
};

/// Lines L (primitive generator of height <= bound) on which every root takes
/// the values 0 or +-c for a single c.
inline std::vector<RegularLine> rank1_line_candidates(const RootDatum &rd, Int bound = 4) {
  std::vector<RegularLine> out;
  for (Int x = -bound; x <= bound; ++x)
    for (Int y = -bound; y <= bound; ++y) {
      Vec2 v{x, y};
      if ((x == 0 && y == 0) || primitive_line_rep(v) != v)
        continue;
      Int c = 0;
      bool ok = true, regular = true;
      for (auto alpha : rd.roots) {
        Int value = std::abs(rd.form(alpha, v));
        if (value == 0) {
          regular = false;
          continue;
        }
        if (c == 0)
          c = value;
        ok = ok && value == c;
      }
      if (ok)
        out.push_back({v, regular});
    }
  return out;
}

struct RegularCheck {
  std::vector<Vec2> lines;
  /// W-orbits of the regular lines (as indices into `lines`).
  std::vector<std::vector<std::size_t>> classes;
};

/// Regular lines passing the rank-1 dominance criterion, grouped up to W.
inline RegularCheck regular_rank1_check(const RootDatum &rd) {
  RegularCheck out;
  for (const auto &c : rank1_line_candidates(rd))
    if (c.regular)
      out.lines.push_back(c.direction);
  const auto w = weyl_group(rd);
  std::vector<bool> seen(out.lines.size(), false);
  for (std::size_t i = 0; i < out.lines.size(); ++i) {
    if (seen[i])
      continue;
    std::vector<std::size_t> orbit;
    for (std::size_t j = i; j < out.lines.size(); ++j)
      for (const auto &g : w.elements())
        if (!seen[j] && primitive_line_rep(g * out.lines[i]) == out.lines[j]) {
          seen[j] = true;
          orbit.push_back(j);
        }
    out.classes.push_back(std::move(orbit));
  }
  return out;
}

} // namespace sgb
