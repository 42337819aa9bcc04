#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace sgb {

/// Ambient compact Lie groups with a shipped block table.
enum class AmbientGroup { SO2, O2, SO3, Sp1, SU2xSU2, SU3, Sp2 };

inline constexpr AmbientGroup kAllAmbientGroups[] = {AmbientGroup::SO2, AmbientGroup::O2,      AmbientGroup::SO3,
                                                     AmbientGroup::Sp1, AmbientGroup::SU2xSU2, AmbientGroup::SU3,
                                                     AmbientGroup::Sp2};

inline std::string to_string(AmbientGroup g) {
  switch (g) {
  case AmbientGroup::SO2: return "SO2";
  case AmbientGroup::O2: return "O2";
  case AmbientGroup::SO3: return "SO3";
  case AmbientGroup::Sp1: return "Sp1";
  case AmbientGroup::SU2xSU2: return "SU2xSU2";
  case AmbientGroup::SU3: return "SU3";
  case AmbientGroup::Sp2: return "Sp2";
  }
  return "?";
}

inline AmbientGroup parse_ambient_group(std::string_view s) {
  for (auto g : kAllAmbientGroups)
    if (to_string(g) == s)
      return g;
  throw InvalidInput("unknown group: " + std::string(s));
}

inline std::size_t ambient_rank(AmbientGroup g) {
  switch (g) {
  case AmbientGroup::SU2xSU2:
  case AmbientGroup::SU3:
  case AmbientGroup::Sp2: return 2;
  default: return 1;
  }
}

/// How the Weyl group of H_e acts on Lambda_0 = H_1 of its central torus.
/// "sign": the C_2 factor of the Weyl type acts by -1; "trivial": everything acts trivially.
struct Lambda0Template {
  std::size_t dim = 0;
  std::string action = "trivial";
};

struct ConnectedSubgroupDescriptor {
  std::string name;
  std::size_t rank = 0;
  std::size_t dim = 0;
  std::string ambient;
  /// A finite group name, or one of Sp(1), Sp(1)xC_2, SO(3), U(1), C_2-finite.
  std::string weyl_of_He;
  Lambda0Template lambda0;
  bool maximal_torus = false;
  std::string provenance;

  friend bool operator==(const ConnectedSubgroupDescriptor &, const ConnectedSubgroupDescriptor &) = default;
};

struct StaticRow {
  std::string ambient;
  std::string h_d;
  std::size_t order = 0;
  std::string weyl;
  bool placeholder = false;
};

struct CuratedData {
  std::string schema_version;
  /// ambient -> reflection-subgroup label -> name of H_e
  std::map<std::string, std::map<std::string, std::string>> maximal_rank_names;
  std::vector<ConnectedSubgroupDescriptor> descriptors;
  std::vector<StaticRow> rank0_rows;

  std::vector<ConnectedSubgroupDescriptor> descriptors_for(AmbientGroup g) const {
    std::vector<ConnectedSubgroupDescriptor> out;
    for (const auto &d : descriptors)
      if (d.ambient == to_string(g))
        out.push_back(d);
    return out;
  }

  std::vector<StaticRow> rank0_for(AmbientGroup g) const {
    std::vector<StaticRow> out;
    for (const auto &r : rank0_rows)
      if (r.ambient == to_string(g))
        out.push_back(r);
    return out;
  }

  std::string maximal_rank_name(AmbientGroup g, const std::string &reflection_label) const {
    auto it = maximal_rank_names.find(to_string(g));
    if (it == maximal_rank_names.end())
      return reflection_label;
    auto jt = it->second.find(reflection_label);
    return jt == it->second.end() ? reflection_label : jt->second;
  }
};

inline const std::vector<std::string> &infinite_weyl_types() {
  static const std::vector<std::string> types{"Sp(1)", "Sp(1)xC_2", "SO(3)", "U(1)", "C_2-finite"};
  return types;
}

inline CuratedData parse_curated_data(const nlohmann::json &j) {
  CuratedData data;
  try {
    data.schema_version = j.at("schema_version").get<std::string>();
    for (const auto &[ambient, names] : j.at("maximal_rank").items())
      for (const auto &[label, name] : names.items())
        data.maximal_rank_names[ambient][label] = name.get<std::string>();
    for (const auto &d : j.at("descriptors")) {
      ConnectedSubgroupDescriptor c;
      c.ambient = d.at("ambient").get<std::string>();
      c.name = d.at("name").get<std::string>();
      c.rank = d.at("rank").get<std::size_t>();
      c.dim = d.at("dim").get<std::size_t>();
      c.weyl_of_He = d.at("weyl_of_He").get<std::string>();
      c.lambda0.dim = d.at("lambda0").at("dim").get<std::size_t>();
      c.lambda0.action = d.at("lambda0").value("action", "trivial");
      c.maximal_torus = d.value("maximal_torus", false);
      c.provenance = d.value("provenance", "");
      parse_ambient_group(c.ambient);
      if (c.rank > ambient_rank(parse_ambient_group(c.ambient)) || c.lambda0.dim > c.rank)
        throw InvalidInput("descriptor " + c.name + " violates rank bounds");
      if (c.lambda0.action != "trivial" && c.lambda0.action != "sign")
        throw InvalidInput("descriptor " + c.name + " has unknown lambda0 action");
      data.descriptors.push_back(std::move(c));
    }
    for (const auto &r : j.at("rank0_rows")) {
      StaticRow s;
      s.ambient = r.at("ambient").get<std::string>();
      s.h_d = r.at("h_d").get<std::string>();
      s.order = r.at("order").get<std::size_t>();
      s.weyl = r.at("weyl").get<std::string>();
      s.placeholder = r.value("placeholder", false);
      data.rank0_rows.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception &e) {
    throw InvalidInput(std::string("malformed descriptor data: ") + e.what());
  }
  return data;
}

inline std::string_view embedded_curated_json() {
  static constexpr const char text[] =
#include "sgblocks/curated_data.inc"
      ;
  return text;
}

/// The descriptor file shipped with the library (compiled in).
inline const CuratedData &default_curated_data() {
  static const CuratedData data = parse_curated_data(nlohmann::json::parse(embedded_curated_json()));
  return data;
}

} // namespace sgb
