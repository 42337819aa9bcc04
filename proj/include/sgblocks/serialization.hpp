#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "block_table.hpp"
#include "ledger.hpp"
#include "spectral_model.hpp"

namespace sgb {

inline const std::string kSchemaVersion = "1.0";

using nlohmann::json;

inline std::string to_string(SummandKind k) {
  switch (k) {
  case SummandKind::Trivial: return "trivial";
  case SummandKind::Sign: return "sign character";
  case SummandKind::Simple2: return "2-dim simple";
  }
  return "?";
}

inline SummandKind parse_summand_kind(std::string_view s) {
  for (auto k : {SummandKind::Trivial, SummandKind::Sign, SummandKind::Simple2})
    if (to_string(k) == s)
      return k;
  throw InvalidInput("unknown summand kind: " + std::string(s));
}

inline json to_json(const ConnectedSubgroupDescriptor &d) {
  return {{"name", d.name},
          {"rank", d.rank},
          {"dim", d.dim},
          {"ambient", d.ambient},
          {"weyl_of_He", d.weyl_of_He},
          {"lambda0", {{"dim", d.lambda0.dim}, {"action", d.lambda0.action}}},
          {"maximal_torus", d.maximal_torus},
          {"provenance", d.provenance}};
}

inline json to_json(const DecompositionProfile &p) {
  json summands = json::array();
  for (const auto &s : p.summands)
    summands.push_back({{"kind", to_string(s.kind)}, {"dim", s.dim}, {"character", s.character}});
  return {{"a", p.a}, {"b", p.b}, {"summands", summands}};
}

inline json to_json(const DominantRecord &r) {
  json family = json::array();
  for (const auto &m : r.family)
    family.push_back({{"h_d", m.h_d}, {"order", m.order}, {"weyl", m.weyl}});
  return {{"rank", r.rank()},
          {"h_e", to_json(r.h_e)},
          {"reflection_subgroup", r.reflection_subgroup},
          {"h_d", r.h_d},
          {"h_d_order", r.h_d_order},
          {"multiplicity", r.multiplicity},
          {"weyl", r.weyl},
          {"family", family},
          {"profile", to_json(r.profile)},
          {"dimension", r.dimension()},
          {"kind", to_string(r.kind)},
          {"model", r.model},
          {"placeholder", r.placeholder}};
}

inline json to_json(const LedgerEntry &e) {
  return {{"group", e.group},
          {"location", e.location},
          {"quantity", e.quantity},
          {"reference_value", e.reference_value},
          {"computed_value", e.computed_value},
          {"note", e.note}};
}

inline json summary_json(const BlockTable &t) {
  auto s = t.summary();
  json ranks = json::array();
  for (const auto &r : s.ranks) {
    json rows = json::object(), classes = json::object();
    for (auto [d, c] : r.rows_by_dim)
      rows[std::to_string(d)] = c;
    for (auto [d, c] : r.classes_by_dim)
      classes[std::to_string(d)] = c;
    json entry = {{"rank", r.rank}, {"notation", r.notation()}, {"rows_by_dim", rows}, {"classes_by_dim", classes}};
    if (r.has_split)
      entry["split"] = {{"toral", r.toral}, {"mixed", r.mixed}, {"flat", r.flat}};
    ranks.push_back(entry);
  }
  return {{"line", s.line()}, {"ranks", ranks}};
}

inline json to_json(const BlockTable &t, const std::optional<std::vector<LedgerEntry>> &ledger = std::nullopt) {
  json rows = json::array();
  for (const auto &r : t.rows)
    rows.push_back(to_json(r));
  json doc = {{"schema_version", kSchemaVersion}, {"group", t.group}, {"rows", rows}, {"summary", summary_json(t)}};
  if (ledger) {
    json l = json::array();
    for (const auto &e : *ledger)
      l.push_back(to_json(e));
    doc["ledger"] = l;
  }
  return doc;
}

inline ConnectedSubgroupDescriptor descriptor_from_json(const json &j) {
  ConnectedSubgroupDescriptor d;
  d.name = j.at("name").get<std::string>();
  d.rank = j.at("rank").get<std::size_t>();
  d.dim = j.at("dim").get<std::size_t>();
  d.ambient = j.at("ambient").get<std::string>();
  d.weyl_of_He = j.at("weyl_of_He").get<std::string>();
  d.lambda0.dim = j.at("lambda0").at("dim").get<std::size_t>();
  d.lambda0.action = j.at("lambda0").at("action").get<std::string>();
  d.maximal_torus = j.at("maximal_torus").get<bool>();
  d.provenance = j.at("provenance").get<std::string>();
  return d;
}

inline DominantRecord record_from_json(const json &j) {
  DominantRecord r;
  r.h_e = descriptor_from_json(j.at("h_e"));
  r.reflection_subgroup = j.at("reflection_subgroup").get<std::string>();
  r.h_d = j.at("h_d").get<std::string>();
  r.h_d_order = j.at("h_d_order").get<std::size_t>();
  r.multiplicity = j.at("multiplicity").get<std::size_t>();
  r.weyl = j.at("weyl").get<std::string>();
  for (const auto &m : j.at("family"))
    r.family.push_back({m.at("h_d").get<std::string>(), m.at("order").get<std::size_t>(), m.at("weyl").get<std::string>()});
  const auto &p = j.at("profile");
  r.profile.a = p.at("a").get<std::size_t>();
  r.profile.b = p.at("b").get<std::size_t>();
  for (const auto &s : p.at("summands"))
    r.profile.summands.push_back({parse_summand_kind(s.at("kind").get<std::string>()), s.at("dim").get<std::size_t>(),
                                  s.at("character").get<std::vector<int>>()});
  r.kind = parse_block_kind(j.at("kind").get<std::string>());
  r.model = j.at("model").get<std::string>();
  r.placeholder = j.at("placeholder").get<bool>();
  return r;
}

struct OutputDocument {
  std::string schema_version;
  BlockTable table;
  std::optional<std::vector<LedgerEntry>> ledger;
};

inline OutputDocument from_json(const json &j) {
  OutputDocument doc;
  try {
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.table.group = j.at("group").get<std::string>();
    for (const auto &r : j.at("rows"))
      doc.table.rows.push_back(record_from_json(r));
    if (j.contains("ledger")) {
      doc.ledger.emplace();
      for (const auto &e : j.at("ledger"))
        doc.ledger->push_back({e.at("group"), e.at("location"), e.at("quantity"), e.at("reference_value"),
                               e.at("computed_value"), e.at("note")});
    }
  } catch (const json::exception &e) {
    throw InvalidInput(std::string("malformed block table document: ") + e.what());
  }
  return doc;
}

namespace detail {

inline std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string row_label(const DominantRecord &r) {
  std::string s = "(" + r.h_e.name + ", " + r.h_d + ")";
  if (!r.reflection_subgroup.empty() && r.h_e.name != "T^2")
    s += " " + r.reflection_subgroup;
  if (r.multiplicity != 1)
    s += "[" + std::to_string(r.multiplicity) + "]";
  return s;
}

} // namespace detail

inline std::string to_csv(const BlockTable &t) {
  std::ostringstream os;
  os << "rank,h_e,reflection_subgroup,h_d,multiplicity,a,b,dimension,weyl,kind,model,placeholder\n";
  for (const auto &r : t.rows)
    os << r.rank() << ',' << detail::csv_field(r.h_e.name) << ',' << detail::csv_field(r.reflection_subgroup) << ','
       << detail::csv_field(r.h_d) << ',' << r.multiplicity << ',' << r.profile.a << ',' << r.profile.b << ','
       << r.dimension() << ',' << detail::csv_field(r.weyl) << ',' << to_string(r.kind) << ',' << r.model << ','
       << (r.placeholder ? "true" : "false") << '\n';
  return os.str();
}

inline std::string to_text_table(const BlockTable &t) {
  std::vector<std::vector<std::string>> cells{{"rk", "(H_e, H_d)", "dim", "W_G(H)", "kind", "model"}};
  for (const auto &r : t.rows) {
    std::string dim = r.dimension() == 0 ? "0" : std::to_string(r.profile.a) + "+" + std::to_string(r.profile.b);
    cells.push_back({std::to_string(r.rank()), detail::row_label(r), dim, r.weyl, to_string(r.kind), r.model});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto &row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  os << t.group << '\n';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i == 1 || (i > 1 && t.rows[i - 1].rank() != t.rows[i - 2].rank())) {
      std::size_t total = 0;
      for (auto w : width)
        total += w + 2;
      os << std::string(total - 2, '-') << '\n';
    }
    for (std::size_t c = 0; c + 1 < cells[i].size(); ++c)
      os << std::left << std::setw(static_cast<int>(width[c])) << cells[i][c] << "  ";
    os << cells[i].back() << '\n';
  }
  os << "Summary: " << t.summary().line() << '\n';
  return os.str();
}

inline std::string ledger_text(const std::vector<LedgerEntry> &entries) {
  std::ostringstream os;
  os << "group\tlocation\tquantity\treference\tcomputed\tnote\n";
  for (const auto &e : entries)
    os << e.group << '\t' << e.location << '\t' << e.quantity << '\t' << e.reference_value << '\t'
       << e.computed_value << '\t' << e.note << '\n';
  return os.str();
}

} // namespace sgb
