#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "block_enumerator.hpp"
#include "ledger.hpp"
#include "lemma_counting.hpp"
#include "serialization.hpp"

namespace sgb::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2 };

inline const std::vector<std::string> &group_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (auto g : kAllAmbientGroups)
      v.push_back(to_string(g));
    return v;
  }();
  return names;
}

/// "D8", "D_8" or "C2" all name the Weyl group of type C2.
inline RootType weyl_type_from_name(std::string name) {
  name.erase(std::remove(name.begin(), name.end(), '_'), name.end());
  if (name == "D4" || name == "A1xA1")
    return RootType::A1xA1;
  if (name == "D6" || name == "A2")
    return RootType::A2;
  if (name == "D8" || name == "C2")
    return RootType::C2;
  throw InvalidInput("unknown Weyl group: " + name);
}

inline std::string compact(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  return s;
}

template <class F> int guarded(std::ostream &err, F &&body) {
  try {
    return body();
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
}

inline int cmd_classify(const std::string &group, const std::string &format, bool with_ledger, std::ostream &out,
                        std::ostream &err) {
  return guarded(err, [&] {
    const auto g = parse_ambient_group(group);
    const auto table = assemble_table(g);
    std::optional<std::vector<LedgerEntry>> ledger;
    if (with_ledger)
      ledger = discrepancy_ledger(g);
    if (format == "json") {
      out << to_json(table, ledger).dump(2) << '\n';
    } else if (format == "csv") {
      out << to_csv(table);
      if (ledger)
        out << '\n' << ledger_text(*ledger);
    } else if (format == "table") {
      out << to_text_table(table);
      if (ledger)
        out << "\nLedger\n" << ledger_text(*ledger);
    } else {
      throw InvalidInput("unknown format: " + format);
    }
    return int{kOk};
  });
}

inline int cmd_summary(const std::string &group, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    out << assemble_table(parse_ambient_group(group)).summary().line() << '\n';
    return int{kOk};
  });
}

inline int oracle_lemma_counting(std::ostream &out) {
  std::map<LiftType, std::size_t> split;
  const auto classes = lemma_counting_oracle();
  for (const auto &c : classes) {
    out << c.base << '\t' << to_string(c.type) << "\torder " << c.order << "\tconjugates " << c.class_size
        << "\tWeyl " << c.weyl << '\n';
    ++split[c.type];
  }
  out << "total " << classes.size() << " (Fx1 " << split[LiftType::Trivial] << ", F^- " << split[LiftType::Graph]
      << ", FxC_2 " << split[LiftType::Product] << ")\n";
  bool ok = classes.size() == 10 && split[LiftType::Trivial] == 4 && split[LiftType::Graph] == 2 &&
            split[LiftType::Product] == 4;
  return ok ? kOk : kInternal;
}

inline int oracle_weyl_subgroups(const std::string &name, std::ostream &out) {
  const auto rd = build_root_datum(weyl_type_from_name(name));
  const auto w = weyl_group(rd);
  const auto classes = reflection_subgroup_classes(rd, w);
  std::size_t reflection = 0;
  for (const auto &c : classes) {
    out << c.label << "\torder " << c.order << "\tconjugates " << c.conjugates.size()
        << (c.is_reflection_group ? "\treflection" : "") << '\n';
    reflection += c.is_reflection_group;
  }
  out << "classes " << classes.size() << ", reflection " << reflection << '\n';
  static const std::map<RootType, std::pair<std::size_t, std::size_t>> expected{
      {RootType::A1xA1, {5, 4}}, {RootType::A2, {4, 3}}, {RootType::C2, {8, 6}}};
  auto [n, r] = expected.at(rd.type);
  return classes.size() == n && reflection == r ? kOk : kInternal;
}

inline int oracle_rep_decompose(const std::string &name, const std::string &subgroup, std::ostream &out) {
  const auto rd = build_root_datum(weyl_type_from_name(name));
  const auto w = weyl_group(rd);
  for (const auto &c : reflection_subgroup_classes(rd, w)) {
    if (compact(c.label) != compact(subgroup))
      continue;
    std::vector<IntMatrix> images;
    for (auto x : members(c.representative))
      images.emplace_back(w.element(x));
    const auto p = decompose_profile(IntegralRep::from_images(2, images));
    out << "(" << p.a << "," << p.b << ")\n";
    for (const auto &s : p.summands)
      out << "  " << s.describe() << '\n';
    static const std::map<std::pair<RootType, std::string>, std::pair<std::size_t, std::size_t>> expected{
        {{RootType::C2, "1"}, {2, 0}},          {{RootType::C2, "X"}, {1, 1}},
        {{RootType::C2, "X'"}, {1, 1}},         {{RootType::C2, "C_2"}, {0, 2}},
        {{RootType::C2, "V"}, {0, 2}},          {{RootType::C2, "V'"}, {0, 2}},
        {{RootType::C2, "C_4"}, {0, 1}},        {{RootType::C2, "D_8"}, {0, 1}},
        {{RootType::A2, "1"}, {2, 0}},          {{RootType::A2, "C_2"}, {1, 1}},
        {{RootType::A2, "C_3"}, {0, 1}},        {{RootType::A2, "D_6"}, {0, 1}},
        {{RootType::A1xA1, "1"}, {2, 0}},       {{RootType::A1xA1, "C_2^x"}, {1, 1}},
        {{RootType::A1xA1, "C_2^y"}, {1, 1}},   {{RootType::A1xA1, "C_2^Delta"}, {0, 2}},
        {{RootType::A1xA1, "D_4"}, {0, 2}}};
    auto it = expected.find({rd.type, c.label});
    if (it != expected.end() && it->second != std::pair{p.a, p.b})
      return kInternal;
    return kOk;
  }
  throw InvalidInput("no subgroup class labelled " + subgroup + " in " + name);
}

inline int cmd_oracle(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  return guarded(err, [&]() -> int {
    if (args.empty())
      throw InvalidInput("oracle needs a subcommand: lemma-counting, weyl-subgroups <W>, rep-decompose <W> <H_d>");
    const auto &sub = args.front();
    if (sub == "lemma-counting" && args.size() == 1)
      return oracle_lemma_counting(out);
    if (sub == "weyl-subgroups" && args.size() == 2)
      return oracle_weyl_subgroups(args[1], out);
    if (sub == "rep-decompose" && args.size() == 3)
      return oracle_rep_decompose(args[1], args[2], out);
    throw InvalidInput("bad oracle invocation: " + sub);
  });
}

inline int cmd_paper_diff(const std::optional<std::string> &group, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    std::optional<AmbientGroup> g;
    if (group)
      g = parse_ambient_group(*group);
    out << ledger_text(discrepancy_ledger(g));
    return int{kOk};
  });
}

} // namespace sgb::cli
