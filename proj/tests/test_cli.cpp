#include <gtest/gtest.h>

#include <sstream>

#include "sgblocks/cli.hpp"

using namespace sgb;
using namespace sgb::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

template <class F> Run run(F &&f) {
  std::ostringstream out, err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

Run classify(const std::string &g, const std::string &fmt, bool ledger = false) {
  return run([&](std::ostream &o, std::ostream &e) { return cmd_classify(g, fmt, ledger, o, e); });
}

std::size_t lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

bool contains(const std::string &s, const std::string &needle) { return s.find(needle) != std::string::npos; }

} // namespace

TEST(Classify, JsonAndCsvAgree) {
  for (const auto &g : group_names()) {
    auto json_run = classify(g, "json");
    ASSERT_EQ(json_run.code, 0) << g;
    auto doc = nlohmann::json::parse(json_run.out);
    EXPECT_EQ(doc.at("schema_version"), "1.0");
    EXPECT_EQ(doc.at("group"), g);
    EXPECT_FALSE(doc.contains("ledger"));
    auto csv_run = classify(g, "csv");
    EXPECT_EQ(lines(csv_run.out) - 1, doc.at("rows").size()) << g;
  }
  EXPECT_EQ(nlohmann::json::parse(classify("Sp2", "json").out).at("rows").size(), 31u);
  EXPECT_EQ(nlohmann::json::parse(classify("SO3", "json").out).at("rows").size(), 7u);
}

TEST(Classify, TableFormat) {
  auto r = classify("Sp2", "table", true);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "(T^2, X')"));
  EXPECT_TRUE(contains(r.out, "Summary: Rank 2: 2^6 1^6 0^5 (t1 m2 f3)"));
  EXPECT_TRUE(contains(r.out, "Ledger"));
}

TEST(Classify, UsageErrors) {
  EXPECT_EQ(classify("XX", "json").code, 2);
  EXPECT_EQ(classify("Sp2", "xml").code, 2);
  EXPECT_FALSE(classify("XX", "json").err.empty());
}

TEST(Classify, LedgerIsOptIn) {
  auto doc = nlohmann::json::parse(classify("SU3", "json", true).out);
  ASSERT_TRUE(doc.contains("ledger"));
  EXPECT_EQ(doc.at("ledger").size(), 1u);
  EXPECT_EQ(doc.at("ledger")[0].at("computed_value"), "t1 m1 f0");
}

TEST(Summary, Lines) {
  auto summary = [](const std::string &g) {
    return run([&](std::ostream &o, std::ostream &e) { return cmd_summary(g, o, e); });
  };
  EXPECT_EQ(summary("Sp2").out, "Rank 2: 2^6 1^6 0^5 (t1 m2 f3); Rank 1: 1^6 0^7\n");
  EXPECT_EQ(summary("SU2xSU2").out, "Rank 2: 2^5 1^4 0^1 (t1 m2 f2); Rank 1: 1^6 0^10\n");
  EXPECT_TRUE(contains(summary("SU3").out, "Rank 0: 0^7"));
  EXPECT_EQ(summary("nope").code, 2);
}

TEST(Oracle, Subcommands) {
  auto oracle = [](std::vector<std::string> args) {
    return run([&](std::ostream &o, std::ostream &e) { return cmd_oracle(args, o, e); });
  };
  auto lemma = oracle({"lemma-counting"});
  EXPECT_EQ(lemma.code, 0);
  EXPECT_TRUE(contains(lemma.out, "total 10 (Fx1 4, F^- 2, FxC_2 4)"));
  auto weyl = oracle({"weyl-subgroups", "D8"});
  EXPECT_EQ(weyl.code, 0);
  EXPECT_TRUE(contains(weyl.out, "classes 8, reflection 6"));
  EXPECT_TRUE(contains(oracle({"weyl-subgroups", "D_6"}).out, "classes 4, reflection 3"));
  auto rep = oracle({"rep-decompose", "D8", "C4"});
  EXPECT_EQ(rep.code, 0);
  EXPECT_EQ(rep.out.substr(0, 6), "(0,1)\n");
  EXPECT_EQ(oracle({"rep-decompose", "D8", "C_9"}).code, 2);
  EXPECT_EQ(oracle({"frobnicate"}).code, 2);
  EXPECT_EQ(oracle({}).code, 2);
}

TEST(PaperDiff, ListsKnownDiscrepancies) {
  auto diff = [](std::optional<std::string> g) {
    return run([&](std::ostream &o, std::ostream &e) { return cmd_paper_diff(g, o, e); });
  };
  auto all = diff(std::nullopt);
  EXPECT_EQ(all.code, 0);
  EXPECT_TRUE(contains(all.out, "A1xA1 working table, row (T^2, D_4)\tblock dimension a+b\t0+1\t0+2"));
  EXPECT_TRUE(contains(all.out, "SU(3) summary, rank 2\ttoral/mixed/flat split of 2-dim blocks\tt1 m2 f0\tt1 m1 f0"));
  EXPECT_TRUE(contains(all.out, "(T_long, 1xF)\tmodel label\tgqwf\tgq1"));
  EXPECT_TRUE(contains(all.out, "counting lemma"));
  for (const char *g : {"SO2", "O2", "SO3", "Sp1"}) {
    auto r = diff(std::string(g));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out), 1u) << g;
  }
}

TEST(Serialization, JsonRoundTrip) {
  for (auto g : kAllAmbientGroups) {
    auto t = assemble_table(g);
    auto j = to_json(t, discrepancy_ledger(g));
    auto back = from_json(j);
    EXPECT_EQ(back.schema_version, kSchemaVersion);
    EXPECT_EQ(to_json(back.table, back.ledger), j) << to_string(g);
    EXPECT_EQ(back.table.rows.size(), t.rows.size());
  }
  EXPECT_THROW(from_json(nlohmann::json::object()), InvalidInput);
}

TEST(Serialization, CsvQuotesCommas) {
  auto csv = to_csv(assemble_table(AmbientGroup::Sp2));
  EXPECT_TRUE(contains(csv, "\"2A5: C_2, 2S4: C_2, 2A4: D_4, Q8: D_6xC_2\""));
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
  for (const auto &g : group_names())
    for (const char *fmt : {"table", "json", "csv"}) {
      auto first = classify(g, fmt, true);
      auto second = classify(g, fmt, true);
      EXPECT_EQ(first.out, second.out) << g << " " << fmt;
    }
}
