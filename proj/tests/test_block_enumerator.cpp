#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "sgblocks/block_enumerator.hpp"

using namespace sgb;

namespace {

struct Expect {
  std::string h_e, h_d;
  std::size_t a, b;
  std::string weyl;
};

const std::map<AmbientGroup, std::vector<Expect>> kMaximalRank{
    {AmbientGroup::Sp2,
     {{"Sp(2)", "1", 0, 0, "1"},
      {"Sp(1)xSp(1) (long)", "C_2", 0, 0, "1"},
      {"Sp(1)xSp(1) (long)", "1", 0, 0, "C_2"},
      {"Sp(1)xSp(1) (short)", "C_2", 0, 0, "1"},
      {"Sp(1)xSp(1) (short)", "1", 0, 0, "C_2"},
      {"TxSp(1)", "C_2", 0, 1, "1"},
      {"TxSp(1)", "1", 1, 0, "C_2"},
      {"Sp(1)xT", "C_2", 0, 1, "1"},
      {"Sp(1)xT", "1", 1, 0, "C_2"},
      {"T^2", "D_8", 0, 1, "1"},
      {"T^2", "V", 0, 2, "C_2"},
      {"T^2", "C_4", 0, 1, "C_2"},
      {"T^2", "V'", 0, 2, "C_2"},
      {"T^2", "X", 1, 1, "C_2"},
      {"T^2", "C_2", 0, 2, "D_4"},
      {"T^2", "X'", 1, 1, "C_2"},
      {"T^2", "1", 2, 0, "D_8"}}},
    {AmbientGroup::SU3,
     {{"SU(3)", "1", 0, 0, "1"},
      {"U(2)", "1", 1, 0, "1"},
      {"T^2", "D_6", 0, 1, "1"},
      {"T^2", "C_3", 0, 1, "C_2"},
      {"T^2", "C_2", 1, 1, "1"},
      {"T^2", "1", 2, 0, "D_6"}}},
    {AmbientGroup::SU2xSU2,
     {{"SU(2)xSU(2)", "1", 0, 0, "1"},
      {"SU(2)xT", "C_2", 0, 1, "1"},
      {"SU(2)xT", "1", 1, 0, "C_2"},
      {"TxSU(2)", "C_2", 0, 1, "1"},
      {"TxSU(2)", "1", 1, 0, "C_2"},
      {"T^2", "D_4", 0, 2, "1"},
      {"T^2", "C_2^Delta", 0, 2, "C_2"},
      {"T^2", "C_2^x", 1, 1, "C_2"},
      {"T^2", "C_2^y", 1, 1, "C_2"},
      {"T^2", "1", 2, 0, "D_4"}}}};

const DominantRecord *find(const std::vector<DominantRecord> &rows, const std::string &h_e, const std::string &h_d) {
  for (const auto &r : rows)
    if (r.h_e.name == h_e && r.h_d == h_d)
      return &r;
  return nullptr;
}

std::vector<BlockTable> all_tables() {
  std::vector<BlockTable> t;
  for (auto g : kAllAmbientGroups)
    t.push_back(assemble_table(g));
  return t;
}

} // namespace

TEST(MaximalRankBlocks, GoldenRows) {
  std::size_t assertions = 0;
  for (const auto &[g, expected] : kMaximalRank) {
    auto rows = maximal_rank_blocks(build_root_datum(root_type_for(g)));
    EXPECT_EQ(rows.size(), expected.size()) << to_string(g);
    for (const auto &e : expected) {
      const auto *r = find(rows, e.h_e, e.h_d);
      ASSERT_NE(r, nullptr) << to_string(g) << " (" << e.h_e << ", " << e.h_d << ")";
      EXPECT_EQ(r->profile.a, e.a) << e.h_e << " " << e.h_d;
      EXPECT_EQ(r->profile.b, e.b) << e.h_e << " " << e.h_d;
      EXPECT_EQ(r->weyl, e.weyl) << e.h_e << " " << e.h_d;
      EXPECT_EQ(r->multiplicity, 1u);
      ++assertions;
    }
  }
  EXPECT_EQ(assertions, 33u);
}

TEST(MaximalRankBlocks, SpotCheckMixedRow) {
  auto rows = maximal_rank_blocks(build_root_datum(RootType::C2));
  const auto *r = find(rows, "T^2", "X'");
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->kind, BlockKind::Mixed);
  EXPECT_EQ(r->model, "mixed");
  const auto *torus = find(rows, "T^2", "1");
  EXPECT_EQ(torus->kind, BlockKind::Toral);
  EXPECT_EQ(torus->model, "gqtoral");
}

TEST(MaximalRankBlocks, ActionOnLambda0IsWellDefinedOnCosets) {
  for (auto t : {RootType::A1xA1, RootType::A2, RootType::C2}) {
    auto rd = build_root_datum(t);
    auto w = weyl_group(rd);
    for (const auto &c : reflection_subgroup_classes(rd, w)) {
      if (!c.is_reflection_group)
        continue;
      auto f = fixed_sublattice(c, w);
      for (std::size_t x = 0; x < w.order(); ++x) {
        if (f.omega.coset_of[x] < 0)
          continue;
        EXPECT_TRUE(f.normalizer.test(x));
        EXPECT_EQ(restrict_to_basis(w.element(x), f.basis), f.action[static_cast<std::size_t>(f.omega.coset_of[x])]);
      }
      // the induced action is a homomorphism from N_W(R)/R
      for (std::size_t i = 0; i < f.omega.group.order(); ++i)
        for (std::size_t j = 0; j < f.omega.group.order(); ++j)
          EXPECT_EQ(f.action[i] * f.action[j], f.action[f.omega.group.mul(i, j)]);
    }
  }
}

TEST(Rank1Blocks, Sp2) {
  auto rows = rank1_blocks(AmbientGroup::Sp2);
  EXPECT_EQ(rows.size(), 13u);
  std::size_t classes = 0, zero_dim = 0;
  std::vector<std::size_t> family_mult;
  for (const auto &r : rows) {
    classes += r.multiplicity;
    zero_dim += r.dimension() == 0;
    if (!r.family.empty())
      family_mult.push_back(r.multiplicity);
  }
  EXPECT_EQ(classes, 27u);
  EXPECT_EQ(zero_dim, 7u);
  std::sort(family_mult.begin(), family_mult.end());
  EXPECT_EQ(family_mult, (std::vector<std::size_t>{2, 2, 4, 4, 4, 4}));
  const auto *dsp = find(rows, "DeltaSp(1)", "1");
  ASSERT_NE(dsp, nullptr);
  EXPECT_EQ(dsp->weyl, "C_2");
  EXPECT_EQ(find(rows, "Sp(1)x1", "Q8")->weyl, "D_6");
  EXPECT_EQ(find(rows, "T_long", "Fx1")->kind, BlockKind::CotoralLine);
  EXPECT_EQ(find(rows, "T_short", "F^-")->kind, BlockKind::WeylFinite);
}

TEST(Rank1Blocks, SU3) {
  auto rows = rank1_blocks(AmbientGroup::SU3);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows.front().h_e.name, "SO(3)");
  EXPECT_EQ(rows.front().dimension(), 0u);
  const std::map<std::string, std::string> weyl{{"A_5", "1"}, {"S_4", "1"}, {"A_4", "C_2"}, {"D_4", "D_6"}};
  for (const auto &[h_d, w] : weyl) {
    const auto *r = find(rows, "Z(U(2))", h_d);
    ASSERT_NE(r, nullptr) << h_d;
    EXPECT_EQ(r->kind, BlockKind::CotoralLine);
    EXPECT_EQ(r->weyl, w);
  }
}

TEST(Rank1Blocks, SU2xSU2Diagonal) {
  auto rows = rank1_blocks(AmbientGroup::SU2xSU2);
  EXPECT_EQ(rows.size(), 16u);
  EXPECT_EQ(find(rows, "DeltaSU(2)", "1")->weyl, "C_2");
  EXPECT_EQ(find(rows, "DeltaSU(2)", "C_2")->weyl, "1");
  EXPECT_THROW(rank1_blocks(AmbientGroup::SO3), InvalidInput);
}

TEST(ClassifyBlockKind, Examples) {
  ConnectedSubgroupDescriptor torus{"T^2", 2, 2, "Sp2", "D_8", {2, "trivial"}, true, ""};
  ConnectedSubgroupDescriptor other{"U(2)", 2, 4, "SU3", "1", {1, "trivial"}, false, ""};
  auto profile = [](std::size_t a, std::size_t b) {
    DecompositionProfile p;
    p.a = a;
    p.b = b;
    return p;
  };
  EXPECT_EQ(classify_block_kind(profile(2, 0), torus), BlockKind::Toral);
  EXPECT_EQ(classify_block_kind(profile(0, 1), torus), BlockKind::WeylFinite);
  EXPECT_EQ(classify_block_kind(profile(1, 1), torus), BlockKind::Mixed);
  EXPECT_EQ(classify_block_kind(profile(0, 0), other), BlockKind::Discrete);
  EXPECT_EQ(classify_block_kind(profile(1, 0), other), BlockKind::CotoralLine);
  EXPECT_THROW(classify_block_kind(profile(2, 0), other), ClassificationError);
  EXPECT_EQ(model_label(BlockKind::CotoralLine), "gq1");
  EXPECT_EQ(model_label(BlockKind::WeylFinite), "gqwf");
}

TEST(AssembleTable, Summaries) {
  EXPECT_EQ(assemble_table(AmbientGroup::Sp2).summary().line(), "Rank 2: 2^6 1^6 0^5 (t1 m2 f3); Rank 1: 1^6 0^7");
  EXPECT_EQ(assemble_table(AmbientGroup::SU2xSU2).summary().line(),
            "Rank 2: 2^5 1^4 0^1 (t1 m2 f2); Rank 1: 1^6 0^10");
  EXPECT_EQ(assemble_table(AmbientGroup::SU3).summary().line(),
            "Rank 2: 2^2 1^3 0^1 (t1 m1 f0); Rank 1: 1^4 0^1; Rank 0: 0^7");
  EXPECT_EQ(assemble_table(AmbientGroup::Sp2).rows.size(), 31u);
  EXPECT_THROW(assemble_table("XX"), InvalidInput);
}

TEST(AssembleTable, RowsFollowEmissionOrder) {
  for (const auto &t : all_tables()) {
    EXPECT_TRUE(std::is_sorted(t.rows.begin(), t.rows.end(), row_precedes)) << t.group;
    auto copy = t.rows;
    std::reverse(copy.begin(), copy.end());
    sort_rows(copy);
    for (std::size_t i = 0; i < copy.size(); ++i)
      EXPECT_EQ(std::tuple(copy[i].rank(), copy[i].h_e.dim, copy[i].h_d_order),
                std::tuple(t.rows[i].rank(), t.rows[i].h_e.dim, t.rows[i].h_d_order));
  }
}

TEST(AssembleTable, StoredKindMatchesRecomputation) {
  for (const auto &t : all_tables())
    for (const auto &r : t.rows) {
      EXPECT_EQ(r.kind, classify_block_kind(r.profile, r.h_e)) << t.group << " " << r.h_e.name;
      EXPECT_EQ(r.model, model_label(r.kind));
      EXPECT_GE(r.multiplicity, 1u);
      EXPECT_LE(r.h_e.lambda0.dim, r.h_e.rank);
    }
}

TEST(Rank1Ambient, BlockCounts) {
  EXPECT_EQ(rank1_ambient_table(AmbientGroup::SO2).rows.size(), 1u);
  EXPECT_EQ(rank1_ambient_table(AmbientGroup::O2).rows.size(), 2u);
  EXPECT_EQ(rank1_ambient_table(AmbientGroup::SO3).rows.size(), 7u);
  auto sp1 = rank1_ambient_table(AmbientGroup::Sp1);
  EXPECT_EQ(sp1.rows.size(), 7u);
  EXPECT_EQ(std::count_if(sp1.rows.begin(), sp1.rows.end(), [](const auto &r) { return r.dimension() == 0; }), 5);
  EXPECT_THROW(rank1_ambient_table(AmbientGroup::Sp2), InvalidInput);
}

TEST(RegularRank1Check, OnlyDiagonalForA1xA1) {
  EXPECT_TRUE(regular_rank1_check(build_root_datum(RootType::A2)).lines.empty());
  EXPECT_TRUE(regular_rank1_check(build_root_datum(RootType::C2)).lines.empty());
  auto a1 = regular_rank1_check(build_root_datum(RootType::A1xA1));
  EXPECT_EQ(a1.lines, (std::vector<Vec2>{{1, -1}, {1, 1}}));
  EXPECT_EQ(a1.classes.size(), 1u);
}

TEST(RegularRank1Check, LargerSearchFindsNothingNew) {
  for (auto t : {RootType::A1xA1, RootType::A2, RootType::C2}) {
    auto rd = build_root_datum(t);
    std::size_t small = 0, large = 0;
    for (const auto &c : rank1_line_candidates(rd, 4))
      small += c.regular;
    for (const auto &c : rank1_line_candidates(rd, 12))
      large += c.regular;
    EXPECT_EQ(small, large) << to_string(t);
  }
}

TEST(CuratedData, EmbeddedCopyMatchesFile) {
  std::ifstream in(SGB_DATA_FILE);
  ASSERT_TRUE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(ss.str()), nlohmann::json::parse(embedded_curated_json()));
  const auto &data = default_curated_data();
  EXPECT_EQ(data.schema_version, "1.0");
  for (const auto &d : data.descriptors) {
    EXPECT_LE(d.rank, ambient_rank(parse_ambient_group(d.ambient)));
    bool finite_name = std::find(infinite_weyl_types().begin(), infinite_weyl_types().end(), d.weyl_of_He) ==
                       infinite_weyl_types().end();
    if (finite_name)
      EXPECT_EQ(d.weyl_of_He, "1") << d.name;
  }
}

TEST(CuratedData, RejectsBadInput) {
  auto j = nlohmann::json::parse(embedded_curated_json());
  auto broken = j;
  broken["descriptors"][0]["rank"] = 3;
  EXPECT_THROW(parse_curated_data(broken), InvalidInput);
  broken = j;
  broken["descriptors"][0].erase("name");
  EXPECT_THROW(parse_curated_data(broken), InvalidInput);
  broken = j;
  broken["descriptors"][0]["ambient"] = "G2";
  EXPECT_THROW(parse_curated_data(broken), InvalidInput);
}
