#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "sgblocks/rational_rep.hpp"
#include "sgblocks/weyl_subgroups.hpp"

using namespace sgb;

namespace {

IntegralRep natural(const MatrixGroup &w, const ElementSet &h) {
  std::vector<IntMatrix> images;
  for (auto x : members(h))
    images.emplace_back(w.element(x));
  return IntegralRep::from_images(2, images);
}

IntegralRep generated(std::initializer_list<Mat2> gens) {
  std::vector<IntMatrix> g;
  for (const auto &m : gens)
    g.emplace_back(m);
  return IntegralRep::generated(2, g);
}

using AB = std::pair<std::size_t, std::size_t>;

AB ab(const DecompositionProfile &p) { return {p.a, p.b}; }

std::vector<SummandKind> kinds(const DecompositionProfile &p) {
  std::vector<SummandKind> k;
  for (const auto &s : p.summands)
    k.push_back(s.kind);
  std::sort(k.begin(), k.end());
  return k;
}

// natural action of each subgroup class of W on the rank-2 lattice
const std::map<std::pair<RootType, std::string>, std::pair<std::size_t, std::size_t>> kGolden{
    {{RootType::A1xA1, "1"}, {2, 0}},     {{RootType::A1xA1, "C_2^x"}, {1, 1}}, {{RootType::A1xA1, "C_2^y"}, {1, 1}},
    {{RootType::A1xA1, "C_2^Delta"}, {0, 2}}, {{RootType::A1xA1, "D_4"}, {0, 2}},
    {{RootType::A2, "1"}, {2, 0}},        {{RootType::A2, "C_2"}, {1, 1}},      {{RootType::A2, "C_3"}, {0, 1}},
    {{RootType::A2, "D_6"}, {0, 1}},
    {{RootType::C2, "1"}, {2, 0}},        {{RootType::C2, "X"}, {1, 1}},        {{RootType::C2, "X'"}, {1, 1}},
    {{RootType::C2, "C_2"}, {0, 2}},      {{RootType::C2, "V"}, {0, 2}},        {{RootType::C2, "V'"}, {0, 2}},
    {{RootType::C2, "C_4"}, {0, 1}},      {{RootType::C2, "D_8"}, {0, 1}}};

} // namespace

TEST(FixedDim, Examples) {
  EXPECT_EQ(fixed_dim(IntegralRep::from_images(2, {})), 2u);
  EXPECT_EQ(fixed_dim(generated({Mat2::of(-1, 0, 0, 1)})), 1u);
  auto c2 = build_root_datum(RootType::C2);
  auto w = weyl_group(c2);
  EXPECT_EQ(fixed_dim(natural(w, w.all())), 0u);
  auto fs = fixed_space(generated({Mat2::of(0, 1, 1, 0)}));
  ASSERT_EQ(fs.dim, 1u);
  EXPECT_EQ(fs.basis.front(), (std::vector<Int>{1, 1}));
}

TEST(DecomposeProfile, Examples) {
  EXPECT_EQ(ab(decompose_profile(generated({Mat2::of(-1, 0, 0, -1)}))), AB(0, 2));
  EXPECT_EQ(ab(decompose_profile(generated({Mat2::of(0, -1, 1, 0)}))), AB(0, 1));
  EXPECT_EQ(ab(decompose_profile(generated({Mat2::of(0, -1, 1, -1)}))), AB(0, 1));
  EXPECT_EQ(ab(decompose_profile(generated({Mat2::of(0, 1, 1, 0), Mat2::of(0, -1, -1, 0)}))),
            AB(0, 2));
  EXPECT_EQ(ab(decompose_profile(IntegralRep::from_images(2, {}))), AB(2, 0));
  EXPECT_EQ(ab(decompose_profile(IntegralRep{0, {IntMatrix(0)}})), AB(0, 0));
  EXPECT_EQ(ab(decompose_profile(IntegralRep::from_images(1, {IntMatrix(1, {-1})}))),
            AB(0, 1));
}

TEST(DecomposeProfile, RejectsDimensionThree) {
  EXPECT_THROW(decompose_profile(IntegralRep::from_images(3, {})), UnsupportedRank);
}

TEST(DecomposeProfile, GoldenNaturalActions) {
  std::size_t checked = 0;
  for (auto t : {RootType::A1xA1, RootType::A2, RootType::C2}) {
    auto rd = build_root_datum(t);
    auto w = weyl_group(rd);
    for (const auto &c : reflection_subgroup_classes(rd, w)) {
      auto p = decompose_profile(natural(w, c.representative));
      EXPECT_EQ(ab(p), kGolden.at({t, c.label})) << to_string(t) << " " << c.label;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 17u);
}

TEST(DecomposeProfile, InvariantUnderUnimodularConjugation) {
  std::mt19937 rng(2024);
  for (auto t : {RootType::A1xA1, RootType::A2, RootType::C2}) {
    auto rd = build_root_datum(t);
    auto w = weyl_group(rd);
    for (const auto &c : reflection_subgroup_classes(rd, w)) {
      auto base = decompose_profile(natural(w, c.representative));
      for (int trial = 0; trial < 100; ++trial) {
        auto p = oracle::random_unimodular(rng);
        auto pinv = p.unimodular_inverse();
        std::vector<IntMatrix> images;
        for (auto x : members(c.representative))
          images.emplace_back(p * w.element(x) * pinv);
        auto q = decompose_profile(IntegralRep::from_images(2, images));
        ASSERT_EQ(ab(q), ab(base)) << c.label;
        ASSERT_EQ(kinds(q), kinds(base)) << c.label;
      }
    }
  }
}

TEST(DecomposeProfile, SplittingAgreesWithEigenlineSearch) {
  std::mt19937 rng(99);
  for (auto t : {RootType::A1xA1, RootType::A2, RootType::C2}) {
    auto rd = build_root_datum(t);
    auto w = weyl_group(rd);
    for (const auto &c : reflection_subgroup_classes(rd, w))
      for (const auto &h : c.conjugates) {
        auto rep = natural(w, h);
        auto p = decompose_profile(rep);
        auto lines = oracle::eigenlines_by_search(rep.elements);
        if (p.a == 0)
          EXPECT_EQ(p.b == 2, lines.size() >= 2) << c.label;
        EXPECT_EQ(common_eigenlines(rep).size() >= 2, lines.size() >= 2) << c.label;
      }
  }
}

TEST(DecomposeProfile, DimensionBookkeeping) {
  for (auto t : {RootType::A1xA1, RootType::A2, RootType::C2}) {
    auto rd = build_root_datum(t);
    auto w = weyl_group(rd);
    for (const auto &c : reflection_subgroup_classes(rd, w)) {
      auto p = decompose_profile(natural(w, c.representative));
      std::size_t ones = 0, twos = 0, trivial = 0;
      for (const auto &s : p.summands) {
        if (s.kind == SummandKind::Trivial)
          ++trivial;
        else if (s.kind == SummandKind::Sign)
          ++ones;
        else
          ++twos;
      }
      EXPECT_EQ(trivial, p.a);
      EXPECT_EQ(p.a + ones + 2 * twos, 2u);
      EXPECT_EQ(p.b, ones + twos);
      EXPECT_LE(p.a + p.b, 2u);
      EXPECT_EQ(p.a + p.b == 2, twos == 0);
      auto [a, b] = block_dimension(p);
      EXPECT_EQ(a + b, p.dimension());
    }
  }
}

TEST(IntegralRep, GeneratedClosesAndValidates) {
  auto rep = generated({Mat2::of(0, -1, 1, 0)});
  EXPECT_EQ(rep.elements.size(), 4u);
  EXPECT_TRUE(rep.is_group());
  EXPECT_THROW(IntegralRep::generated(2, {IntMatrix(2, {1, 1, 0, 1})}), InvalidInput);
}
