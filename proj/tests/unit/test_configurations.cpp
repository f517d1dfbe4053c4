#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "printers.hpp"
#include "roth/configurations.hpp"
#include "roth/error.hpp"
#include "roth/named_groups.hpp"

using namespace roth;

namespace {

FiniteGroup named(const char* spec) { return make_named_group(parse_group_spec(spec)); }

ConfigWitness witness(ConfigKind kind, std::vector<std::vector<Element>> points, std::optional<Element> param = {}) {
  return ConfigWitness{kind, std::move(points), param};
}

oracle::Membership in(const PairSet& s) {
  return [&s](Element a, Element b) { return s.contains(a, b); };
}

std::vector<bool> flags(const ElementSet& s) {
  std::vector<bool> out(s.group().order());
  for (Element x : s.members()) out[x] = true;
  return out;
}

bool has_nontrivial_ksv(const FiniteGroup& g, const std::vector<bool>& a) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      for (Element z = 0; z < g.order(); ++z)
        if (a[x] && a[y] && a[z] && !(x == y && y == z) && g.mul(x, z) == g.mul(y, y)) return true;
  return false;
}

std::vector<FiniteGroup> small_groups(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  for (const auto& spec : builtin_group_specs(max_order)) out.push_back(make_named_group(spec));
  return out;
}

}  // namespace

TEST(Validate, SpecExamples) {
  const auto z4 = named("cyclic:4");
  const auto full = PairSet::full(z4);
  const auto h = Subgroup::whole(z4);
  EXPECT_TRUE(validate_witness(full, h, witness(ConfigKind::kElso, {{0, 0}, {1, 0}, {0, 1}}, 1)));
  const auto degenerate = validate_witness(full, h, witness(ConfigKind::kElso, {{0, 0}, {0, 0}, {0, 0}}, 0));
  EXPECT_FALSE(degenerate);
  EXPECT_EQ(degenerate.reason, "degenerate d");

  const auto z3 = named("cyclic:3");
  EXPECT_TRUE(validate_witness(PairSet::full(z3), Subgroup::whole(z3),
                               witness(ConfigKind::kHarmadik, {{0, 1}, {0, 0}, {1, 2}})));
}

TEST(Validate, RejectsTamperedWitnesses) {
  const auto z5 = named("cyclic:5");
  const auto full = PairSet::full(z5);
  const auto h = Subgroup::whole(z5);
  EXPECT_FALSE(validate_witness(full, h, witness(ConfigKind::kElso, {{0, 0}, {2, 0}, {0, 1}}, 1)));
  EXPECT_FALSE(validate_witness(full, h, witness(ConfigKind::kElso, {{0, 0}, {1, 0}}, 1)));
  EXPECT_FALSE(validate_witness(full, h, witness(ConfigKind::kHarmadik, {{0, 1}, {0, 0}, {0, 1}})));
  const std::vector<std::pair<Element, Element>> few{{0, 0}, {1, 0}};
  EXPECT_FALSE(validate_witness(PairSet::from_pairs(z5, few), h,
                                witness(ConfigKind::kElso, {{0, 0}, {1, 0}, {0, 1}}, 1)));
  const auto sub = Subgroup::trivial(z5);
  DegeneracyPolicy loose;
  loose.require_nonidentity_parameter = false;
  const auto not_in_h = validate_witness(full, sub, witness(ConfigKind::kElso, {{0, 0}, {1, 0}, {0, 1}}, 1), loose);
  EXPECT_EQ(not_in_h.reason, "d not in H");
}

TEST(Validate, KindMismatchAndForeignSubgroup) {
  const auto z4 = named("cyclic:4");
  const auto w = witness(ConfigKind::kAp3, {{0}, {1}, {2}}, 1);
  try {
    validate_witness(PairSet::full(z4), Subgroup::whole(z4), w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKindMismatch);
  }
  EXPECT_THROW(validate_witness(ElementSet::full(z4), Subgroup::whole(named("cyclic:4")), w), Error);
}

TEST(FindElso, SpecExamples) {
  const auto z4 = named("cyclic:4");
  const auto h = Subgroup::whole(z4);
  EXPECT_EQ(find_elso(PairSet::full(z4), h), witness(ConfigKind::kElso, {{0, 0}, {1, 0}, {0, 1}}, 1));
  EXPECT_FALSE(find_elso(PairSet::empty(z4), h));
  const std::vector<std::pair<Element, Element>> column{{0, 0}, {0, 1}, {0, 2}, {0, 3}};
  EXPECT_FALSE(find_elso(PairSet::from_pairs(z4, column), h));
}

TEST(CountElso, SpecExamples) {
  const auto z4 = named("cyclic:4");
  EXPECT_EQ(count_elso(PairSet::full(z4), Subgroup::whole(z4)), 48u);
  EXPECT_EQ(count_elso(PairSet::empty(z4), Subgroup::whole(z4)), 0u);
}

TEST(CountElso, FullSetFormula) {
  for (const auto& g : small_groups(24)) {
    const std::uint64_t n = g.order();
    EXPECT_EQ(count_elso(PairSet::full(g), Subgroup::whole(g)), n * n * (n - 1)) << g.name();
  }
}

TEST(CountElso, MatchesOracleAndBlocksPartitionTheCount) {
  gen::Source src(11);
  for (const auto& g : small_groups(8)) {
    for (const auto& h : all_subgroups(g)) {
      const auto s = src.pairs(g, 0.5);
      const auto total = count_elso(s, h);
      EXPECT_EQ(total, oracle::count_elso(g, in(s), h.elements(), true)) << g.name();
      std::uint64_t by_block = 0;
      for (Element l : cosets(g, h, CosetSide::kLeft).representatives)
        for (Element r : cosets(g, h, CosetSide::kRight).representatives) by_block += count_elso(s, h, {}, CosetBlock{l, r});
      EXPECT_EQ(by_block, total) << g.name();
    }
  }
}

TEST(FindHarmadik, SpecExamples) {
  const auto z3 = named("cyclic:3");
  EXPECT_EQ(find_harmadik(PairSet::full(z3)), witness(ConfigKind::kHarmadik, {{0, 1}, {0, 0}, {1, 2}}));
  EXPECT_FALSE(find_harmadik(PairSet::empty(z3)));
  const std::vector<std::pair<Element, Element>> origin{{0, 0}};
  EXPECT_FALSE(find_harmadik(PairSet::from_pairs(z3, origin)));
  DegeneracyPolicy loose;
  loose.require_distinct_rows = false;
  EXPECT_TRUE(find_harmadik(PairSet::from_pairs(z3, origin), loose));
}

TEST(FindQuadruple, SpecExamples) {
  const auto z3 = named("cyclic:3");
  EXPECT_EQ(find_quadruple(PairSet::full(z3)), witness(ConfigKind::kQuadruple, {{0, 1}, {0, 0}, {1, 0}, {1, 2}}));
  EXPECT_FALSE(find_quadruple(PairSet::empty(z3)));
}

TEST(FindQuadruple, MinimalSetOverZ2) {
  const auto z2 = named("cyclic:2");
  std::size_t minimal = 5;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::pair<Element, Element>> pairs;
    for (Element c = 0; c < 4; ++c)
      if (mask >> c & 1) pairs.emplace_back(c / 2, c % 2);
    const auto s = PairSet::from_pairs(z2, pairs);
    const bool expected = oracle::has_quadruple(z2, in(s));
    EXPECT_EQ(find_quadruple(s).has_value(), expected) << mask;
    if (expected) minimal = std::min(minimal, pairs.size());
  }
  EXPECT_EQ(minimal, 4u);
  EXPECT_EQ(find_quadruple(PairSet::full(z2)), witness(ConfigKind::kQuadruple, {{0, 1}, {0, 0}, {1, 0}, {1, 1}}));
}

TEST(FindCorollary, SpecExamples) {
  const auto z5 = named("cyclic:5");
  EXPECT_EQ(find_corollary_triple(PairSet::full(z5), Subgroup::whole(z5)),
            witness(ConfigKind::kCorollary, {{0, 0}, {0, 1}, {4, 2}}, 1));
  EXPECT_FALSE(find_corollary_triple(PairSet::empty(z5), Subgroup::whole(z5)));

  DegeneracyPolicy no_order_two;
  no_order_two.exclude_order_two_parameter = true;
  const auto g = named("product:elemab:2:2:cyclic:3");
  const auto h = Subgroup::from_elements(g, {0, 3, 6, 9});
  ASSERT_EQ(h.order(), 4u);
  EXPECT_FALSE(find_corollary_triple(PairSet::full(g), h, no_order_two));
  EXPECT_TRUE(find_corollary_triple(PairSet::full(g), h));
}

TEST(FindAp3, SpecExamples) {
  const auto z5 = named("cyclic:5");
  const auto h = Subgroup::whole(z5);
  EXPECT_EQ(find_ap3(ElementSet::from_elements(z5, std::vector<Element>{0, 1, 2}), h),
            witness(ConfigKind::kAp3, {{0}, {1}, {2}}, 1));
  EXPECT_FALSE(find_ap3(ElementSet::from_elements(z5, std::vector<Element>{0, 1}), h));
  const auto e8 = named("elemab:2:3");
  EXPECT_FALSE(find_ap3(ElementSet::full(e8), Subgroup::whole(e8)));
}

TEST(CountKsv, SpecExamples) {
  for (const auto& g : small_groups(24))
    EXPECT_EQ(count_ksv(ElementSet::full(g)), std::uint64_t{g.order()} * g.order()) << g.name();
  const auto z7 = named("cyclic:7");
  EXPECT_EQ(count_ksv(ElementSet::from_elements(z7, std::vector<Element>{4})), 1u);
  const auto a = ElementSet::from_elements(z7, std::vector<Element>{0, 1, 3});
  EXPECT_EQ(count_ksv(a), oracle::count_ksv(z7, flags(a)));
  EXPECT_EQ(count_ksv(a), 3u);
}

TEST(FindKsv, TrivialSolutionsNeedTheFlag) {
  const auto z7 = named("cyclic:7");
  const auto single = ElementSet::from_elements(z7, std::vector<Element>{4});
  EXPECT_FALSE(find_ksv(single));
  DegeneracyPolicy loose;
  loose.require_distinct_points = false;
  EXPECT_EQ(find_ksv(single, loose), witness(ConfigKind::kKsv, {{4}, {4}, {4}}));
}

TEST(FindCorner, SpecExamples) {
  const auto z5 = named("cyclic:5");
  const auto h = Subgroup::whole(z5);
  EXPECT_EQ(find_corner(GridSet::full(z5, 2), h), witness(ConfigKind::kCorner, {{0, 0}, {1, 0}, {0, 1}}, 1));
  std::vector<std::vector<Element>> line;
  for (Element x = 0; x < 5; ++x) line.push_back({x, static_cast<Element>((5 - x) % 5)});
  EXPECT_FALSE(find_corner(GridSet::from_points(z5, 2, line), h));
  const auto z3 = named("cyclic:3");
  EXPECT_EQ(find_corner(GridSet::full(z3, 3), Subgroup::whole(z3)),
            witness(ConfigKind::kCorner, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 1));
}

// Every finder agrees with a brute-force oracle on random sets over groups of
// order at most 6, for every subgroup H.
TEST(Exhaustiveness, FindersMatchOracles) {
  gen::Source src(2024);
  for (const auto& g : small_groups(6)) {
    for (int trial = 0; trial < 20; ++trial) {
      const double p = src.unit();
      const auto s = src.pairs(g, p);
      const auto a = src.elements(g, p);
      EXPECT_EQ(find_harmadik(s).has_value(), oracle::has_harmadik(g, in(s))) << g.name();
      EXPECT_EQ(find_quadruple(s).has_value(), oracle::has_quadruple(g, in(s))) << g.name();
      EXPECT_EQ(find_ksv(a).has_value(), has_nontrivial_ksv(g, flags(a))) << g.name();
      for (const auto& h : all_subgroups(g)) {
        EXPECT_EQ(find_elso(s, h).has_value(), oracle::count_elso(g, in(s), h.elements(), true) > 0) << g.name();
        EXPECT_EQ(find_corollary_triple(s, h).has_value(), oracle::has_corollary(g, in(s), h.elements(), false));
        DegeneracyPolicy strict;
        strict.exclude_order_two_parameter = true;
        EXPECT_EQ(find_corollary_triple(s, h, strict).has_value(),
                  oracle::has_corollary(g, in(s), h.elements(), true));
        EXPECT_EQ(find_ap3(a, h).has_value(), oracle::has_ap3(g, flags(a), h.elements())) << g.name();
        if (g.is_abelian()) {
          const auto grid = src.grid(g, 2, p);
          const oracle::Membership gin = [&](Element x, Element y) {
            return grid.contains(std::vector<Element>{x, y});
          };
          EXPECT_EQ(find_corner(grid, h).has_value(), oracle::has_corner2(g, gin, h.elements())) << g.name();
        }
      }
    }
  }
}

TEST(Soundness, EveryReturnedWitnessValidates) {
  gen::Source src(77);
  for (const auto& g : small_groups(10)) {
    for (const auto& h : all_subgroups(g)) {
      const auto s = src.pairs(g, 0.3 + 0.6 * src.unit());
      const auto a = src.elements(g, 0.6);
      const std::vector<std::pair<AnySet, std::optional<ConfigWitness>>> found{
          {s, find_elso(s, h)},        {s, find_harmadik(s)}, {s, find_quadruple(s)},
          {s, find_corollary_triple(s, h)}, {a, find_ap3(a, h)},  {a, find_ksv(a)}};
      for (const auto& [set, w] : found)
        if (w) EXPECT_TRUE(validate_witness(set, h, *w)) << g.name() << " " << to_string(w->kind);
      if (g.is_abelian()) {
        const auto grid = src.grid(g, 2, 0.5);
        if (const auto w = find_corner(grid, h)) EXPECT_TRUE(validate_witness(grid, h, *w));
      }
    }
  }
}

TEST(Monotonicity, SupersetsKeepTheirConfigurations) {
  gen::Source src(5);
  for (const auto& g : small_groups(8)) {
    const auto h = Subgroup::whole(g);
    for (int trial = 0; trial < 10; ++trial) {
      const auto small = src.pairs(g, 0.3);
      auto members = small.members();
      for (const auto& extra : src.pairs(g, 0.3).members()) members.push_back(extra);
      const auto big = PairSet::from_pairs(g, members);
      for (auto kind : {ConfigKind::kElso, ConfigKind::kHarmadik, ConfigKind::kQuadruple, ConfigKind::kCorollary})
        if (find_configuration(small, h, kind)) EXPECT_TRUE(find_configuration(big, h, kind)) << to_string(kind);
    }
  }
}

TEST(EnumerateConfigurations, FreeSetsAvoidEveryListedConfiguration) {
  const auto g = named("cyclic:5");
  const auto h = Subgroup::whole(g);
  const auto configs = enumerate_configurations(g, h, ConfigKind::kAp3);
  EXPECT_FALSE(configs.empty());
  gen::Source src(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = src.elements(g, 0.5);
    bool contains_one = false;
    for (const auto& c : configs) {
      bool all = true;
      for (auto cell : c) all = all && a.contains(static_cast<Element>(cell));
      contains_one = contains_one || all;
    }
    EXPECT_EQ(contains_one, find_ap3(a, h).has_value());
  }
}

TEST(ConfigKinds, NamesRoundTrip) {
  for (auto kind : {ConfigKind::kElso, ConfigKind::kHarmadik, ConfigKind::kQuadruple, ConfigKind::kCorollary,
                    ConfigKind::kAp3, ConfigKind::kCorner, ConfigKind::kKsv})
    EXPECT_EQ(parse_config_kind(to_string(kind)), kind);
  EXPECT_THROW(parse_config_kind("triangle"), Error);
}
