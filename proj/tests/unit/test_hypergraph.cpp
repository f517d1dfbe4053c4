#include <gtest/gtest.h>

#include "generators.hpp"
#include "printers.hpp"
#include "roth/hypergraph.hpp"
#include "roth/named_groups.hpp"

using namespace roth;

namespace {

FiniteGroup named(const char* spec) { return make_named_group(parse_group_spec(spec)); }

std::vector<FiniteGroup> abelian_groups(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  for (const auto& spec : builtin_group_specs(max_order)) {
    auto g = make_named_group(spec);
    if (g.is_abelian()) out.push_back(g);
  }
  return out;
}

PairSet as_pairs(const GridSet& grid) {
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& p : grid.members()) pairs.emplace_back(p[0], p[1]);
  return PairSet::from_pairs(grid.group(), pairs);
}

}  // namespace

TEST(CornerHypergraph, FullZ5Block) {
  const auto g = named("cyclic:5");
  const auto h = Subgroup::whole(g);
  const auto hg = build_corner_hypergraph(GridSet::full(g, 2), h, {0, 0});
  EXPECT_EQ(hg.generators().size(), 25u);
  EXPECT_TRUE(hg.generators_edge_disjoint());
  const auto census = clique_census(hg);
  EXPECT_EQ(census.generator_count, 25u);
  EXPECT_EQ(census.total_count, 125u);
}

TEST(CornerHypergraph, EmptySet) {
  const auto g = named("cyclic:5");
  const auto hg = build_corner_hypergraph(GridSet::empty(g, 3), Subgroup::whole(g), {0, 0, 0});
  EXPECT_EQ(hg.edge_count(), 0u);
  EXPECT_EQ(clique_census(hg).total_count, 0u);
}

TEST(CornerHypergraph, NonAbelianRejected) {
  const auto g = named("dihedral:3");
  EXPECT_THROW(GridSet::full(g, 2), Error);
}

TEST(CornerHypergraph, DimensionTwoMatchesTripartiteCensus) {
  gen::Source src(12);
  for (const auto& g : abelian_groups(9)) {
    for (double p : {0.3, 0.6, 0.9}) {
      const auto grid = src.grid(g, 2, p);
      const auto hyper = clique_census(build_corner_hypergraph(grid, Subgroup::whole(g), {0, 0}));
      const auto tri = triangle_census(build_stage1_graph(as_pairs(grid), FullScope{}));
      EXPECT_EQ(hyper, tri) << g.name();
    }
  }
}

TEST(CornerHypergraph, GeneratorsEdgeDisjointInEveryDimension) {
  gen::Source src(13);
  for (const char* spec : {"cyclic:4", "cyclic:5", "elemab:2:2"})
    for (std::size_t d = 1; d <= 4; ++d) {
      const auto g = named(spec);
      const auto grid = src.grid(g, d, 0.5);
      const auto hg = build_corner_hypergraph(grid, Subgroup::whole(g), std::vector<Element>(d, 0));
      EXPECT_TRUE(hg.generators_edge_disjoint());
      EXPECT_EQ(hg.edge_count(), (d + 1) * grid.size());
    }
}

TEST(CornerHypergraph, BlockChoiceMeetsBound) {
  gen::Source src(14);
  for (const auto& g : abelian_groups(12)) {
    for (const auto& h : all_subgroups(g)) {
      const auto grid = src.grid(g, 2, src.unit());
      const auto choice = pigeonhole_corner_block(grid, h);
      EXPECT_GE(choice.count, choice.bound);
      const auto hg = build_corner_hypergraph(grid, h, choice.offsets);
      EXPECT_EQ(hg.generators().size(), choice.count);
    }
  }
}

TEST(CornerViaHypergraph, SpecExamples) {
  const auto g = named("cyclic:5");
  const auto h = Subgroup::whole(g);
  const auto w = find_corner_via_hypergraph(GridSet::full(g, 2), h);
  ASSERT_TRUE(w);
  EXPECT_NE(w->parameter, 0u);
  EXPECT_TRUE(validate_witness(GridSet::full(g, 2), h, *w));

  std::vector<std::vector<Element>> line;
  for (Element x = 0; x < 5; ++x) line.push_back({x, static_cast<Element>((5 - x) % 5)});
  EXPECT_FALSE(find_corner_via_hypergraph(GridSet::from_points(g, 2, line), h));
}

TEST(CornerViaHypergraph, AgreesWithBruteForce) {
  gen::Source src(15);
  for (const auto& g : abelian_groups(9)) {
    const auto h = Subgroup::whole(g);
    for (double p : {0.3, 0.6, 0.9})
      for (int trial = 0; trial < 10; ++trial) {
        const auto grid = src.grid(g, 2, p);
        const auto w = find_corner_via_hypergraph(grid, h);
        EXPECT_EQ(w.has_value(), find_corner(grid, h).has_value()) << g.name();
        if (w) EXPECT_TRUE(validate_witness(grid, h, *w));
      }
  }
}

TEST(CornerViaHypergraph, ProperSubgroupsAndHigherDimensions) {
  gen::Source src(16);
  for (const auto& g : abelian_groups(8)) {
    for (const auto& h : all_subgroups(g)) {
      for (std::size_t d : {2u, 3u}) {
        const auto grid = src.grid(g, d, 0.7);
        const bool brute = find_corner(grid, h).has_value();
        for (auto policy : {ScopePolicy::kAllCosetPairs, ScopePolicy::kFull}) {
          const auto w = find_corner_via_hypergraph(grid, h, policy);
          EXPECT_EQ(w.has_value(), brute) << g.name() << " d=" << d;
          if (w) EXPECT_TRUE(validate_witness(grid, h, *w));
        }
        if (const auto w = find_corner_via_hypergraph(grid, h)) EXPECT_TRUE(validate_witness(grid, h, *w));
      }
    }
  }
}

TEST(CornerViaHypergraph, WitnessFromClique) {
  const auto g = named("cyclic:7");
  const std::vector<Element> clique{1, 2, 5};
  const auto w = corner_witness_from_clique(g, clique);
  EXPECT_EQ(w.parameter, 2u);
  EXPECT_EQ(w.points, (std::vector<std::vector<Element>>{{1, 2}, {3, 2}, {1, 4}}));
}
