#include <gtest/gtest.h>

#include "roth/experiment.hpp"
#include "roth/named_groups.hpp"
#include "roth/serialize.hpp"

using namespace roth;

namespace {

FiniteGroup named(const char* spec) { return make_named_group(parse_group_spec(spec)); }

ExperimentConfig config(const FiniteGroup& g, const Subgroup& h, ConfigKind kind, std::vector<double> densities,
                        std::size_t trials, std::uint64_t seed) {
  ExperimentConfig c{.group = g, .subgroup = h, .kind = kind};
  c.densities = std::move(densities);
  c.trials = trials;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(DensityExperiment, BooleanGroupHasNoAp3) {
  const auto g = named("elemab:2:3");
  const auto report = density_experiment(config(g, Subgroup::whole(g), ConfigKind::kAp3, {0.1, 0.5, 1.0}, 100, 7));
  for (const auto& row : report.rows) EXPECT_EQ(row.hit_fraction, 0.0);
}

TEST(DensityExperiment, FullDensityAlwaysHits) {
  const auto g = named("cyclic:4");
  const auto report = density_experiment(config(g, Subgroup::whole(g), ConfigKind::kElso, {1.0}, 10, 1));
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].hit_fraction, 1.0);
  EXPECT_EQ(report.rows[0].set_size, 16u);
}

TEST(DensityExperiment, ReproducibleAndIndependentOfJobs) {
  const auto g = named("cyclic:6");
  const auto h = Subgroup::from_elements(g, {0, 2, 4});
  std::vector<double> densities;
  for (int i = 1; i <= 9; ++i) densities.push_back(i / 10.0);
  auto c = config(g, h, ConfigKind::kElso, densities, 40, 2024);
  const auto one = density_experiment(c);
  c.jobs = 4;
  const auto four = density_experiment(c);
  EXPECT_EQ(to_json(one).dump(), to_json(four).dump());
  EXPECT_EQ(to_csv(one), to_csv(four));
  for (const auto& row : one.rows) {
    EXPECT_GE(row.hit_fraction, 0.0);
    EXPECT_LE(row.hit_fraction, 1.0);
    EXPECT_EQ(row.hit_fraction, static_cast<double>(row.hits) / row.trials);
  }
  c.seed = 2025;
  EXPECT_NE(to_json(density_experiment(c)).dump(), to_json(one).dump());
}

TEST(DensityExperiment, RejectsBadParameters) {
  const auto g = named("cyclic:4");
  EXPECT_THROW(density_experiment(config(g, Subgroup::whole(g), ConfigKind::kAp3, {0.0}, 1, 1)), Error);
  EXPECT_THROW(density_experiment(config(g, Subgroup::whole(g), ConfigKind::kAp3, {1.5}, 1, 1)), Error);
  EXPECT_THROW(density_experiment(config(g, Subgroup::whole(g), ConfigKind::kAp3, {0.5}, 0, 1)), Error);
}

TEST(DensityExperiment, GridKinds) {
  const auto g = named("cyclic:5");
  auto c = config(g, Subgroup::whole(g), ConfigKind::kCorner, {0.2, 1.0}, 5, 3);
  c.dimension = 3;
  const auto report = density_experiment(c);
  EXPECT_EQ(report.rows[0].set_size, 25u);
  EXPECT_EQ(report.rows[1].hit_fraction, 1.0);
}
