#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "roth/configurations.hpp"

namespace roth {

struct ExperimentConfig {
  FiniteGroup group;
  Subgroup subgroup;
  ConfigKind kind;
  DegeneracyPolicy policy{};
  std::vector<double> densities{};
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t dimension = 2;
  /// Worker threads; results do not depend on this.
  std::size_t jobs = 1;
  std::string subgroup_label{};
  Limits limits{};
};

struct DensityRow {
  double density = 0;
  std::size_t set_size = 0;
  std::size_t trials = 0;
  std::size_t hits = 0;
  double hit_fraction = 0;
};

struct ExperimentReport {
  std::string group_label;
  std::string subgroup_label{};
  ConfigKind kind = ConfigKind::kElso;
  DegeneracyPolicy policy{};
  std::size_t dimension = 2;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<DensityRow> rows;
};

/// For each density, draws `trials` subsets of exactly floor(density * N)
/// ground cells and records how many contain a configuration according to
/// the brute-force finder. Trial t at density index i uses a generator seeded
/// from (seed, i, t), so reports are reproducible. Throws UnsupportedParameter
/// for densities outside (0, 1] or zero trials.
ExperimentReport density_experiment(const ExperimentConfig& config);

}  // namespace roth
