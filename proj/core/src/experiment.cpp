#include "roth/experiment.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "roth/random.hpp"

namespace roth {

namespace {

std::size_t ground_cells(const ExperimentConfig& c) {
  switch (ground_of(c.kind)) {
    case GroundKind::kElements: return c.group.order();
    case GroundKind::kPairs: return c.group.order() * c.group.order();
    case GroundKind::kGrid: return GridSet::cell_count(c.group, c.dimension, c.limits);
  }
  return 0;
}

AnySet make_set(const ExperimentConfig& c, Bitset members) {
  switch (ground_of(c.kind)) {
    case GroundKind::kElements: return ElementSet(c.group, std::move(members));
    case GroundKind::kPairs: return PairSet(c.group, std::move(members));
    case GroundKind::kGrid: return GridSet(c.group, c.dimension, std::move(members), c.limits);
  }
  throw Error(ErrorCode::kUnsupportedParameter, "unknown ground kind");
}

std::string describe(const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.elements().size(); ++i) s += (i ? "," : "") + std::to_string(h.elements()[i]);
  return s + "}";
}

}  // namespace

ExperimentReport density_experiment(const ExperimentConfig& config) {
  if (config.trials == 0) throw Error(ErrorCode::kUnsupportedParameter, "trials must be at least 1");
  for (double d : config.densities)
    if (!(d > 0.0 && d <= 1.0))
      throw Error(ErrorCode::kUnsupportedParameter, "density " + std::to_string(d) + " outside (0, 1]");

  const std::size_t cells = ground_cells(config);
  ExperimentReport report;
  report.group_label = config.group.name();
  report.subgroup_label = config.subgroup_label.empty() ? describe(config.subgroup) : config.subgroup_label;
  report.kind = config.kind;
  report.policy = config.policy;
  report.dimension = config.dimension;
  report.trials = config.trials;
  report.seed = config.seed;

  for (std::size_t di = 0; di < config.densities.size(); ++di) {
    const std::size_t size = sample_size(config.densities[di], cells);
    std::vector<char> hit(config.trials, 0);
    const std::size_t workers = std::max<std::size_t>(1, std::min(config.jobs, config.trials));
    std::vector<std::exception_ptr> failures(workers);
    auto run_trials = [&](std::size_t worker) {
      try {
        for (std::size_t t = worker; t < config.trials; t += workers) {
          auto rng = derived_rng(config.seed, di, t);
          Bitset members(cells);
          for (std::size_t c : sample_without_replacement(cells, size, rng)) members.set(c);
          hit[t] = find_configuration(make_set(config, std::move(members)), config.subgroup, config.kind,
                                      config.policy)
                       .has_value();
        }
      } catch (...) {
        failures[worker] = std::current_exception();
      }
    };
    if (workers == 1) {
      run_trials(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_trials, w);
    }
    for (const auto& failure : failures)
      if (failure) std::rethrow_exception(failure);
    DensityRow row{config.densities[di], size, config.trials, 0, 0.0};
    for (char h : hit) row.hits += h ? 1 : 0;
    row.hit_fraction = static_cast<double>(row.hits) / static_cast<double>(row.trials);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace roth
