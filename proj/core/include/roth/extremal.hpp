#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "roth/configurations.hpp"

namespace roth {

enum class SearchMode { kExact, kHeuristic };

struct SearchBudget {
  std::uint64_t node_cap = 200'000'000;
  double time_cap_seconds = 120.0;
  SearchMode mode = SearchMode::kExact;
};

/// A configuration-free subset question: the ground set is G, G x G or G^d
/// depending on the kind.
struct ExtremalProblem {
  FiniteGroup group;
  Subgroup subgroup;
  ConfigKind kind;
  DegeneracyPolicy policy{};
  std::size_t dimension = 2;
  Limits limits{};
};

struct ExtremalResult {
  std::size_t size = 0;
  /// Ground cells of the returned set, ascending.
  std::vector<std::size_t> cells;
  /// True when the search tree was exhausted (exact mode only).
  bool optimal = false;
  std::uint64_t nodes = 0;
  std::size_t ground_size = 0;
};

std::size_t ground_size(const ExtremalProblem& problem);

/// The subset given by ground cells, as the set type the kind lives on.
AnySet cells_to_set(const ExtremalProblem& problem, const std::vector<std::size_t>& cells);

/// Depth-first include/exclude search over ground cells in increasing order.
/// Adding cell c only tests configurations whose largest cell is c, and
/// branches that cannot beat the incumbent are cut. Among maximum sets the
/// lexicographically least is returned. When the node or time cap is hit the
/// best set so far comes back with optimal = false.
ExtremalResult max_free_exact(const ExtremalProblem& problem, const SearchBudget& budget = {});

/// Randomised greedy insertion followed by remove-one/refill local search.
/// Deterministic for a given seed. The result never exceeds the optimum.
ExtremalResult max_free_heuristic(const ExtremalProblem& problem, std::size_t iterations, std::uint64_t seed);

}  // namespace roth
