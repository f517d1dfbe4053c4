#include "roth/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "roth/random.hpp"

namespace roth {

std::size_t ground_size(const ExtremalProblem& p) {
  switch (ground_of(p.kind)) {
    case GroundKind::kElements: return p.group.order();
    case GroundKind::kPairs: return p.group.order() * p.group.order();
    case GroundKind::kGrid: return GridSet::cell_count(p.group, p.dimension, p.limits);
  }
  return 0;
}

AnySet cells_to_set(const ExtremalProblem& p, const std::vector<std::size_t>& cells) {
  Bitset members(ground_size(p));
  for (auto c : cells) members.set(c);
  switch (ground_of(p.kind)) {
    case GroundKind::kElements: return ElementSet(p.group, std::move(members));
    case GroundKind::kPairs: return PairSet(p.group, std::move(members));
    case GroundKind::kGrid: return GridSet(p.group, p.dimension, std::move(members), p.limits);
  }
  throw std::logic_error("unknown ground kind");
}

namespace {

void verify_free(const ExtremalProblem& p, const ExtremalResult& r) {
  if (find_configuration(cells_to_set(p, r.cells), p.subgroup, p.kind, p.policy))
    throw std::logic_error("extremal search returned a set that contains a configuration");
}

class ExactSearch {
 public:
  ExactSearch(const ExtremalProblem& p, const SearchBudget& budget)
      : n_(ground_size(p)), budget_(budget), closing_(n_), in_(n_, false), start_(std::chrono::steady_clock::now()) {
    for (auto& cfg : enumerate_configurations(p.group, p.subgroup, p.kind, p.policy, p.dimension, p.limits)) {
      const std::size_t last = cfg.back();
      cfg.pop_back();
      closing_[last].push_back(std::move(cfg));
    }
  }

  ExtremalResult run() {
    ExtremalResult r;
    r.ground_size = n_;
    recurse(0);
    r.size = best_.size();
    r.cells = best_;
    r.optimal = !aborted_;
    r.nodes = nodes_;
    return r;
  }

 private:
  bool can_add(std::size_t c) const {
    for (const auto& rest : closing_[c]) {
      if (std::all_of(rest.begin(), rest.end(), [this](std::size_t x) { return in_[x]; })) return false;
    }
    return true;
  }

  bool over_budget() {
    if (nodes_ >= budget_.node_cap) return true;
    if ((nodes_ & 0xfff) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.time_cap_seconds) return true;
    }
    return false;
  }

  void recurse(std::size_t i) {
    if (aborted_) return;
    ++nodes_;
    if (over_budget()) {
      aborted_ = true;
      return;
    }
    if (current_.size() > best_.size()) best_ = current_;
    if (i == n_ || current_.size() + (n_ - i) <= best_.size()) return;
    if (can_add(i)) {
      in_[i] = true;
      current_.push_back(i);
      recurse(i + 1);
      current_.pop_back();
      in_[i] = false;
    }
    if (current_.size() + (n_ - i - 1) > best_.size()) recurse(i + 1);
  }

  std::size_t n_;
  SearchBudget budget_;
  // closing_[c]: the other cells of each configuration whose largest cell is c.
  std::vector<std::vector<std::vector<std::size_t>>> closing_;
  std::vector<bool> in_;
  std::vector<std::size_t> current_, best_;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

ExtremalResult max_free_exact(const ExtremalProblem& problem, const SearchBudget& budget) {
  ExactSearch search(problem, budget);
  ExtremalResult result = search.run();
  verify_free(problem, result);
  return result;
}

ExtremalResult max_free_heuristic(const ExtremalProblem& problem, std::size_t iterations, std::uint64_t seed) {
  const std::size_t n = ground_size(problem);
  std::vector<std::vector<std::vector<std::size_t>>> touching(n);
  for (const auto& cfg : enumerate_configurations(problem.group, problem.subgroup, problem.kind, problem.policy,
                                                  problem.dimension, problem.limits)) {
    for (std::size_t c : cfg) {
      std::vector<std::size_t> rest;
      for (std::size_t x : cfg)
        if (x != c) rest.push_back(x);
      touching[c].push_back(std::move(rest));
    }
  }
  std::vector<bool> in(n, false);
  auto can_add = [&](std::size_t c) {
    for (const auto& rest : touching[c])
      if (std::all_of(rest.begin(), rest.end(), [&](std::size_t x) { return in[x]; })) return false;
    return true;
  };

  std::mt19937_64 rng(seed);
  auto shuffled = [&]() {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
    return order;
  };
  auto fill = [&]() {
    for (std::size_t c : shuffled())
      if (!in[c] && can_add(c)) in[c] = true;
  };
  auto members = [&]() {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < n; ++c)
      if (in[c]) out.push_back(c);
    return out;
  };

  ExtremalResult result;
  result.ground_size = n;
  fill();
  std::vector<std::size_t> best = members();
  for (std::size_t it = 0; it < iterations; ++it) {
    auto current = members();
    ++result.nodes;
    if (current.empty()) break;
    const std::size_t drop = current[uniform_below(rng, current.size())];
    in[drop] = false;
    fill();
    auto next = members();
    if (next.size() < current.size()) {
      std::fill(in.begin(), in.end(), false);
      for (std::size_t c : current) in[c] = true;
    } else if (next.size() > best.size()) {
      best = std::move(next);
    }
  }
  result.cells = best;
  result.size = best.size();
  result.optimal = false;
  verify_free(problem, result);
  return result;
}

}  // namespace roth
