#include "roth/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "roth/named_groups.hpp"

namespace roth {

namespace {

// Closure of `seed` under right multiplication by the generators. In a finite
// group this is the generated subgroup.
Bitset close_under(const FiniteGroup& group, Bitset members, std::span<const Element> generators) {
  std::vector<Element> frontier;
  members.set(FiniteGroup::identity());
  members.for_each([&](std::size_t g) { frontier.push_back(static_cast<Element>(g)); });
  for (Element g : generators) {
    if (!members.test(g)) {
      members.set(g);
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element g : generators) {
      const Element y = group.mul(x, g);
      if (!members.test(y)) {
        members.set(y);
        frontier.push_back(y);
      }
    }
  }
  return members;
}

std::vector<Element> to_elements(const Bitset& members) {
  std::vector<Element> out;
  members.for_each([&](std::size_t g) { out.push_back(static_cast<Element>(g)); });
  return out;
}

}  // namespace

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), members_(parent_.order()) {
  for (Element g : elements_) members_.set(g);
}

Subgroup Subgroup::from_elements(const FiniteGroup& parent, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != FiniteGroup::identity())
    throw Error(ErrorCode::kNotASubgroup, "subset does not contain the identity");
  if (elements.back() >= parent.order())
    throw Error(ErrorCode::kNotASubgroup, "element " + std::to_string(elements.back()) + " is not in " +
                                              parent.name());
  Subgroup h(parent, std::move(elements));
  for (Element a : h.elements_) {
    if (!h.contains(parent.inv(a)))
      throw Error(ErrorCode::kNotASubgroup, "inverse of " + std::to_string(a) + " missing");
    for (Element b : h.elements_)
      if (!h.contains(parent.mul(a, b)))
        throw Error(ErrorCode::kNotASubgroup, "product " + std::to_string(a) + "*" + std::to_string(b) +
                                                  " leaves the subset");
  }
  return h;
}

Subgroup Subgroup::generated_by(const FiniteGroup& parent, std::span<const Element> generators) {
  for (Element g : generators)
    if (g >= parent.order())
      throw Error(ErrorCode::kNotASubgroup, "generator " + std::to_string(g) + " is not in " + parent.name());
  return Subgroup(parent, to_elements(close_under(parent, Bitset(parent.order()), generators)));
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Element> all(parent.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(parent, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return Subgroup(parent, {FiniteGroup::identity()}); }

bool Subgroup::is_abelian() const noexcept {
  for (Element a : elements_)
    for (Element b : elements_)
      if (parent_.mul(a, b) != parent_.mul(b, a)) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group, const Limits& limits) {
  if (group.order() > limits.max_subgroup_enumeration_order)
    throw Error(ErrorCode::kOverflowGuard, "subgroup enumeration of " + group.name() + " (order " +
                                               std::to_string(group.order()) + ") exceeds cap " +
                                               std::to_string(limits.max_subgroup_enumeration_order));
  const std::size_t n = group.order();
  // Each subgroup is kept with a generating list so joins stay cheap.
  std::set<Bitset> seen;
  std::vector<std::pair<Bitset, std::vector<Element>>> found;
  auto add = [&](Bitset members, std::vector<Element> gens) {
    if (seen.insert(members).second) found.emplace_back(std::move(members), std::move(gens));
  };
  add(close_under(group, Bitset(n), {}), {});
  for (Element g = 0; g < n; ++g) add(close_under(group, Bitset(n), std::span(&g, 1)), {g});
  // Join every subgroup with every element outside it until nothing new appears.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element g = 0; g < n; ++g) {
      if (found[i].first.test(g)) continue;
      std::vector<Element> gens = found[i].second;
      gens.push_back(g);
      add(close_under(group, found[i].first, gens), gens);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [members, gens] : found) out.push_back(Subgroup::from_elements(group, to_elements(members)));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::size_t p_part(std::size_t n, std::size_t p) noexcept {
  std::size_t part = 1;
  while (p > 1 && n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

Subgroup sylow_subgroup(const FiniteGroup& group, std::size_t p, const Limits& limits) {
  if (!is_prime(p)) throw Error(ErrorCode::kUnsupportedParameter, std::to_string(p) + " is not prime");
  const std::size_t target = p_part(group.order(), p);
  if (target == 1) return Subgroup::trivial(group);
  for (auto& h : all_subgroups(group, limits))
    if (h.order() == target) return h;
  throw Error(ErrorCode::kNotASubgroup, "no Sylow " + std::to_string(p) + "-subgroup found");
}

Subgroup max_abelian_subgroup(const FiniteGroup& group, const Limits& limits) {
  auto subgroups = all_subgroups(group, limits);
  std::optional<Subgroup> best;
  for (auto& h : subgroups) {
    // Sorted by order then lexicographically: keep the first of each larger order.
    if (h.is_abelian() && (!best || h.order() > best->order())) best = h;
  }
  return *best;
}

CosetPartition cosets(const FiniteGroup& group, const Subgroup& subgroup, CosetSide side) {
  if (!(subgroup.parent() == group))
    throw Error(ErrorCode::kNotASubgroup, "subgroup belongs to " + subgroup.parent().name() + ", not " +
                                              group.name());
  const std::size_t n = group.order();
  CosetPartition partition{subgroup, side, {}, {}, std::vector<std::size_t>(n, n)};
  for (Element g = 0; g < n; ++g) {
    if (partition.block_of[g] != n) continue;
    std::vector<Element> block;
    block.reserve(subgroup.order());
    for (Element h : subgroup.elements())
      block.push_back(side == CosetSide::kLeft ? group.mul(g, h) : group.mul(h, g));
    std::sort(block.begin(), block.end());
    for (Element x : block) partition.block_of[x] = partition.blocks.size();
    partition.representatives.push_back(g);
    partition.blocks.push_back(std::move(block));
  }
  return partition;
}

GroupFacts group_facts(const FiniteGroup& group) {
  GroupFacts facts;
  const std::size_t n = group.order();
  facts.order = n;
  facts.is_abelian = group.is_abelian();
  for (Element g = 0; g < n; ++g) {
    facts.element_orders.push_back(group.element_order(g));
    facts.exponent = std::lcm(facts.exponent, group.element_order(g));
    bool central = true;
    for (Element h = 0; h < n && central; ++h) central = group.mul(g, h) == group.mul(h, g);
    if (central) ++facts.center_size;
  }
  for (std::size_t p = 2; p <= n; ++p) {
    if (is_prime(p) && n % p == 0) {
      if (p_part(n, p) == n) facts.p_group_prime = p;
      break;
    }
  }
  return facts;
}

}  // namespace roth
