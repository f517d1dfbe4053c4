#include "roth/tripartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace roth {

TripartiteGraph::TripartiteGraph(std::array<std::vector<Element>, 3> classes, std::array<std::string, 3> tags,
                                 std::vector<GeneratorTriangle> generators, std::size_t universe)
    : classes_(std::move(classes)), tags_(std::move(tags)), generators_(std::move(generators)) {
  for (std::size_t c = 0; c < 3; ++c) {
    auto& cls = classes_[c];
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    local_[c].assign(universe, -1);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (cls[i] >= universe) throw std::out_of_range("vertex outside the element universe");
      local_[c][cls[i]] = static_cast<std::int64_t>(i);
    }
  }
  const std::size_t n1 = classes_[0].size(), n2 = classes_[1].size(), n3 = classes_[2].size();
  e12_.assign(n1, Bitset(n2));
  e13_.assign(n1, Bitset(n3));
  e23_.assign(n2, Bitset(n3));
  e12t_.assign(n2, Bitset(n1));
  e13t_.assign(n3, Bitset(n1));
  e23t_.assign(n3, Bitset(n2));
  owner_[0].assign(n1 * n2, -1);
  owner_[1].assign(n2 * n3, -1);
  owner_[2].assign(n1 * n3, -1);

  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const auto [a, b, c] = generators_[g].vertices;
    const auto i = local(0, a), j = local(1, b), k = local(2, c);
    if (!i || !j || !k) throw std::invalid_argument("generator triangle leaves the vertex classes");
    auto claim = [&](EdgeSlot slot, std::size_t u, std::size_t v) {
      auto& owner = owners(slot)[u * width(slot) + v];
      if (owner >= 0) {
        edge_disjoint_ = false;
      } else {
        owner = static_cast<std::int64_t>(g);
        ++edge_count_;
      }
    };
    claim(EdgeSlot::k12, *i, *j);
    claim(EdgeSlot::k23, *j, *k);
    claim(EdgeSlot::k13, *i, *k);
    e12_[*i].set(*j);
    e12t_[*j].set(*i);
    e13_[*i].set(*k);
    e13t_[*k].set(*i);
    e23_[*j].set(*k);
    e23t_[*k].set(*j);
    generator_codes_.push_back((std::uint64_t{*i} * n2 + *j) * n3 + *k);
  }
  std::sort(generator_codes_.begin(), generator_codes_.end());
  generator_codes_.erase(std::unique(generator_codes_.begin(), generator_codes_.end()), generator_codes_.end());
}

std::optional<std::size_t> TripartiteGraph::local(std::size_t cls, Element g) const {
  if (g >= local_[cls].size() || local_[cls][g] < 0) return std::nullopt;
  return static_cast<std::size_t>(local_[cls][g]);
}

std::pair<std::size_t, std::size_t> TripartiteGraph::classes_of(EdgeSlot slot) const {
  switch (slot) {
    case EdgeSlot::k12: return {0, 1};
    case EdgeSlot::k23: return {1, 2};
    case EdgeSlot::k13: return {0, 2};
  }
  return {0, 0};
}

std::size_t TripartiteGraph::width(EdgeSlot slot) const { return classes_[classes_of(slot).second].size(); }

std::vector<std::int64_t>& TripartiteGraph::owners(EdgeSlot slot) { return owner_[static_cast<std::size_t>(slot)]; }

const std::vector<std::int64_t>& TripartiteGraph::owners(EdgeSlot slot) const {
  return owner_[static_cast<std::size_t>(slot)];
}

std::optional<std::size_t> TripartiteGraph::edge_owner(EdgeSlot slot, Element u, Element v) const {
  const auto [cu, cv] = classes_of(slot);
  const auto i = local(cu, u), j = local(cv, v);
  if (!i || !j) return std::nullopt;
  const auto owner = owners(slot)[*i * width(slot) + *j];
  if (owner < 0) return std::nullopt;
  return static_cast<std::size_t>(owner);
}

bool TripartiteGraph::has_edge(EdgeSlot slot, Element u, Element v) const { return edge_owner(slot, u, v).has_value(); }

bool TripartiteGraph::is_generator(Element a, Element b, Element c) const {
  const auto i = local(0, a), j = local(1, b), k = local(2, c);
  if (!i || !j || !k) return false;
  const std::uint64_t code = (std::uint64_t{*i} * classes_[1].size() + *j) * classes_[2].size() + *k;
  return std::binary_search(generator_codes_.begin(), generator_codes_.end(), code);
}

std::uint64_t TripartiteGraph::triangle_count() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < e12_.size(); ++i)
    e12_[i].for_each([&](std::size_t j) { total += intersection_count(e13_[i], e23_[j]); });
  return total;
}

bool TripartiteGraph::unique_triangle_cover() const {
  for (std::size_t i = 0; i < e12_.size(); ++i) {
    bool ok = true;
    e12_[i].for_each([&](std::size_t j) { ok = ok && intersection_count(e13_[i], e23_[j]) == 1; });
    e13_[i].for_each([&](std::size_t k) { ok = ok && intersection_count(e12_[i], e23t_[k]) == 1; });
    if (!ok) return false;
  }
  for (std::size_t j = 0; j < e23_.size(); ++j) {
    bool ok = true;
    e23_[j].for_each([&](std::size_t k) { ok = ok && intersection_count(e12t_[j], e13t_[k]) == 1; });
    if (!ok) return false;
  }
  return true;
}

CensusReport triangle_census(const TripartiteGraph& graph) {
  CensusReport report;
  report.total_count = graph.triangle_count();
  std::uint64_t generators = 0;
  // Distinct generator triangles; a source may not appear twice.
  std::vector<std::array<Element, 3>> seen;
  for (const auto& g : graph.generators()) seen.push_back(g.vertices);
  std::sort(seen.begin(), seen.end());
  generators = static_cast<std::uint64_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
  report.generator_count = generators;
  report.non_generator_count = report.total_count - generators;
  report.edge_disjoint = graph.generators_edge_disjoint();
  report.unique_clique_cover = graph.unique_triangle_cover();
  return report;
}

CosetPairChoice pigeonhole_coset_pair(const PairSet& set, const Subgroup& subgroup) {
  const FiniteGroup& g = set.group();
  const auto left = cosets(g, subgroup, CosetSide::kLeft);
  const auto right = cosets(g, subgroup, CosetSide::kRight);
  const std::size_t blocks = left.blocks.size();
  std::vector<std::size_t> counts(blocks * blocks, 0);
  for (auto [a, b] : set.members()) ++counts[left.block_of[a] * blocks + right.block_of[b]];
  // Representatives increase with block index, so the first maximum is lexicographically least.
  const auto best = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  CosetPairChoice choice;
  choice.left = left.representatives[best / blocks];
  choice.right = right.representatives[best % blocks];
  choice.count = counts[best];
  choice.bound = (set.size() + blocks * blocks - 1) / (blocks * blocks);
  return choice;
}

TripartiteGraph build_stage1_graph(const PairSet& set, const Stage1Scope& scope) {
  const FiniteGroup& g = set.group();
  const std::size_t n = g.order();
  std::array<std::vector<Element>, 3> classes;
  std::array<std::string, 3> tags;
  if (const auto* coset = std::get_if<CosetScope>(&scope)) {
    if (!(coset->subgroup.parent() == g))
      throw Error(ErrorCode::kNotASubgroup, "scope subgroup belongs to another group");
    for (Element h : coset->subgroup.elements()) {
      classes[0].push_back(g.mul(coset->left, h));
      classes[1].push_back(g.mul(h, coset->right));
      classes[2].push_back(g.mul(g.mul(coset->left, h), coset->right));
    }
    tags = {"lH", "Hr", "lHr"};
  } else {
    for (std::size_t c = 0; c < 3; ++c)
      for (Element x = 0; x < n; ++x) classes[c].push_back(x);
    tags = {"G1", "G2", "G3"};
  }
  Bitset in_first(n), in_second(n);
  for (Element x : classes[0]) in_first.set(x);
  for (Element x : classes[1]) in_second.set(x);
  std::vector<GeneratorTriangle> generators;
  for (auto [a, b] : set.members())
    if (in_first.test(a) && in_second.test(b)) generators.push_back({{a, b, g.mul(a, b)}, std::size_t{a} * n + b});
  const bool empty_scope = generators.empty() && std::holds_alternative<CosetScope>(scope);
  TripartiteGraph graph(std::move(classes), std::move(tags), std::move(generators), n);
  if (empty_scope) graph.set_warning("ScopeMismatch: lH x Hr contains no member of S");
  return graph;
}

ConfigWitness elso_witness_from_triangle(const FiniteGroup& g, Element a, Element b, Element c) {
  const Element d = g.mul(g.mul(g.inv(a), c), g.inv(b));
  return ConfigWitness{ConfigKind::kElso, {{a, b}, {g.mul(c, g.inv(b)), b}, {a, g.mul(g.inv(a), c)}}, d};
}

std::string_view to_string(ScopePolicy policy) {
  switch (policy) {
    case ScopePolicy::kPigeonhole: return "pigeonhole";
    case ScopePolicy::kAllCosetPairs: return "all_coset_pairs";
    case ScopePolicy::kFull: return "full";
  }
  return "?";
}

ScopePolicy parse_scope_policy(std::string_view name) {
  if (name == "pigeonhole") return ScopePolicy::kPigeonhole;
  if (name == "all_coset_pairs" || name == "all") return ScopePolicy::kAllCosetPairs;
  if (name == "full") return ScopePolicy::kFull;
  throw Error(ErrorCode::kParse, "unknown scope policy '" + std::string(name) + "'");
}

namespace {

std::optional<ConfigWitness> first_non_generator(const TripartiteGraph& graph, const FiniteGroup& g,
                                                 const Subgroup& subgroup) {
  std::optional<ConfigWitness> found;
  graph.for_each_triangle([&](Element a, Element b, Element c) {
    if (g.mul(a, b) == c) return false;
    auto w = elso_witness_from_triangle(g, a, b, c);
    if (!subgroup.contains(*w.parameter)) return false;
    found = std::move(w);
    return true;
  });
  return found;
}

}  // namespace

std::optional<ConfigWitness> find_elso_via_graph(const PairSet& set, const Subgroup& subgroup, ScopePolicy policy) {
  const FiniteGroup& g = set.group();
  if (!(subgroup.parent() == g)) throw Error(ErrorCode::kNotASubgroup, "H belongs to another group");
  std::optional<ConfigWitness> found;
  switch (policy) {
    case ScopePolicy::kFull:
      found = first_non_generator(build_stage1_graph(set, FullScope{}), g, subgroup);
      break;
    case ScopePolicy::kPigeonhole: {
      const auto choice = pigeonhole_coset_pair(set, subgroup);
      found = first_non_generator(build_stage1_graph(set, CosetScope{subgroup, choice.left, choice.right}), g,
                                  subgroup);
      break;
    }
    case ScopePolicy::kAllCosetPairs: {
      const auto left = cosets(g, subgroup, CosetSide::kLeft);
      const auto right = cosets(g, subgroup, CosetSide::kRight);
      for (Element l : left.representatives) {
        for (Element r : right.representatives) {
          found = first_non_generator(build_stage1_graph(set, CosetScope{subgroup, l, r}), g, subgroup);
          if (found) break;
        }
        if (found) break;
      }
      break;
    }
  }
  if (found) {
    if (auto v = validate_witness(set, subgroup, *found); !v)
      throw std::logic_error("graph pipeline produced an invalid elso witness: " + v.reason);
  }
  return found;
}

}  // namespace roth
