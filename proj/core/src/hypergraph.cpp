#include "roth/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace roth {

namespace {

Element sum_of(const FiniteGroup& g, std::span<const Element> xs) {
  Element s = FiniteGroup::identity();
  for (Element x : xs) s = g.mul(s, x);
  return s;
}

}  // namespace

KPartiteHypergraph::KPartiteHypergraph(const GridSet& set, const Subgroup& k, std::vector<Element> offsets)
    : group_(set.group()), dimension_(set.dimension()), width_(k.order()), offsets_(std::move(offsets)) {
  const FiniteGroup& g = group_;
  if (!g.is_abelian()) throw Error(ErrorCode::kNotAbelian, "corner hypergraphs need an abelian group");
  if (!(k.parent() == g)) throw Error(ErrorCode::kNotASubgroup, "H belongs to another group");
  if (offsets_.size() != dimension_) throw std::invalid_argument("need one offset per coordinate");
  const std::size_t d = dimension_;

  classes_.resize(d + 1);
  local_.assign(d + 1, std::vector<std::int64_t>(g.order(), -1));
  auto fill = [&](std::size_t cls, Element offset) {
    for (Element h : k.elements()) classes_[cls].push_back(g.mul(offset, h));
    std::sort(classes_[cls].begin(), classes_[cls].end());
    for (std::size_t i = 0; i < classes_[cls].size(); ++i) local_[cls][classes_[cls][i]] = static_cast<std::int64_t>(i);
  };
  for (std::size_t i = 0; i < d; ++i) fill(i, offsets_[i]);
  fill(d, sum_of(g, offsets_));

  std::size_t slots = 1;
  for (std::size_t i = 0; i < d; ++i) slots *= width_;
  edges_.assign(d + 1, Bitset(slots));
  owner_.assign(d + 1, std::vector<std::int64_t>(slots, -1));

  std::vector<std::size_t> loc(d + 1);
  set.membership().for_each([&](std::size_t cell) {
    const auto v = set.decode(cell);
    for (std::size_t i = 0; i < d; ++i) {
      if (local_[i][v[i]] < 0) return;
      loc[i] = static_cast<std::size_t>(local_[i][v[i]]);
    }
    const Element s = sum_of(g, v);
    loc[d] = static_cast<std::size_t>(local_[d][s]);
    const auto id = static_cast<std::int64_t>(generators_.size());
    auto vertices = v;
    vertices.push_back(s);
    generators_.push_back({std::move(vertices), cell});
    for (std::size_t o = 0; o <= d; ++o) {
      const std::size_t code = edge_code(o, loc);
      if (owner_[o][code] >= 0) {
        edge_disjoint_ = false;
      } else {
        owner_[o][code] = id;
        edges_[o].set(code);
        ++edge_count_;
      }
    }
  });
}

std::size_t KPartiteHypergraph::edge_code(std::size_t omitted, std::span<const std::size_t> loc) const {
  std::size_t code = 0;
  for (std::size_t c = 0; c <= dimension_; ++c)
    if (c != omitted) code = code * width_ + loc[c];
  return code;
}

void KPartiteHypergraph::decode(std::size_t code, std::vector<std::size_t>& loc) const {
  for (std::size_t c = dimension_; c-- > 0;) {
    loc[c] = code % width_;
    code /= width_;
  }
}

bool KPartiteHypergraph::has_edge(std::size_t omitted, std::span<const Element> vertices) const {
  if (omitted > dimension_ || vertices.size() != dimension_) return false;
  std::vector<std::size_t> loc(dimension_ + 1, 0);
  std::size_t next = 0;
  for (std::size_t c = 0; c <= dimension_; ++c) {
    if (c == omitted) continue;
    const Element v = vertices[next++];
    if (v >= local_[c].size() || local_[c][v] < 0) return false;
    loc[c] = static_cast<std::size_t>(local_[c][v]);
  }
  return edges_[omitted].test(edge_code(omitted, loc));
}

bool KPartiteHypergraph::is_generator(std::span<const Element> clique) const {
  return clique.size() == dimension_ + 1 && sum_of(group_, clique.first(dimension_)) == clique[dimension_];
}

std::uint64_t KPartiteHypergraph::clique_count() const {
  std::uint64_t total = 0;
  for_each_clique([&](std::span<const Element>) {
    ++total;
    return false;
  });
  return total;
}

bool KPartiteHypergraph::unique_clique_cover() const {
  std::vector<std::vector<std::uint32_t>> hits(dimension_ + 1, std::vector<std::uint32_t>(edges_[0].size(), 0));
  std::vector<std::size_t> loc(dimension_ + 1);
  for_each_clique([&](std::span<const Element> w) {
    for (std::size_t c = 0; c <= dimension_; ++c) loc[c] = static_cast<std::size_t>(local_[c][w[c]]);
    for (std::size_t o = 0; o <= dimension_; ++o) ++hits[o][edge_code(o, loc)];
    return false;
  });
  for (std::size_t o = 0; o <= dimension_; ++o) {
    bool ok = true;
    edges_[o].for_each([&](std::size_t code) { ok = ok && hits[o][code] == 1; });
    if (!ok) return false;
  }
  return true;
}

CensusReport clique_census(const KPartiteHypergraph& graph) {
  CensusReport report;
  graph.for_each_clique([&](std::span<const Element> w) {
    ++report.total_count;
    if (graph.is_generator(w)) ++report.generator_count;
    return false;
  });
  report.non_generator_count = report.total_count - report.generator_count;
  report.edge_disjoint = graph.generators_edge_disjoint();
  report.unique_clique_cover = graph.unique_clique_cover();
  return report;
}

CornerBlockChoice pigeonhole_corner_block(const GridSet& set, const Subgroup& subgroup) {
  const FiniteGroup& g = set.group();
  const auto partition = cosets(g, subgroup, CosetSide::kLeft);
  const std::size_t blocks = partition.blocks.size();
  const std::size_t d = set.dimension();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < d; ++i) combos *= blocks;
  std::vector<std::size_t> counts(combos, 0);
  set.membership().for_each([&](std::size_t cell) {
    std::size_t code = 0;
    for (Element x : set.decode(cell)) code = code * blocks + partition.block_of[x];
    ++counts[code];
  });
  auto best = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  CornerBlockChoice choice;
  choice.count = counts[best];
  choice.bound = (set.size() + combos - 1) / combos;
  choice.offsets.assign(d, 0);
  for (std::size_t i = d; i-- > 0;) {
    choice.offsets[i] = partition.representatives[best % blocks];
    best /= blocks;
  }
  return choice;
}

KPartiteHypergraph build_corner_hypergraph(const GridSet& set, const Subgroup& subgroup,
                                           const std::vector<Element>& offsets) {
  return KPartiteHypergraph(set, subgroup, offsets);
}

ConfigWitness corner_witness_from_clique(const FiniteGroup& g, std::span<const Element> clique) {
  const std::size_t d = clique.size() - 1;
  const Element delta = g.mul(clique[d], g.inv(sum_of(g, clique.first(d))));
  std::vector<Element> base(clique.begin(), clique.begin() + static_cast<std::ptrdiff_t>(d));
  ConfigWitness w{ConfigKind::kCorner, {base}, delta};
  for (std::size_t i = 0; i < d; ++i) {
    w.points.push_back(base);
    w.points.back()[i] = g.mul(base[i], delta);
  }
  return w;
}

std::optional<ConfigWitness> find_corner_via_hypergraph(const GridSet& set, const Subgroup& subgroup,
                                                        ScopePolicy policy) {
  const FiniteGroup& g = set.group();
  if (!g.is_abelian()) throw Error(ErrorCode::kNotAbelian, "corner hypergraphs need an abelian group");
  const std::size_t d = set.dimension();
  auto search = [&](const Subgroup& k, const std::vector<Element>& offsets) -> std::optional<ConfigWitness> {
    const KPartiteHypergraph graph(set, k, offsets);
    std::optional<ConfigWitness> found;
    graph.for_each_clique([&](std::span<const Element> w) {
      if (graph.is_generator(w)) return false;
      auto witness = corner_witness_from_clique(g, w);
      if (!subgroup.contains(*witness.parameter)) return false;
      found = std::move(witness);
      return true;
    });
    return found;
  };

  std::optional<ConfigWitness> found;
  switch (policy) {
    case ScopePolicy::kPigeonhole:
      found = search(subgroup, pigeonhole_corner_block(set, subgroup).offsets);
      break;
    case ScopePolicy::kFull:
      found = search(Subgroup::whole(g), std::vector<Element>(d, 0));
      break;
    case ScopePolicy::kAllCosetPairs: {
      const auto reps = cosets(g, subgroup, CosetSide::kLeft).representatives;
      std::vector<std::size_t> idx(d, 0);
      while (!found) {
        std::vector<Element> offsets(d);
        for (std::size_t i = 0; i < d; ++i) offsets[i] = reps[idx[i]];
        found = search(subgroup, offsets);
        std::size_t pos = d;
        while (pos > 0 && ++idx[pos - 1] == reps.size()) idx[--pos] = 0;
        if (pos == 0) break;
      }
      break;
    }
  }
  if (found) {
    if (auto v = validate_witness(set, subgroup, *found); !v)
      throw std::logic_error("hypergraph pipeline produced an invalid corner: " + v.reason);
  }
  return found;
}

}  // namespace roth
