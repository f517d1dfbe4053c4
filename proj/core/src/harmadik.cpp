#include "roth/harmadik.hpp"

#include <algorithm>

namespace roth {

HarmadikResult harmadik_pipeline(const PairSet& set, const std::optional<Subgroup>& requested, const Limits& limits) {
  const FiniteGroup& g = set.group();
  HarmadikResult result;
  HarmadikTrace& trace = result.trace;

  const Subgroup h = requested ? *requested : max_abelian_subgroup(g, limits);
  if (!(h.parent() == g)) throw Error(ErrorCode::kNotASubgroup, "H belongs to another group");
  if (!h.is_abelian()) throw Error(ErrorCode::kNotAbelianSubgroup, "the two-stage pipeline needs an abelian H");
  trace.subgroup = h.elements();
  trace.subgroup_auto = !requested;

  auto stop = [&](std::string stage, std::string detail) {
    trace.failed_stage = std::move(stage);
    trace.detail = std::move(detail);
    return result;
  };

  const CosetPairChoice choice = pigeonhole_coset_pair(set, h);
  trace.coset_pair = choice;

  const TripartiteGraph first = build_stage1_graph(set, CosetScope{h, choice.left, choice.right});
  trace.stage1 = triangle_census(first);

  std::vector<StageOneTriple> all;
  first.for_each_triangle([&](Element a, Element b, Element c) {
    if (g.mul(a, b) != c) all.push_back({a, b, c, g.mul(c, g.inv(b)), g.mul(g.inv(a), c)});
    return false;
  });
  if (all.empty()) return stop("stage1", "no non-generator triangle in the coset-pair graph");

  std::vector<std::size_t> per_x(g.order(), 0);
  for (const auto& t : all) ++per_x[t.x];
  trace.distinct_x = static_cast<std::size_t>(std::count_if(per_x.begin(), per_x.end(), [](auto c) { return c > 0; }));
  const Element x = static_cast<Element>(std::max_element(per_x.begin(), per_x.end()) - per_x.begin());
  trace.x = x;
  for (const auto& t : all)
    if (t.x == x) trace.triples.push_back(t);

  std::array<std::vector<Element>, 3> classes;
  for (Element e : h.elements()) {
    classes[0].push_back(g.mul(choice.left, e));
    classes[1].push_back(g.mul(g.mul(choice.left, e), choice.right));
  }
  classes[2] = classes[1];
  std::vector<GeneratorTriangle> generators;
  for (std::size_t i = 0; i < trace.triples.size(); ++i) {
    const auto& t = trace.triples[i];
    generators.push_back({{t.a, g.mul(t.a, t.b), t.c}, i});
  }
  const TripartiteGraph second(std::move(classes), {"lH:a", "lHr:ab", "lHr:c"}, std::move(generators), g.order());
  trace.stage2 = triangle_census(second);

  std::optional<std::array<std::size_t, 3>> matched;
  second.for_each_triangle([&](Element A, Element B, Element C) {
    if (second.is_generator(A, B, C)) return false;
    const std::size_t i = *second.edge_owner(EdgeSlot::k12, A, B);
    const std::size_t j = *second.edge_owner(EdgeSlot::k23, B, C);
    const std::size_t k = *second.edge_owner(EdgeSlot::k13, A, C);
    if (i == j || j == k || i == k) {
      ++trace.stage2_rejected;
      return false;
    }
    matched = std::array{i, j, k};
    return true;
  });
  if (!matched) return stop("stage2", "no non-generator triangle in the fixed-x graph");
  trace.matched = matched;

  const auto& ti = trace.triples[(*matched)[0]];
  const auto& tj = trace.triples[(*matched)[1]];
  const auto& tk = trace.triples[(*matched)[2]];
  ConfigWitness w{ConfigKind::kHarmadik,
                  {{ti.a, g.mul(g.inv(ti.a), ti.c)}, {tk.a, g.mul(g.inv(tk.a), tk.c)}, {tj.a, g.mul(g.inv(tj.a), tj.c)}},
                  std::nullopt};
  if (auto v = validate_witness(set, h, w); !v) return stop("extract", "extracted triple rejected: " + v.reason);
  result.witness = std::move(w);
  return result;
}

ConfigWitness corollary_from_harmadik(const FiniteGroup& g, const ConfigWitness& w) {
  if (w.kind != ConfigKind::kHarmadik || w.points.size() != 3)
    throw Error(ErrorCode::kKindMismatch, "expected a harmadik witness");
  const Element a = w.points[0][0];
  const Element e = w.points[2][0];
  return ConfigWitness{ConfigKind::kCorollary, w.points, g.mul(g.inv(e), a)};
}

}  // namespace roth
