#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cli.hpp"
#include "roth/roth.hpp"

namespace roth::cli {

namespace {

struct Property {
  std::string name;
  std::function<std::string()> check;  // empty string means pass
};

std::vector<FiniteGroup> suite_groups(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  for (const auto& spec : builtin_group_specs(max_order)) out.push_back(make_named_group(spec));
  return out;
}

std::string describe(const FiniteGroup& g, const Subgroup& h) {
  return g.name() + " with |H| = " + std::to_string(h.order());
}

}  // namespace

bool run_invariant_suite(std::size_t max_order, std::uint64_t seed, std::ostream& out) {
  const auto groups = suite_groups(max_order);
  const std::vector<double> densities{0.2, 0.5, 0.8};
  std::vector<Property> props;

  props.push_back({"group axioms", [&]() -> std::string {
                     for (const auto& g : groups)
                       if (find_axiom_violation(g.table())) return g.name() + " violates an axiom";
                     return {};
                   }});

  props.push_back({"lagrange and sylow orders", [&]() -> std::string {
                     for (const auto& g : groups) {
                       if (g.order() > Limits{}.max_subgroup_enumeration_order) continue;
                       for (const auto& h : all_subgroups(g))
                         if (g.order() % h.order() != 0) return g.name() + ": subgroup order does not divide";
                       for (std::size_t p = 2; p <= g.order(); ++p) {
                         if (!is_prime(p)) continue;
                         if (sylow_subgroup(g, p).order() != p_part(g.order(), p))
                           return g.name() + ": wrong sylow order for p = " + std::to_string(p);
                       }
                     }
                     return {};
                   }});

  props.push_back({"graph and brute-force elso agree", [&]() -> std::string {
                     std::mt19937_64 rng(seed);
                     for (const auto& g : groups) {
                       if (g.order() > 8) continue;
                       for (const auto& h : all_subgroups(g)) {
                         if (h.order() < 2) continue;
                         for (double d : densities) {
                           const auto s = PairSet::random(g, d, rng());
                           const bool graph = find_elso_via_graph(s, h, ScopePolicy::kAllCosetPairs).has_value();
                           const bool brute = find_elso(s, h).has_value();
                           if (graph != brute) return describe(g, h) + ": existence disagrees";
                         }
                       }
                     }
                     return {};
                   }});

  props.push_back({"non-generator triangles count elso configurations", [&]() -> std::string {
                     std::mt19937_64 rng(seed + 1);
                     for (const auto& g : groups) {
                       if (g.order() > 8) continue;
                       for (const auto& h : all_subgroups(g)) {
                         if (h.order() < 2) continue;
                         const auto s = PairSet::random(g, 0.5, rng());
                         const auto left = cosets(g, h, CosetSide::kLeft);
                         const auto right = cosets(g, h, CosetSide::kRight);
                         std::uint64_t total = 0;
                         for (Element l : left.representatives)
                           for (Element r : right.representatives)
                             total += triangle_census(build_stage1_graph(s, CosetScope{h, l, r})).non_generator_count;
                         if (total != count_elso(s, h)) return describe(g, h) + ": counts differ";
                       }
                     }
                     return {};
                   }});

  props.push_back({"generator triangles are edge-disjoint", [&]() -> std::string {
                     std::mt19937_64 rng(seed + 2);
                     for (const auto& g : groups) {
                       if (g.order() > 16) continue;
                       const auto s = PairSet::random(g, 0.6, rng());
                       if (!build_stage1_graph(s, FullScope{}).generators_edge_disjoint())
                         return g.name() + ": generator triangles share an edge";
                     }
                     return {};
                   }});

  props.push_back({"pigeonhole coset pair meets its bound", [&]() -> std::string {
                     std::mt19937_64 rng(seed + 3);
                     for (const auto& g : groups) {
                       if (g.order() > 16) continue;
                       for (const auto& h : all_subgroups(g)) {
                         const auto s = PairSet::random(g, std::uniform_real_distribution<double>(0, 1)(rng), rng());
                         const auto choice = pigeonhole_coset_pair(s, h);
                         if (choice.count < choice.bound) return describe(g, h) + ": count below bound";
                       }
                     }
                     return {};
                   }});

  props.push_back({"returned witnesses validate", [&]() -> std::string {
                     std::mt19937_64 rng(seed + 4);
                     for (const auto& g : groups) {
                       if (g.order() > 8) continue;
                       const auto whole = Subgroup::whole(g);
                       const auto s = PairSet::random(g, 0.7, rng());
                       const auto e = ElementSet::random(g, 0.7, rng());
                       std::vector<std::pair<AnySet, std::optional<ConfigWitness>>> cases{
                           {s, find_elso(s, whole)},
                           {s, find_harmadik(s)},
                           {s, find_quadruple(s)},
                           {s, find_corollary_triple(s, whole)},
                           {e, find_ap3(e, whole)},
                           {e, find_ksv(e)},
                           {s, harmadik_pipeline(s, std::nullopt).witness}};
                       if (g.is_abelian()) {
                         const auto grid = GridSet::random(g, 2, 0.7, rng());
                         cases.emplace_back(grid, find_corner(grid, whole));
                         cases.emplace_back(grid, find_corner_via_hypergraph(grid, whole));
                       }
                       for (const auto& [set, w] : cases) {
                         if (!w) continue;
                         const auto h = w->kind == ConfigKind::kHarmadik ? max_abelian_subgroup(g) : whole;
                         if (auto v = validate_witness(set, h, *w); !v)
                           return g.name() + ": " + std::string(to_string(w->kind)) + " witness rejected: " + v.reason;
                       }
                     }
                     return {};
                   }});

  props.push_back({"ksv count of the whole group is |G|^2", [&]() -> std::string {
                     for (const auto& g : groups)
                       if (count_ksv(ElementSet::full(g)) != std::uint64_t{g.order()} * g.order())
                         return g.name() + ": wrong count";
                     return {};
                   }});

  props.push_back({"boolean groups have no ap3", [&]() -> std::string {
                     for (const auto& g : groups) {
                       const auto facts = group_facts(g);
                       if (!facts.is_abelian || facts.exponent > 2) continue;
                       if (find_ap3(ElementSet::full(g), Subgroup::whole(g))) return g.name() + ": ap3 found";
                     }
                     return {};
                   }});

  props.push_back({"max abelian subgroup order is at least ln|G|", [&]() -> std::string {
                     for (const auto& g : groups) {
                       if (g.order() > Limits{}.max_subgroup_enumeration_order) continue;
                       if (static_cast<double>(max_abelian_subgroup(g).order()) < std::log(double(g.order())))
                         return g.name() + ": too small";
                     }
                     return {};
                   }});

  props.push_back({"heuristic never beats exact", [&]() -> std::string {
                     for (std::size_t n = 3; n <= 9; ++n) {
                       const auto g = make_named_group(GroupSpec::cyclic(n));
                       ExtremalProblem problem{g, Subgroup::whole(g), ConfigKind::kAp3};
                       const auto exact = max_free_exact(problem);
                       const auto heur = max_free_heuristic(problem, 200, seed);
                       if (heur.size > exact.size) return "Z" + std::to_string(n) + ": heuristic exceeds exact";
                     }
                     return {};
                   }});

  bool all = true;
  for (const auto& p : props) {
    std::string failure;
    try {
      failure = p.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      out << "PASS " << p.name << '\n';
    } else {
      all = false;
      out << "FAIL " << p.name << ": " << failure << '\n';
    }
  }
  return all;
}

}  // namespace roth::cli
