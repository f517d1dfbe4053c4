#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "roth/bitset.hpp"
#include "roth/configurations.hpp"
#include "roth/sets.hpp"
#include "roth/subgroup.hpp"

namespace roth {

/// A triangle created directly from a source record. `source` is the pair
/// cell a*|G|+b for stage-1 graphs and the triple index for stage-2 graphs.
struct GeneratorTriangle {
  std::array<Element, 3> vertices;
  std::size_t source;
};

enum class EdgeSlot { k12, k23, k13 };

/// Three vertex classes of group elements and the edges of a family of
/// generator triangles. The edge set is exactly the union of generator edges.
/// Classes are sorted, and triangles are reported in lexicographic order of
/// (class 1, class 2, class 3) vertices. Immutable after construction.
class TripartiteGraph {
 public:
  /// `universe` is the number of group elements; vertices are elements < universe.
  TripartiteGraph(std::array<std::vector<Element>, 3> classes, std::array<std::string, 3> tags,
                  std::vector<GeneratorTriangle> generators, std::size_t universe);

  const std::vector<Element>& vertices(std::size_t cls) const { return classes_.at(cls); }
  const std::string& tag(std::size_t cls) const { return tags_.at(cls); }
  const std::vector<GeneratorTriangle>& generators() const noexcept { return generators_; }

  bool has_edge(EdgeSlot slot, Element u, Element v) const;
  /// Index into generators() of the first generator using the edge.
  std::optional<std::size_t> edge_owner(EdgeSlot slot, Element u, Element v) const;
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool generators_edge_disjoint() const noexcept { return edge_disjoint_; }
  bool is_generator(Element a, Element b, Element c) const;

  /// Calls fn(a, b, c) for every triangle; stops early when fn returns true.
  template <typename Fn>
  void for_each_triangle(Fn&& fn) const {
    for (std::size_t i = 0; i < e12_.size(); ++i) {
      bool stop = false;
      e12_[i].for_each([&](std::size_t j) {
        if (stop) return;
        for_each_common(e13_[i], e23_[j], [&](std::size_t k) {
          if (!stop && fn(classes_[0][i], classes_[1][j], classes_[2][k])) stop = true;
        });
      });
      if (stop) return;
    }
  }

  std::uint64_t triangle_count() const;
  /// Every edge lies in exactly one triangle.
  bool unique_triangle_cover() const;

  /// Non-fatal diagnostic set at construction (e.g. an empty coset scope).
  const std::optional<std::string>& warning() const noexcept { return warning_; }
  void set_warning(std::string w) { warning_ = std::move(w); }

 private:
  std::optional<std::size_t> local(std::size_t cls, Element g) const;
  std::vector<std::int64_t>& owners(EdgeSlot slot);
  const std::vector<std::int64_t>& owners(EdgeSlot slot) const;
  std::size_t width(EdgeSlot slot) const;
  std::pair<std::size_t, std::size_t> classes_of(EdgeSlot slot) const;

  std::array<std::vector<Element>, 3> classes_;
  std::array<std::string, 3> tags_;
  std::vector<GeneratorTriangle> generators_;
  std::array<std::vector<std::int64_t>, 3> local_;
  // Rows: e12_[v1] over class 2, e13_[v1] over class 3, e23_[v2] over class 3,
  // plus the transposes used for per-edge triangle counts.
  std::vector<Bitset> e12_, e13_, e23_, e12t_, e13t_, e23t_;
  std::array<std::vector<std::int64_t>, 3> owner_;
  std::vector<std::uint64_t> generator_codes_;
  std::size_t edge_count_ = 0;
  bool edge_disjoint_ = true;
  std::optional<std::string> warning_;
};

struct CensusReport {
  std::uint64_t generator_count = 0;
  std::uint64_t total_count = 0;
  std::uint64_t non_generator_count = 0;
  bool edge_disjoint = true;
  bool unique_clique_cover = true;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

CensusReport triangle_census(const TripartiteGraph& graph);

struct CosetPairChoice {
  Element left = 0;
  Element right = 0;
  std::size_t count = 0;
  /// ceil(|S| / [G:H]^2), the averaging lower bound on count.
  std::size_t bound = 0;
};

/// Left coset lH and right coset Hr maximising |(lH x Hr) n S|; ties go to
/// the lexicographically least (l, r) of block representatives.
CosetPairChoice pigeonhole_coset_pair(const PairSet& set, const Subgroup& subgroup);

struct FullScope {};
struct CosetScope {
  Subgroup subgroup;
  Element left;
  Element right;
};
using Stage1Scope = std::variant<FullScope, CosetScope>;

/// Vertex classes (G, G, G) or (lH, Hr, lHr). Each member (g1, g2) of S inside
/// the scope contributes the generator triangle (g1, g2, g1 g2). An empty
/// coset scope yields an empty graph carrying a ScopeMismatch warning.
TripartiteGraph build_stage1_graph(const PairSet& set, const Stage1Scope& scope);

/// The elso witness (a,b), (cb^-1, b), (a, a^-1 c) read off triangle (a, b, c),
/// with d = a^-1 c b^-1.
ConfigWitness elso_witness_from_triangle(const FiniteGroup& group, Element a, Element b, Element c);

enum class ScopePolicy { kPigeonhole, kAllCosetPairs, kFull };

std::string_view to_string(ScopePolicy policy);
ScopePolicy parse_scope_policy(std::string_view name);

/// Searches the scoped stage-1 graph(s) for a non-generator triangle and
/// extracts an elso witness. Coset scopes force d into H. The full scope
/// skips triangles whose d falls outside H. NotFound (nullopt) only means no
/// suitable triangle exists in the searched scope.
std::optional<ConfigWitness> find_elso_via_graph(const PairSet& set, const Subgroup& subgroup, ScopePolicy policy);

}  // namespace roth
