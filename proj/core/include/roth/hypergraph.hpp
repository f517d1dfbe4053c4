#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "roth/bitset.hpp"
#include "roth/configurations.hpp"
#include "roth/tripartite.hpp"

namespace roth {

/// Clique spanned by a member v of S: vertices v_1..v_d and v_1 + ... + v_d.
struct GeneratorClique {
  std::vector<Element> vertices;
  /// Grid cell of the generating member.
  std::size_t source;
};

/// (d+1)-partite d-uniform hypergraph with classes V_i = a_i + K (i <= d) and
/// V_{d+1} = a_1 + ... + a_d + K for a subgroup K of an abelian group. An edge
/// is named by the class it omits and its d vertices in class order. The edge
/// set is the union of the generator cliques' edges. Immutable.
class KPartiteHypergraph {
 public:
  KPartiteHypergraph(const GridSet& set, const Subgroup& classes_subgroup, std::vector<Element> offsets);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Element>& vertices(std::size_t cls) const { return classes_.at(cls); }
  const std::vector<Element>& offsets() const noexcept { return offsets_; }
  const std::vector<GeneratorClique>& generators() const noexcept { return generators_; }

  /// `vertices` lists the d vertices of the classes other than `omitted`, in class order.
  bool has_edge(std::size_t omitted, std::span<const Element> vertices) const;
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool generators_edge_disjoint() const noexcept { return edge_disjoint_; }
  bool is_generator(std::span<const Element> clique) const;

  /// Calls fn(w) with w = (w_1..w_{d+1}) for every clique in lexicographic
  /// order; stops early when fn returns true.
  template <typename Fn>
  void for_each_clique(Fn&& fn) const {
    std::vector<std::size_t> loc(dimension_ + 1);
    std::vector<Element> clique(dimension_ + 1);
    bool stop = false;
    edges_[dimension_].for_each([&](std::size_t code) {
      if (stop) return;
      decode(code, loc);
      for (std::size_t last = 0; last < classes_[dimension_].size() && !stop; ++last) {
        loc[dimension_] = last;
        bool all = true;
        for (std::size_t o = 0; o < dimension_ && all; ++o) all = edges_[o].test(edge_code(o, loc));
        if (!all) continue;
        for (std::size_t c = 0; c <= dimension_; ++c) clique[c] = classes_[c][loc[c]];
        if (fn(std::span<const Element>(clique))) stop = true;
      }
    });
  }

  std::uint64_t clique_count() const;
  bool unique_clique_cover() const;

 private:
  // Local tuple (one index per class, d+1 entries) -> code of the edge omitting `omitted`.
  std::size_t edge_code(std::size_t omitted, std::span<const std::size_t> loc) const;
  // Code of an edge omitting class d -> local indices of classes 0..d-1.
  void decode(std::size_t code, std::vector<std::size_t>& loc) const;

  FiniteGroup group_;
  std::size_t dimension_;
  std::size_t width_;
  std::vector<Element> offsets_;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::vector<std::int64_t>> local_;
  std::vector<GeneratorClique> generators_;
  std::vector<Bitset> edges_;
  std::vector<std::vector<std::int64_t>> owner_;
  std::size_t edge_count_ = 0;
  bool edge_disjoint_ = true;
};

struct CornerBlockChoice {
  std::vector<Element> offsets;
  std::size_t count = 0;
  /// ceil(|S| / [G:H]^d).
  std::size_t bound = 0;
};

/// Coset block (a_1 + H) x ... x (a_d + H) holding the most members of S;
/// ties go to the lexicographically least representatives.
CornerBlockChoice pigeonhole_corner_block(const GridSet& set, const Subgroup& subgroup);

/// Throws NotAbelian for a non-abelian group; DimensionCap is enforced by GridSet.
KPartiteHypergraph build_corner_hypergraph(const GridSet& set, const Subgroup& subgroup,
                                           const std::vector<Element>& offsets);

CensusReport clique_census(const KPartiteHypergraph& graph);

/// The corner read off clique w: delta = w_{d+1} - (w_1 + ... + w_d), base (w_1..w_d).
ConfigWitness corner_witness_from_clique(const FiniteGroup& group, std::span<const Element> clique);

/// Searches the pigeonhole block (default), every block, or the single block
/// with classes equal to G (kFull, delta then filtered to H) for a clique with
/// w_{d+1} != w_1 + ... + w_d and returns the corner it encodes.
std::optional<ConfigWitness> find_corner_via_hypergraph(const GridSet& set, const Subgroup& subgroup,
                                                        ScopePolicy policy = ScopePolicy::kPigeonhole);

}  // namespace roth
