#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "roth/bitset.hpp"
#include "roth/group.hpp"

namespace roth {

/// A subgroup H of a parent group, stored as a sorted element list plus a
/// membership bitset. Construction validates closure; a Subgroup value always
/// satisfies the subgroup axioms.
class Subgroup {
 public:
  /// Throws Error(kNotASubgroup) when the set is not closed under the product
  /// or inverses, or lacks the identity. Elements may be unsorted or repeated.
  static Subgroup from_elements(const FiniteGroup& parent, std::vector<Element> elements);
  /// Smallest subgroup containing the generators.
  static Subgroup generated_by(const FiniteGroup& parent, std::span<const Element> generators);
  static Subgroup whole(const FiniteGroup& parent);
  static Subgroup trivial(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t index() const noexcept { return parent_.order() / elements_.size(); }
  bool contains(Element g) const noexcept { return members_.test(g); }
  const Bitset& members() const noexcept { return members_; }
  bool is_abelian() const noexcept;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(FiniteGroup parent, std::vector<Element> elements);

  FiniteGroup parent_;
  std::vector<Element> elements_;
  Bitset members_;
};

/// Every subgroup of the group, sorted by order and then lexicographically by
/// element list. Throws OverflowGuard above limits.max_subgroup_enumeration_order.
std::vector<Subgroup> all_subgroups(const FiniteGroup& group, const Limits& limits = {});

/// Lexicographically least subgroup of order p^v, where p^v exactly divides
/// |G|. Returns the trivial subgroup when p does not divide |G|. Throws
/// UnsupportedParameter when p is not prime.
Subgroup sylow_subgroup(const FiniteGroup& group, std::size_t p, const Limits& limits = {});

/// An abelian subgroup of maximum order, lexicographically least among ties.
Subgroup max_abelian_subgroup(const FiniteGroup& group, const Limits& limits = {});

enum class CosetSide { kLeft, kRight };

/// Partition of the parent group into cosets gH (left) or Hg (right). Blocks
/// are sorted; representatives are block minima, in increasing order.
struct CosetPartition {
  Subgroup subgroup;
  CosetSide side;
  std::vector<Element> representatives;
  std::vector<std::vector<Element>> blocks;
  /// block_of[g] is the index of the block containing g.
  std::vector<std::size_t> block_of;
};

/// Throws Error(kNotASubgroup) when H belongs to a different group.
CosetPartition cosets(const FiniteGroup& group, const Subgroup& subgroup, CosetSide side);

struct GroupFacts {
  std::size_t order = 0;
  bool is_abelian = false;
  /// Prime p when |G| is a power of p (|G| > 1).
  std::optional<std::size_t> p_group_prime;
  std::vector<std::size_t> element_orders;
  std::size_t center_size = 0;
  std::size_t exponent = 1;
};

GroupFacts group_facts(const FiniteGroup& group);

/// Exact power of p dividing n.
std::size_t p_part(std::size_t n, std::size_t p) noexcept;

}  // namespace roth
