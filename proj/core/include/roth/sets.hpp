#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "roth/bitset.hpp"
#include "roth/group.hpp"

namespace roth {

/// S subset of G x G, stored densely; cell (a, b) has index a * |G| + b.
class PairSet {
 public:
  PairSet(FiniteGroup group, Bitset membership);

  static PairSet empty(const FiniteGroup& group);
  static PairSet full(const FiniteGroup& group);
  static PairSet from_pairs(const FiniteGroup& group, std::span<const std::pair<Element, Element>> pairs);
  /// Exactly floor(density * |G|^2) cells chosen uniformly without replacement.
  static PairSet random(const FiniteGroup& group, double density, std::uint64_t seed);

  const FiniteGroup& group() const noexcept { return group_; }
  const Bitset& membership() const noexcept { return membership_; }
  std::size_t size() const noexcept { return size_; }
  double density() const noexcept;
  bool contains(Element a, Element b) const noexcept { return membership_.test(a * group_.order() + b); }
  std::vector<std::pair<Element, Element>> members() const;

 private:
  FiniteGroup group_;
  Bitset membership_;
  std::size_t size_;
};

/// A subset of G.
class ElementSet {
 public:
  ElementSet(FiniteGroup group, Bitset membership);

  static ElementSet empty(const FiniteGroup& group);
  static ElementSet full(const FiniteGroup& group);
  static ElementSet from_elements(const FiniteGroup& group, std::span<const Element> elements);
  static ElementSet random(const FiniteGroup& group, double density, std::uint64_t seed);

  const FiniteGroup& group() const noexcept { return group_; }
  const Bitset& membership() const noexcept { return membership_; }
  std::size_t size() const noexcept { return size_; }
  bool contains(Element g) const noexcept { return membership_.test(g); }
  std::vector<Element> members() const;

 private:
  FiniteGroup group_;
  Bitset membership_;
  std::size_t size_;
};

/// S subset of G^d for abelian G. Cells are numbered in row-major order so
/// that increasing cell index is lexicographic order on coordinate tuples.
class GridSet {
 public:
  /// Throws NotAbelian, DimensionCap (d outside [1, max_grid_dimension]) or
  /// OverflowGuard (|G|^d above max_grid_cells).
  GridSet(FiniteGroup group, std::size_t dimension, Bitset membership, const Limits& limits = {});

  static GridSet empty(const FiniteGroup& group, std::size_t dimension, const Limits& limits = {});
  static GridSet full(const FiniteGroup& group, std::size_t dimension, const Limits& limits = {});
  static GridSet from_points(const FiniteGroup& group, std::size_t dimension,
                             std::span<const std::vector<Element>> points, const Limits& limits = {});
  static GridSet random(const FiniteGroup& group, std::size_t dimension, double density, std::uint64_t seed,
                        const Limits& limits = {});

  /// Throws the same errors as the constructor; returns |G|^d.
  static std::size_t cell_count(const FiniteGroup& group, std::size_t dimension, const Limits& limits = {});

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t dimension() const noexcept { return dimension_; }
  const Bitset& membership() const noexcept { return membership_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t cells() const noexcept { return membership_.size(); }

  std::size_t encode(std::span<const Element> point) const noexcept;
  std::vector<Element> decode(std::size_t cell) const;
  bool contains(std::span<const Element> point) const noexcept { return membership_.test(encode(point)); }
  bool contains_cell(std::size_t cell) const noexcept { return membership_.test(cell); }
  std::vector<std::vector<Element>> members() const;

 private:
  FiniteGroup group_;
  std::size_t dimension_;
  Bitset membership_;
  std::size_t size_;
};

using AnySet = std::variant<PairSet, ElementSet, GridSet>;

/// Parses the subset file format: a header line "pairset", "elementset" or
/// "gridset d", then one member tuple per line; '#' starts a comment line.
/// Throws Error(kParse) on malformed lines or out-of-range indices.
AnySet parse_set_file(std::string_view text, const FiniteGroup& group, const Limits& limits = {});

std::string write_set_file(const AnySet& set);

}  // namespace roth
