#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roth/error.hpp"

namespace roth {

/// Group elements are dense indices 0..order-1. The identity is always 0.
using Element = std::uint32_t;

struct Limits {
  std::size_t max_group_order = 1024;
  std::size_t max_subgroup_enumeration_order = 64;
  std::size_t max_grid_dimension = 4;
  std::size_t max_grid_cells = std::size_t{1} << 20;
};

struct AxiomViolation {
  GroupAxiom axiom;
  std::array<long, 3> witness;
  std::string message;
};

/// Checks closure, identity, two-sided inverses and associativity of a square
/// table, in that order, and reports the first violation. Associativity costs
/// n^3 lookups.
std::optional<AxiomViolation> find_axiom_violation(const std::vector<std::vector<long>>& table);

/// A finite group given by its Cayley table.
///
/// FiniteGroup is an immutable handle: copies share the same table, and two
/// handles compare equal only when they refer to the same table. Instances are
/// safe to share across threads.
class FiniteGroup {
 public:
  /// Validates all group axioms and relabels so the identity becomes 0
  /// (the identity swaps labels with the element previously called 0).
  /// Throws NotAGroupError on the first violated axiom.
  static FiniteGroup from_table(const std::vector<std::vector<long>>& table, std::string name,
                                const Limits& limits = {});

  /// Builds a group from a product function without checking the axioms.
  /// The caller guarantees identity 0 and a valid group law; library
  /// constructions use this and are verified by the test suite.
  template <typename Product>
  static FiniteGroup from_product(std::size_t order, std::string name, Product&& product) {
    std::vector<Element> table(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        table[a * order + b] = static_cast<Element>(product(static_cast<Element>(a), static_cast<Element>(b)));
    return FiniteGroup(order, std::move(table), std::move(name));
  }

  std::size_t order() const noexcept { return data_->order; }
  const std::string& name() const noexcept { return data_->name; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return data_->table[a * data_->order + b]; }
  Element inv(Element a) const noexcept { return data_->inverses[a]; }
  Element pow(Element a, std::size_t k) const noexcept;

  bool is_abelian() const noexcept { return data_->abelian; }
  std::size_t element_order(Element a) const noexcept { return data_->element_orders[a]; }

  /// Row-major copy of the table, as long integers.
  std::vector<std::vector<long>> table() const;

  bool same_as(const FiniteGroup& other) const noexcept { return data_ == other.data_; }
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept { return a.same_as(b); }

 private:
  struct Data {
    std::size_t order;
    std::vector<Element> table;
    std::vector<Element> inverses;
    std::vector<std::size_t> element_orders;
    bool abelian;
    std::string name;
  };

  FiniteGroup(std::size_t order, std::vector<Element> table, std::string name);

  std::shared_ptr<const Data> data_;
};

/// Parses the text group format: first non-comment line holds n, followed by
/// n rows of n entries in [0, n). Lines starting with '#' are comments.
/// Throws Error(kParse) on malformed input, NotAGroupError on axiom failure.
FiniteGroup load_cayley_table(std::string_view text, std::string name = "file",
                              const Limits& limits = {});

std::string write_cayley_table(const FiniteGroup& group);

}  // namespace roth
