#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "roth/group.hpp"

namespace roth {

enum class GroupFamily { kCyclic, kElementaryAbelian, kDihedral, kQuaternion8, kSymmetric, kDirectProduct };

/// Family plus parameters for the built-in group constructions.
///
/// Element numbering (identity is always 0):
///   cyclic(n)               k <-> k, product (a + b) mod n
///   elementary_abelian(p,k) vector (x_0..x_{k-1}) <-> sum x_i p^i, coordinatewise addition mod p
///   dihedral(n)             order 2n; i < n is the rotation r^i, n + i is the reflection r^i s
///   quaternion8             0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k
///   symmetric(n)            permutations of 0..n-1 in lexicographic order, (a*b)(x) = a(b(x))
///   direct_product(A,B)     (x, y) <-> x * |B| + y
struct GroupSpec {
  GroupFamily family = GroupFamily::kCyclic;
  std::vector<std::size_t> params;
  std::vector<GroupSpec> factors;

  static GroupSpec cyclic(std::size_t n) { return {GroupFamily::kCyclic, {n}, {}}; }
  static GroupSpec elementary_abelian(std::size_t p, std::size_t k) {
    return {GroupFamily::kElementaryAbelian, {p, k}, {}};
  }
  static GroupSpec dihedral(std::size_t n) { return {GroupFamily::kDihedral, {n}, {}}; }
  static GroupSpec quaternion8() { return {GroupFamily::kQuaternion8, {}, {}}; }
  static GroupSpec symmetric(std::size_t n) { return {GroupFamily::kSymmetric, {n}, {}}; }
  static GroupSpec direct_product(GroupSpec a, GroupSpec b) {
    return {GroupFamily::kDirectProduct, {}, {std::move(a), std::move(b)}};
  }

  /// Colon syntax, e.g. "cyclic:12", "elemab:2:3", "product:cyclic:3:dihedral:3".
  std::string label() const;
  /// Order of the described group, saturating at SIZE_MAX.
  std::size_t order() const;
};

/// Inverse of GroupSpec::label. Accepts the aliases "q8" and "sym" / "elementary_abelian".
/// Throws Error(kParse) for unknown families or malformed parameters.
GroupSpec parse_group_spec(std::string_view text);

/// Throws UnsupportedParameter (e.g. symmetric(6), non-prime p) and OverflowGuard when the
/// order exceeds limits.max_group_order.
FiniteGroup make_named_group(const GroupSpec& spec, const Limits& limits = {});

/// The library's test catalogue: every built-in group of order <= max_order,
/// sorted by order then label.
std::vector<GroupSpec> builtin_group_specs(std::size_t max_order);

bool is_prime(std::size_t n) noexcept;

}  // namespace roth
