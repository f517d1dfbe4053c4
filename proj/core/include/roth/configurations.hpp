#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roth/sets.hpp"
#include "roth/subgroup.hpp"

namespace roth {

/// Configuration shapes. Pair-set kinds live in G x G, element-set kinds in
/// G, corners in G^d.
///   elso       (a,b), (ad,b), (a,db)               d in H
///   harmadik   (a,b), (a,c), (e,f)                 ab = ec, ac = ef
///   quadruple  (a,b), (a,c), (e,c), (e,f)          ab = ec, ac = ef
///   corollary  (a,b), (a,db), (ad^-1, d^2 b)       d in H
///   ap3        b, db, d^2 b                        d in H
///   corner     w, w + delta e_1, ..., w + delta e_d  delta in H
///   ksv        x, y, z                             xz = y^2
enum class ConfigKind { kElso, kHarmadik, kQuadruple, kCorollary, kAp3, kCorner, kKsv };

std::string_view to_string(ConfigKind kind);
/// Throws Error(kParse) for unknown names.
ConfigKind parse_config_kind(std::string_view name);

enum class GroundKind { kPairs, kElements, kGrid };
GroundKind ground_of(ConfigKind kind) noexcept;

/// Nondegeneracy switches. Each applies only where it is meaningful.
struct DegeneracyPolicy {
  /// d != 1 for elso, corollary and ap3; delta != 0 for corners.
  bool require_nonidentity_parameter = true;
  /// e != a for harmadik and quadruple.
  bool require_distinct_rows = true;
  /// Corollary triples with d of order two are rejected.
  bool exclude_order_two_parameter = false;
  /// ap3: b, db, d^2 b pairwise distinct; ksv: x, y, z not all equal.
  bool require_distinct_points = true;

  friend bool operator==(const DegeneracyPolicy&, const DegeneracyPolicy&) = default;
};

struct ConfigWitness {
  ConfigKind kind = ConfigKind::kElso;
  std::vector<std::vector<Element>> points;
  /// d for elso, corollary and ap3; delta for corners.
  std::optional<Element> parameter;

  friend bool operator==(const ConfigWitness&, const ConfigWitness&) = default;
};

struct Validation {
  bool ok = false;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// Membership, defining identities, parameter in H and the policy. Throws
/// Error(kKindMismatch) when the witness kind does not live on this set type,
/// and Error(kNotASubgroup) when H belongs to another group.
Validation validate_witness(const PairSet& set, const Subgroup& subgroup, const ConfigWitness& witness,
                            const DegeneracyPolicy& policy = {});
Validation validate_witness(const ElementSet& set, const Subgroup& subgroup, const ConfigWitness& witness,
                            const DegeneracyPolicy& policy = {});
Validation validate_witness(const GridSet& set, const Subgroup& subgroup, const ConfigWitness& witness,
                            const DegeneracyPolicy& policy = {});
Validation validate_witness(const AnySet& set, const Subgroup& subgroup, const ConfigWitness& witness,
                            const DegeneracyPolicy& policy = {});

/// Restricts an elso search to base points (a, b) in lH x Hr.
struct CosetBlock {
  Element left;
  Element right;
  friend bool operator==(const CosetBlock&, const CosetBlock&) = default;
};

// All finders scan in a fixed lexicographic order and return the first hit:
//   elso, corollary   (a, b, d)     d in H ascending
//   harmadik, quadr.  (a, c, b)     e and f are then forced
//   ap3               (b, d)
//   corner            (base point, delta)
//   ksv               (x, y)        z is forced

std::optional<ConfigWitness> find_elso(const PairSet& set, const Subgroup& subgroup,
                                       const DegeneracyPolicy& policy = {},
                                       std::optional<CosetBlock> block = std::nullopt);
/// Number of ordered (a, b, d), d in H, forming an elso configuration.
std::uint64_t count_elso(const PairSet& set, const Subgroup& subgroup, const DegeneracyPolicy& policy = {},
                         std::optional<CosetBlock> block = std::nullopt);

std::optional<ConfigWitness> find_harmadik(const PairSet& set, const DegeneracyPolicy& policy = {});
std::optional<ConfigWitness> find_quadruple(const PairSet& set, const DegeneracyPolicy& policy = {});
std::optional<ConfigWitness> find_corollary_triple(const PairSet& set, const Subgroup& subgroup,
                                                   const DegeneracyPolicy& policy = {});
std::optional<ConfigWitness> find_ap3(const ElementSet& set, const Subgroup& subgroup,
                                      const DegeneracyPolicy& policy = {});
std::optional<ConfigWitness> find_ksv(const ElementSet& set, const DegeneracyPolicy& policy = {});
/// Number of ordered (x, y, z) in A^3 with xz = y^2, trivial solutions included.
std::uint64_t count_ksv(const ElementSet& set);
std::optional<ConfigWitness> find_corner(const GridSet& set, const Subgroup& subgroup,
                                         const DegeneracyPolicy& policy = {});

/// Dispatches on kind. Throws KindMismatch when the set type does not fit.
std::optional<ConfigWitness> find_configuration(const AnySet& set, const Subgroup& subgroup, ConfigKind kind,
                                                const DegeneracyPolicy& policy = {});

/// Every configuration of `kind` over the full ground set, as sorted lists of
/// distinct ground cells (pair cells a*|G|+b, elements, or grid cells). A
/// subset is configuration free iff it contains none of these lists. Duplicate
/// lists are removed.
std::vector<std::vector<std::size_t>> enumerate_configurations(const FiniteGroup& group, const Subgroup& subgroup,
                                                               ConfigKind kind, const DegeneracyPolicy& policy = {},
                                                               std::size_t dimension = 2,
                                                               const Limits& limits = {});

}  // namespace roth
