#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "roth/configurations.hpp"
#include "roth/tripartite.hpp"

namespace roth {

/// A non-generator stage-1 triangle (a, b, c) read as the triple
/// (a, b), (x, b), (a, y) of members of S with xb = c = ay.
struct StageOneTriple {
  Element a, b, c, x, y;
};

/// Everything the two-stage pipeline looked at, stage by stage.
struct HarmadikTrace {
  std::vector<Element> subgroup;
  bool subgroup_auto = false;
  std::optional<CosetPairChoice> coset_pair;
  std::optional<CensusReport> stage1;
  /// Number of distinct x values among the stage-1 triples.
  std::size_t distinct_x = 0;
  std::optional<Element> x;
  /// The triples with the chosen x, in stage-1 enumeration order; stage-2
  /// generator i is built from triples[i].
  std::vector<StageOneTriple> triples;
  std::optional<CensusReport> stage2;
  /// Non-generator stage-2 triangles skipped because two of their edges came
  /// from the same triple.
  std::size_t stage2_rejected = 0;
  /// (i, j, k): the triples owning edges AB, BC and AC of the chosen triangle.
  std::optional<std::array<std::size_t, 3>> matched;
  /// Name of the stage that came up empty, when no witness was produced.
  std::optional<std::string> failed_stage;
  std::optional<std::string> detail;
};

struct HarmadikResult {
  std::optional<ConfigWitness> witness;
  HarmadikTrace trace;
};

/// Two rounds of triangle removal over an abelian subgroup H:
///   pigeonhole  choose the coset pair (l, r) holding the most of S
///   stage1      triangles of the (lH, Hr, lHr) graph; each non-generator one
///               is a triple (a,b), (x,b), (a,y)
///   fixed_x     keep the triples of the most frequent x
///   stage2      graph on lH, lHr (product role) and lHr (apex role) with one
///               triangle (a, ab, c) per kept triple; a non-generator triangle
///               with edges from triples i, j, k has a_i = a_k,
///               a_i b_i = a_j b_j, c_j = c_k
///   extract     (a_i, a_i^-1 c_i), (a_k, a_k^-1 c_k), (a_j, a_j^-1 c_j)
/// With no subgroup given, a maximum abelian subgroup is used. Throws
/// Error(kNotAbelianSubgroup) for a non-abelian H. A missing witness is a
/// legitimate outcome at small sizes; the trace names the empty stage.
HarmadikResult harmadik_pipeline(const PairSet& set, const std::optional<Subgroup>& subgroup,
                                 const Limits& limits = {});

/// Rewrites a harmadik triple (a,b), (a,c), (e,f) as the corollary triple
/// (a,b), (a,db), (ad^-1, d^2 b) with d = e^-1 a. The identities ab = ec and
/// ac = ef give c = db and f = d^2 b.
ConfigWitness corollary_from_harmadik(const FiniteGroup& group, const ConfigWitness& harmadik);

}  // namespace roth
