#include "roth/configurations.hpp"

#include <algorithm>
#include <stdexcept>

namespace roth {

std::string_view to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::kElso: return "elso";
    case ConfigKind::kHarmadik: return "harmadik";
    case ConfigKind::kQuadruple: return "quadruple";
    case ConfigKind::kCorollary: return "corollary";
    case ConfigKind::kAp3: return "ap3";
    case ConfigKind::kCorner: return "corner";
    case ConfigKind::kKsv: return "ksv";
  }
  return "?";
}

ConfigKind parse_config_kind(std::string_view name) {
  for (auto kind : {ConfigKind::kElso, ConfigKind::kHarmadik, ConfigKind::kQuadruple, ConfigKind::kCorollary,
                    ConfigKind::kAp3, ConfigKind::kCorner, ConfigKind::kKsv})
    if (to_string(kind) == name) return kind;
  throw Error(ErrorCode::kParse, "unknown configuration kind '" + std::string(name) + "'");
}

GroundKind ground_of(ConfigKind kind) noexcept {
  switch (kind) {
    case ConfigKind::kAp3:
    case ConfigKind::kKsv: return GroundKind::kElements;
    case ConfigKind::kCorner: return GroundKind::kGrid;
    default: return GroundKind::kPairs;
  }
}

namespace {

Validation fail(std::string reason) { return {false, std::move(reason)}; }
Validation pass() { return {true, {}}; }

void check_kind(const ConfigWitness& w, GroundKind expected, std::string_view set_name) {
  if (ground_of(w.kind) != expected)
    throw Error(ErrorCode::kKindMismatch, std::string(to_string(w.kind)) + " witness cannot live in a " +
                                              std::string(set_name));
}

void check_subgroup(const FiniteGroup& group, const Subgroup& subgroup) {
  if (!(subgroup.parent() == group))
    throw Error(ErrorCode::kNotASubgroup, "H belongs to " + subgroup.parent().name() + ", not " + group.name());
}

bool well_formed(const ConfigWitness& w, std::size_t points, std::size_t arity, std::size_t order) {
  if (w.points.size() != points) return false;
  for (const auto& p : w.points) {
    if (p.size() != arity) return false;
    for (Element x : p)
      if (x >= order) return false;
  }
  return !w.parameter || *w.parameter < order;
}

std::string pt(const std::vector<Element>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace

Validation validate_witness(const PairSet& set, const Subgroup& subgroup, const ConfigWitness& w,
                            const DegeneracyPolicy& policy) {
  check_kind(w, GroundKind::kPairs, "pair set");
  const FiniteGroup& g = set.group();
  check_subgroup(g, subgroup);
  const std::size_t count = w.kind == ConfigKind::kQuadruple ? 4 : 3;
  if (!well_formed(w, count, 2, g.order())) return fail("malformed points");
  for (const auto& p : w.points)
    if (!set.contains(p[0], p[1])) return fail("point " + pt(p) + " not in S");
  const auto& P = w.points;
  switch (w.kind) {
    case ConfigKind::kElso: {
      if (!w.parameter) return fail("missing d");
      const Element a = P[0][0], b = P[0][1], d = *w.parameter;
      if (P[1] != std::vector<Element>{g.mul(a, d), b}) return fail("second point is not (ad, b)");
      if (P[2] != std::vector<Element>{a, g.mul(d, b)}) return fail("third point is not (a, db)");
      if (!subgroup.contains(d)) return fail("d not in H");
      if (policy.require_nonidentity_parameter && d == FiniteGroup::identity()) return fail("degenerate d");
      return pass();
    }
    case ConfigKind::kHarmadik:
    case ConfigKind::kQuadruple: {
      const bool quad = w.kind == ConfigKind::kQuadruple;
      const Element a = P[0][0], b = P[0][1], c = P[1][1];
      const Element e = P[quad ? 3 : 2][0], f = P[quad ? 3 : 2][1];
      if (P[1][0] != a) return fail("second point does not share a");
      if (quad && (P[2][0] != e || P[2][1] != c)) return fail("third point is not (e, c)");
      if (g.mul(a, b) != g.mul(e, c)) return fail("ab != ec");
      if (g.mul(a, c) != g.mul(e, f)) return fail("ac != ef");
      if (policy.require_distinct_rows && e == a) return fail("degenerate: e = a");
      return pass();
    }
    case ConfigKind::kCorollary: {
      if (!w.parameter) return fail("missing d");
      const Element a = P[0][0], b = P[0][1], d = *w.parameter;
      if (P[1] != std::vector<Element>{a, g.mul(d, b)}) return fail("second point is not (a, db)");
      if (P[2] != std::vector<Element>{g.mul(a, g.inv(d)), g.mul(g.mul(d, d), b)})
        return fail("third point is not (ad^-1, d^2 b)");
      if (!subgroup.contains(d)) return fail("d not in H");
      if (policy.require_nonidentity_parameter && d == FiniteGroup::identity()) return fail("degenerate d");
      if (policy.exclude_order_two_parameter && g.element_order(d) == 2) return fail("d has order two");
      return pass();
    }
    default: break;
  }
  throw std::logic_error("unreachable pair witness kind");
}

Validation validate_witness(const ElementSet& set, const Subgroup& subgroup, const ConfigWitness& w,
                            const DegeneracyPolicy& policy) {
  check_kind(w, GroundKind::kElements, "element set");
  const FiniteGroup& g = set.group();
  check_subgroup(g, subgroup);
  if (!well_formed(w, 3, 1, g.order())) return fail("malformed points");
  for (const auto& p : w.points)
    if (!set.contains(p[0])) return fail("element " + std::to_string(p[0]) + " not in A");
  const Element x = w.points[0][0], y = w.points[1][0], z = w.points[2][0];
  if (w.kind == ConfigKind::kAp3) {
    if (!w.parameter) return fail("missing d");
    const Element d = *w.parameter;
    if (y != g.mul(d, x)) return fail("second element is not db");
    if (z != g.mul(d, y)) return fail("third element is not d^2 b");
    if (!subgroup.contains(d)) return fail("d not in H");
    if (policy.require_nonidentity_parameter && d == FiniteGroup::identity()) return fail("degenerate d");
    if (policy.require_distinct_points && (x == y || y == z || x == z)) return fail("elements not distinct");
    return pass();
  }
  if (g.mul(x, z) != g.mul(y, y)) return fail("xz != y^2");
  if (policy.require_distinct_points && x == y && y == z) return fail("trivial solution x = y = z");
  return pass();
}

Validation validate_witness(const GridSet& set, const Subgroup& subgroup, const ConfigWitness& w,
                            const DegeneracyPolicy& policy) {
  check_kind(w, GroundKind::kGrid, "grid set");
  const FiniteGroup& g = set.group();
  check_subgroup(g, subgroup);
  const std::size_t d = set.dimension();
  if (!well_formed(w, d + 1, d, g.order())) return fail("malformed points");
  if (!w.parameter) return fail("missing delta");
  for (const auto& p : w.points)
    if (!set.contains(p)) return fail("point " + pt(p) + " not in S");
  const Element delta = *w.parameter;
  for (std::size_t i = 0; i < d; ++i) {
    auto expected = w.points[0];
    expected[i] = g.mul(expected[i], delta);
    if (w.points[i + 1] != expected) return fail("point " + std::to_string(i + 1) + " is not base + delta e_i");
  }
  if (!subgroup.contains(delta)) return fail("delta not in H");
  if (policy.require_nonidentity_parameter && delta == FiniteGroup::identity()) return fail("degenerate delta");
  return pass();
}

Validation validate_witness(const AnySet& set, const Subgroup& subgroup, const ConfigWitness& witness,
                            const DegeneracyPolicy& policy) {
  return std::visit([&](const auto& s) { return validate_witness(s, subgroup, witness, policy); }, set);
}

namespace {

template <typename Set>
ConfigWitness checked(const Set& set, const Subgroup& subgroup, ConfigWitness w, const DegeneracyPolicy& policy) {
  if (auto v = validate_witness(set, subgroup, w, policy); !v)
    throw std::logic_error("finder produced an invalid " + std::string(to_string(w.kind)) + " witness: " + v.reason);
  return w;
}

std::vector<Element> block_or_all(const FiniteGroup& g, const Subgroup& h, std::optional<Element> rep, bool left) {
  std::vector<Element> out;
  if (!rep) {
    for (Element x = 0; x < g.order(); ++x) out.push_back(x);
    return out;
  }
  for (Element x : h.elements()) out.push_back(left ? g.mul(*rep, x) : g.mul(x, *rep));
  std::sort(out.begin(), out.end());
  return out;
}

// Calls visit(a, b, d) for every elso configuration in scan order; stops when visit returns true.
template <typename Visit>
void scan_elso(const PairSet& set, const Subgroup& h, const DegeneracyPolicy& policy, std::optional<CosetBlock> block,
               Visit&& visit) {
  const FiniteGroup& g = set.group();
  check_subgroup(g, h);
  const auto rows = block_or_all(g, h, block ? std::optional(block->left) : std::nullopt, true);
  const auto cols = block_or_all(g, h, block ? std::optional(block->right) : std::nullopt, false);
  for (Element a : rows)
    for (Element b : cols) {
      if (!set.contains(a, b)) continue;
      for (Element d : h.elements()) {
        if (policy.require_nonidentity_parameter && d == FiniteGroup::identity()) continue;
        if (set.contains(g.mul(a, d), b) && set.contains(a, g.mul(d, b)) && visit(a, b, d)) return;
      }
    }
}

}  // namespace

std::optional<ConfigWitness> find_elso(const PairSet& set, const Subgroup& subgroup, const DegeneracyPolicy& policy,
                                       std::optional<CosetBlock> block) {
  const FiniteGroup& g = set.group();
  std::optional<ConfigWitness> found;
  scan_elso(set, subgroup, policy, block, [&](Element a, Element b, Element d) {
    found = ConfigWitness{ConfigKind::kElso, {{a, b}, {g.mul(a, d), b}, {a, g.mul(d, b)}}, d};
    return true;
  });
  if (found) return checked(set, subgroup, *found, policy);
  return std::nullopt;
}

std::uint64_t count_elso(const PairSet& set, const Subgroup& subgroup, const DegeneracyPolicy& policy,
                         std::optional<CosetBlock> block) {
  std::uint64_t count = 0;
  scan_elso(set, subgroup, policy, block, [&](Element, Element, Element) {
    ++count;
    return false;
  });
  return count;
}

namespace {

std::optional<ConfigWitness> scan_harmadik(const PairSet& set, const DegeneracyPolicy& policy, bool quadruple) {
  const FiniteGroup& g = set.group();
  const Element n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      if (!set.contains(a, c)) continue;
      for (Element b = 0; b < n; ++b) {
        if (!set.contains(a, b)) continue;
        // ab = ec and ac = ef determine e and f.
        const Element e = g.mul(g.mul(a, b), g.inv(c));
        if (policy.require_distinct_rows && e == a) continue;
        const Element f = g.mul(g.inv(e), g.mul(a, c));
        if (!set.contains(e, f)) continue;
        if (quadruple && !set.contains(e, c)) continue;
        ConfigWitness w{quadruple ? ConfigKind::kQuadruple : ConfigKind::kHarmadik, {{a, b}, {a, c}}, std::nullopt};
        if (quadruple) w.points.push_back({e, c});
        w.points.push_back({e, f});
        return checked(set, Subgroup::trivial(g), std::move(w), policy);
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<ConfigWitness> find_harmadik(const PairSet& set, const DegeneracyPolicy& policy) {
  return scan_harmadik(set, policy, false);
}

std::optional<ConfigWitness> find_quadruple(const PairSet& set, const DegeneracyPolicy& policy) {
  return scan_harmadik(set, policy, true);
}

namespace {

bool corollary_parameter_ok(const FiniteGroup& g, Element d, const DegeneracyPolicy& policy) {
  if (policy.require_nonidentity_parameter && d == FiniteGroup::identity()) return false;
  if (policy.exclude_order_two_parameter && g.element_order(d) == 2) return false;
  return true;
}

bool ap3_parameter_ok(const FiniteGroup& g, Element d, const DegeneracyPolicy& policy) {
  if (policy.require_nonidentity_parameter && d == FiniteGroup::identity()) return false;
  // b, db, d^2 b are distinct iff d != 1 and d^2 != 1.
  if (policy.require_distinct_points && (d == FiniteGroup::identity() || g.mul(d, d) == FiniteGroup::identity()))
    return false;
  return true;
}

}  // namespace

std::optional<ConfigWitness> find_corollary_triple(const PairSet& set, const Subgroup& subgroup,
                                                   const DegeneracyPolicy& policy) {
  const FiniteGroup& g = set.group();
  check_subgroup(g, subgroup);
  const Element n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!set.contains(a, b)) continue;
      for (Element d : subgroup.elements()) {
        if (!corollary_parameter_ok(g, d, policy)) continue;
        const Element db = g.mul(d, b);
        const Element e = g.mul(a, g.inv(d));
        const Element f = g.mul(d, db);
        if (set.contains(a, db) && set.contains(e, f))
          return checked(set, subgroup, ConfigWitness{ConfigKind::kCorollary, {{a, b}, {a, db}, {e, f}}, d}, policy);
      }
    }
  return std::nullopt;
}

std::optional<ConfigWitness> find_ap3(const ElementSet& set, const Subgroup& subgroup, const DegeneracyPolicy& policy) {
  const FiniteGroup& g = set.group();
  check_subgroup(g, subgroup);
  for (Element b : set.members())
    for (Element d : subgroup.elements()) {
      if (!ap3_parameter_ok(g, d, policy)) continue;
      const Element db = g.mul(d, b);
      const Element ddb = g.mul(d, db);
      if (set.contains(db) && set.contains(ddb))
        return checked(set, subgroup, ConfigWitness{ConfigKind::kAp3, {{b}, {db}, {ddb}}, d}, policy);
    }
  return std::nullopt;
}

std::optional<ConfigWitness> find_ksv(const ElementSet& set, const DegeneracyPolicy& policy) {
  const FiniteGroup& g = set.group();
  const auto members = set.members();
  for (Element x : members)
    for (Element y : members) {
      const Element z = g.mul(g.inv(x), g.mul(y, y));
      if (!set.contains(z)) continue;
      if (policy.require_distinct_points && x == y && y == z) continue;
      return checked(set, Subgroup::trivial(g), ConfigWitness{ConfigKind::kKsv, {{x}, {y}, {z}}, std::nullopt},
                     policy);
    }
  return std::nullopt;
}

std::uint64_t count_ksv(const ElementSet& set) {
  const FiniteGroup& g = set.group();
  const auto members = set.members();
  std::uint64_t count = 0;
  for (Element x : members)
    for (Element y : members)
      if (set.contains(g.mul(g.inv(x), g.mul(y, y)))) ++count;
  return count;
}

std::optional<ConfigWitness> find_corner(const GridSet& set, const Subgroup& subgroup, const DegeneracyPolicy& policy) {
  const FiniteGroup& g = set.group();
  check_subgroup(g, subgroup);
  const std::size_t d = set.dimension();
  std::optional<ConfigWitness> found;
  std::vector<Element> probe(d);
  set.membership().for_each([&](std::size_t cell) {
    if (found) return;
    const auto base = set.decode(cell);
    for (Element delta : subgroup.elements()) {
      if (policy.require_nonidentity_parameter && delta == FiniteGroup::identity()) continue;
      bool all = true;
      for (std::size_t i = 0; i < d && all; ++i) {
        probe = base;
        probe[i] = g.mul(probe[i], delta);
        all = set.contains(probe);
      }
      if (!all) continue;
      ConfigWitness w{ConfigKind::kCorner, {base}, delta};
      for (std::size_t i = 0; i < d; ++i) {
        w.points.push_back(base);
        w.points.back()[i] = g.mul(base[i], delta);
      }
      found = std::move(w);
      return;
    }
  });
  if (found) return checked(set, subgroup, *found, policy);
  return std::nullopt;
}

std::optional<ConfigWitness> find_configuration(const AnySet& set, const Subgroup& subgroup, ConfigKind kind,
                                                const DegeneracyPolicy& policy) {
  auto mismatch = [kind](std::string_view set_name) {
    return Error(ErrorCode::kKindMismatch,
                 std::string(to_string(kind)) + " cannot be searched in a " + std::string(set_name));
  };
  if (const auto* pairs = std::get_if<PairSet>(&set)) {
    switch (kind) {
      case ConfigKind::kElso: return find_elso(*pairs, subgroup, policy);
      case ConfigKind::kHarmadik: return find_harmadik(*pairs, policy);
      case ConfigKind::kQuadruple: return find_quadruple(*pairs, policy);
      case ConfigKind::kCorollary: return find_corollary_triple(*pairs, subgroup, policy);
      default: throw mismatch("pair set");
    }
  }
  if (const auto* elems = std::get_if<ElementSet>(&set)) {
    switch (kind) {
      case ConfigKind::kAp3: return find_ap3(*elems, subgroup, policy);
      case ConfigKind::kKsv: return find_ksv(*elems, policy);
      default: throw mismatch("element set");
    }
  }
  if (kind != ConfigKind::kCorner) throw mismatch("grid set");
  return find_corner(std::get<GridSet>(set), subgroup, policy);
}

std::vector<std::vector<std::size_t>> enumerate_configurations(const FiniteGroup& g, const Subgroup& subgroup,
                                                               ConfigKind kind, const DegeneracyPolicy& policy,
                                                               std::size_t dimension, const Limits& limits) {
  check_subgroup(g, subgroup);
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> out;
  auto emit = [&out](std::vector<std::size_t> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    out.push_back(std::move(cells));
  };
  auto cell = [n](Element a, Element b) { return std::size_t{a} * n + b; };
  switch (kind) {
    case ConfigKind::kElso:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element d : subgroup.elements()) {
            if (policy.require_nonidentity_parameter && d == FiniteGroup::identity()) continue;
            emit({cell(a, b), cell(g.mul(a, d), b), cell(a, g.mul(d, b))});
          }
      break;
    case ConfigKind::kHarmadik:
    case ConfigKind::kQuadruple:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c) {
            const Element e = g.mul(g.mul(a, b), g.inv(c));
            if (policy.require_distinct_rows && e == a) continue;
            const Element f = g.mul(g.inv(e), g.mul(a, c));
            if (kind == ConfigKind::kQuadruple)
              emit({cell(a, b), cell(a, c), cell(e, c), cell(e, f)});
            else
              emit({cell(a, b), cell(a, c), cell(e, f)});
          }
      break;
    case ConfigKind::kCorollary:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element d : subgroup.elements()) {
            if (!corollary_parameter_ok(g, d, policy)) continue;
            emit({cell(a, b), cell(a, g.mul(d, b)), cell(g.mul(a, g.inv(d)), g.mul(g.mul(d, d), b))});
          }
      break;
    case ConfigKind::kAp3:
      for (Element b = 0; b < n; ++b)
        for (Element d : subgroup.elements()) {
          if (!ap3_parameter_ok(g, d, policy)) continue;
          emit({b, g.mul(d, b), g.mul(d, g.mul(d, b))});
        }
      break;
    case ConfigKind::kKsv:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          const Element z = g.mul(g.inv(x), g.mul(y, y));
          if (policy.require_distinct_points && x == y && y == z) continue;
          emit({x, y, z});
        }
      break;
    case ConfigKind::kCorner: {
      const GridSet shape = GridSet::empty(g, dimension, limits);
      for (std::size_t c = 0; c < shape.cells(); ++c) {
        const auto base = shape.decode(c);
        for (Element delta : subgroup.elements()) {
          if (policy.require_nonidentity_parameter && delta == FiniteGroup::identity()) continue;
          std::vector<std::size_t> cells{c};
          for (std::size_t i = 0; i < dimension; ++i) {
            auto p = base;
            p[i] = g.mul(p[i], delta);
            cells.push_back(shape.encode(p));
          }
          emit(std::move(cells));
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace roth
