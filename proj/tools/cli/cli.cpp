#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "roth/roth.hpp"

namespace roth::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::uint64_t to_u64(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
  return value;
}

double to_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": expected a number, got '" + text + "'");
  }
}

std::vector<Element> element_list(const std::string& text, const std::string& what) {
  std::vector<Element> out;
  for (const auto& tok : split(text, ',')) out.push_back(static_cast<Element>(to_u64(tok, what)));
  return out;
}

// Options shared by the commands that operate on a group, a subset and H.
struct CommonOptions {
  std::string group_spec;
  std::string group_file;
  std::string subset = "full";
  std::string subgroup;  // empty: whole group, or auto for the pipeline
  std::string kind = "elso";
  std::size_t dimension = 2;
  bool allow_identity_parameter = false;
  bool allow_equal_rows = false;
  bool exclude_order_two = false;
  bool allow_repeated_points = false;
  std::string format = "json";
  std::size_t jobs = 1;
  std::size_t group_cap = Limits{}.max_group_order;
  std::size_t subgroup_cap = Limits{}.max_subgroup_enumeration_order;

  Limits limits() const {
    Limits l;
    l.max_group_order = group_cap;
    l.max_subgroup_enumeration_order = subgroup_cap;
    return l;
  }

  DegeneracyPolicy policy() const {
    DegeneracyPolicy p;
    p.require_nonidentity_parameter = !allow_identity_parameter;
    p.require_distinct_rows = !allow_equal_rows;
    p.exclude_order_two_parameter = exclude_order_two;
    p.require_distinct_points = !allow_repeated_points;
    return p;
  }
};

void add_group_options(CLI::App* cmd, CommonOptions& o) {
  auto* spec = cmd->add_option("--group", o.group_spec, "Group spec, e.g. cyclic:12, elemab:2:3, dihedral:4, q8, "
                                                        "symmetric:4, product:cyclic:3:cyclic:3");
  auto* file = cmd->add_option("--group-file", o.group_file, "Cayley table file");
  spec->excludes(file);
  cmd->add_option("--group-cap", o.group_cap, "Maximum group order")->capture_default_str();
  cmd->add_option("--subgroup-cap", o.subgroup_cap, "Maximum order for subgroup enumeration")->capture_default_str();
}

void add_context_options(CLI::App* cmd, CommonOptions& o, bool with_subset) {
  add_group_options(cmd, o);
  if (with_subset)
    cmd->add_option("--subset", o.subset, "full | empty | random:<density>:<seed> | file:<path>")
        ->capture_default_str();
  cmd->add_option("--H", o.subgroup,
                  "whole | trivial | auto | center | sylow:<p> | gens:<g1,g2,..> | elements:<h1,h2,..> "
                  "(default: whole; auto for --method pipeline)");
  cmd->add_option("--dim", o.dimension, "Grid dimension for corners")->capture_default_str();
  cmd->add_flag("--allow-identity-parameter", o.allow_identity_parameter, "Accept d = 1 / delta = 0");
  cmd->add_flag("--allow-equal-rows", o.allow_equal_rows, "Accept e = a in harmadik/quadruple");
  cmd->add_flag("--exclude-order-two", o.exclude_order_two, "Reject corollary d of order two");
  cmd->add_flag("--allow-repeated-points", o.allow_repeated_points, "Accept repeated ap3/ksv elements");
  cmd->add_option("--format", o.format, "json | text | csv")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
}

FiniteGroup load_group(const CommonOptions& o) {
  if (!o.group_file.empty()) return load_cayley_table(read_file(o.group_file), o.group_file, o.limits());
  if (o.group_spec.empty()) throw UsageError("one of --group or --group-file is required");
  return make_named_group(parse_group_spec(o.group_spec), o.limits());
}

Subgroup select_subgroup(const FiniteGroup& g, const std::string& text, const Limits& limits) {
  if (text.empty() || text == "whole") return Subgroup::whole(g);
  if (text == "trivial") return Subgroup::trivial(g);
  if (text == "auto" || text == "maxabelian") return max_abelian_subgroup(g, limits);
  if (text == "center") {
    std::vector<Element> centre;
    for (Element x = 0; x < g.order(); ++x) {
      bool central = true;
      for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
      if (central) centre.push_back(x);
    }
    return Subgroup::from_elements(g, centre);
  }
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
    if (head == "sylow") return sylow_subgroup(g, to_u64(tail, "--H sylow"), limits);
    if (head == "gens") {
      const auto gens = element_list(tail, "--H gens");
      return Subgroup::generated_by(g, gens);
    }
    if (head == "elements") return Subgroup::from_elements(g, element_list(tail, "--H elements"));
  }
  throw UsageError("--H: unknown subgroup selection '" + text + "'");
}

AnySet make_subset(const FiniteGroup& g, GroundKind ground, const CommonOptions& o) {
  const std::string& s = o.subset;
  const Limits limits = o.limits();
  if (s.rfind("file:", 0) == 0) {
    const std::string path = s.substr(5);
    AnySet set = parse_set_file(read_file(path), g, limits);
    const bool fits = (ground == GroundKind::kPairs && std::holds_alternative<PairSet>(set)) ||
                      (ground == GroundKind::kElements && std::holds_alternative<ElementSet>(set)) ||
                      (ground == GroundKind::kGrid && std::holds_alternative<GridSet>(set));
    if (!fits) throw UsageError("subset file '" + path + "' has the wrong set type for --kind " + o.kind);
    return set;
  }
  auto build = [&](auto&& make_pairs, auto&& make_elems, auto&& make_grid) -> AnySet {
    switch (ground) {
      case GroundKind::kPairs: return make_pairs();
      case GroundKind::kElements: return make_elems();
      case GroundKind::kGrid: return make_grid();
    }
    throw UsageError("unknown ground set");
  };
  if (s == "full")
    return build([&] { return AnySet(PairSet::full(g)); }, [&] { return AnySet(ElementSet::full(g)); },
                 [&] { return AnySet(GridSet::full(g, o.dimension, limits)); });
  if (s == "empty")
    return build([&] { return AnySet(PairSet::empty(g)); }, [&] { return AnySet(ElementSet::empty(g)); },
                 [&] { return AnySet(GridSet::empty(g, o.dimension, limits)); });
  if (s.rfind("random:", 0) == 0) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw UsageError("--subset random needs random:<density>:<seed>");
    const double density = to_double(parts[1], "--subset density");
    if (!(density >= 0.0 && density <= 1.0)) throw UsageError("--subset density must lie in [0, 1]");
    const std::uint64_t seed = to_u64(parts[2], "--subset seed");
    return build([&] { return AnySet(PairSet::random(g, density, seed)); },
                 [&] { return AnySet(ElementSet::random(g, density, seed)); },
                 [&] { return AnySet(GridSet::random(g, o.dimension, density, seed, limits)); });
  }
  throw UsageError("--subset: expected full, empty, random:<density>:<seed> or file:<path>, got '" + s + "'");
}

json subgroup_json(const Subgroup& h) { return json(h.elements()); }

std::string text_witness(const ConfigWitness& w) {
  std::ostringstream out;
  out << to_string(w.kind) << ":";
  for (const auto& p : w.points) {
    out << " (";
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << ")";
  }
  if (w.parameter) out << " parameter=" << *w.parameter;
  return out.str();
}

void emit(std::ostream& out, const CommonOptions& o, const json& doc, const std::string& text) {
  if (o.format == "text")
    out << text << '\n';
  else
    out << doc.dump(2) << '\n';
}

int cmd_group(const CommonOptions& o, const std::string& action, std::ostream& out) {
  const FiniteGroup g = load_group(o);
  if (action == "info") {
    const auto facts = group_facts(g);
    json doc{{"schema_version", kSchemaVersion}, {"command", "group info"}, {"group", g.name()}};
    doc["facts"] = to_json(facts);
    std::ostringstream text;
    text << g.name() << ": order " << facts.order << (facts.is_abelian ? ", abelian" : ", non-abelian")
         << ", center " << facts.center_size << ", exponent " << facts.exponent;
    if (facts.p_group_prime) text << ", " << *facts.p_group_prime << "-group";
    emit(out, o, doc, text.str());
    return kOk;
  }
  const auto subgroups = all_subgroups(g, o.limits());
  json list = json::array();
  std::ostringstream text;
  for (const auto& h : subgroups) {
    list.push_back({{"order", h.order()}, {"abelian", h.is_abelian()}, {"elements", h.elements()}});
    text << h.order() << ":";
    for (Element x : h.elements()) text << ' ' << x;
    text << '\n';
  }
  json doc{{"schema_version", kSchemaVersion}, {"command", "group subgroups"}, {"group", g.name()},
           {"count", subgroups.size()}, {"subgroups", list}};
  std::string t = text.str();
  if (!t.empty()) t.pop_back();
  emit(out, o, doc, t);
  return kOk;
}

int cmd_find(const CommonOptions& o, const std::string& method, const std::string& scope, bool require,
             std::ostream& out) {
  const ConfigKind kind = parse_config_kind(o.kind);
  const FiniteGroup g = load_group(o);
  const Limits limits = o.limits();
  const AnySet set = make_subset(g, ground_of(kind), o);
  const DegeneracyPolicy policy = o.policy();

  json doc{{"schema_version", kSchemaVersion}, {"command", "find"}, {"group", g.name()},
           {"kind", std::string(to_string(kind))}, {"method", method}, {"policy", to_json(policy)}};
  std::optional<ConfigWitness> witness;
  std::optional<Subgroup> used;

  if (method == "brute") {
    used = select_subgroup(g, o.subgroup, limits);
    witness = find_configuration(set, *used, kind, policy);
  } else if (method == "graph") {
    used = select_subgroup(g, o.subgroup, limits);
    const ScopePolicy sp = parse_scope_policy(scope);
    doc["scope"] = std::string(to_string(sp));
    if (kind == ConfigKind::kElso) {
      witness = find_elso_via_graph(std::get<PairSet>(set), *used, sp);
    } else if (kind == ConfigKind::kCorner) {
      witness = find_corner_via_hypergraph(std::get<GridSet>(set), *used, sp);
    } else {
      throw UsageError("--method graph supports --kind elso and --kind corner");
    }
  } else {
    if (kind != ConfigKind::kHarmadik && kind != ConfigKind::kCorollary)
      throw UsageError("--method pipeline supports --kind harmadik and --kind corollary");
    std::optional<Subgroup> requested;
    if (!o.subgroup.empty() && o.subgroup != "auto" && o.subgroup != "maxabelian") requested = select_subgroup(g, o.subgroup, limits);
    auto result = harmadik_pipeline(std::get<PairSet>(set), requested, limits);
    used = Subgroup::from_elements(g, result.trace.subgroup);
    doc["trace"] = to_json(result.trace);
    if (result.witness) {
      witness = kind == ConfigKind::kCorollary ? corollary_from_harmadik(g, *result.witness) : *result.witness;
      if (auto v = validate_witness(set, *used, *witness, policy); !v) {
        doc["trace"]["detail"] = "witness rejected by policy: " + v.reason;
        witness.reset();
      }
    }
  }
  doc["subgroup"] = subgroup_json(*used);
  doc["status"] = witness ? "found" : "not_found";
  doc["witness"] = witness ? to_json(*witness) : json(nullptr);
  emit(out, o, doc, witness ? text_witness(*witness) : std::string("not found"));
  return (!witness && require) ? kNotFound : kOk;
}

int cmd_count(const CommonOptions& o, std::ostream& out) {
  const ConfigKind kind = parse_config_kind(o.kind);
  if (kind != ConfigKind::kElso && kind != ConfigKind::kKsv) throw UsageError("count supports --kind elso and ksv");
  const FiniteGroup g = load_group(o);
  const AnySet set = make_subset(g, ground_of(kind), o);
  json doc{{"schema_version", kSchemaVersion}, {"command", "count"}, {"group", g.name()},
           {"kind", std::string(to_string(kind))}};
  std::uint64_t count = 0;
  if (kind == ConfigKind::kKsv) {
    count = count_ksv(std::get<ElementSet>(set));
  } else {
    const Subgroup h = select_subgroup(g, o.subgroup, o.limits());
    count = count_elso(std::get<PairSet>(set), h, o.policy());
    doc["subgroup"] = subgroup_json(h);
    doc["policy"] = to_json(o.policy());
  }
  doc["count"] = count;
  emit(out, o, doc, std::to_string(count));
  return kOk;
}

int cmd_census(const CommonOptions& o, const std::string& scope, bool hypergraph, std::ostream& out) {
  const FiniteGroup g = load_group(o);
  const Subgroup h = select_subgroup(g, o.subgroup, o.limits());
  json doc{{"schema_version", kSchemaVersion}, {"command", "census"}, {"group", g.name()},
           {"subgroup", subgroup_json(h)}};
  CensusReport census;
  if (hypergraph) {
    const GridSet set = std::get<GridSet>(make_subset(g, GroundKind::kGrid, o));
    std::vector<Element> offsets(set.dimension(), 0);
    const Subgroup* classes = &h;
    const Subgroup whole = Subgroup::whole(g);
    if (scope == "full") {
      classes = &whole;
    } else if (scope == "pigeonhole") {
      const auto choice = pigeonhole_corner_block(set, h);
      offsets = choice.offsets;
      doc["block_count"] = choice.count;
      doc["block_bound"] = choice.bound;
    } else {
      throw UsageError("--hypergraph supports --scope full or pigeonhole");
    }
    const auto graph = build_corner_hypergraph(set, *classes, offsets);
    census = clique_census(graph);
    doc["structure"] = "hypergraph";
    doc["dimension"] = set.dimension();
    doc["offsets"] = offsets;
  } else {
    const PairSet set = std::get<PairSet>(make_subset(g, GroundKind::kPairs, o));
    Stage1Scope s = FullScope{};
    if (scope == "pigeonhole") {
      const auto choice = pigeonhole_coset_pair(set, h);
      doc["coset_pair"] = to_json(choice);
      s = CosetScope{h, choice.left, choice.right};
    } else if (scope.rfind("coset:", 0) == 0) {
      const auto parts = split(scope, ':');
      if (parts.size() != 3) throw UsageError("--scope coset needs coset:<l>:<r>");
      const auto l = static_cast<Element>(to_u64(parts[1], "--scope l"));
      const auto r = static_cast<Element>(to_u64(parts[2], "--scope r"));
      if (l >= g.order() || r >= g.order()) throw UsageError("--scope coset representatives outside the group");
      s = CosetScope{h, l, r};
    } else if (scope != "full") {
      throw UsageError("--scope: expected full, pigeonhole or coset:<l>:<r>");
    }
    const auto graph = build_stage1_graph(set, s);
    census = triangle_census(graph);
    doc["structure"] = "tripartite";
    doc["edge_count"] = graph.edge_count();
    doc["warning"] = graph.warning() ? json(*graph.warning()) : json(nullptr);
  }
  doc["scope"] = scope;
  doc["census"] = to_json(census);
  std::ostringstream text;
  text << "generators " << census.generator_count << ", total " << census.total_count << ", non-generator "
       << census.non_generator_count << ", edge-disjoint " << (census.edge_disjoint ? "yes" : "no")
       << ", unique cover " << (census.unique_clique_cover ? "yes" : "no");
  emit(out, o, doc, text.str());
  return kOk;
}

int cmd_extremal(const CommonOptions& o, const std::string& mode, std::uint64_t node_cap, double time_cap,
                 std::size_t iterations, std::uint64_t seed, std::ostream& out) {
  const ConfigKind kind = parse_config_kind(o.kind);
  const FiniteGroup g = load_group(o);
  ExtremalProblem problem{g, select_subgroup(g, o.subgroup, o.limits()), kind, o.policy(), o.dimension, o.limits()};
  ExtremalResult result;
  if (mode == "exact") {
    SearchBudget budget;
    budget.node_cap = node_cap;
    budget.time_cap_seconds = time_cap;
    result = max_free_exact(problem, budget);
  } else {
    result = max_free_heuristic(problem, iterations, seed);
  }
  const AnySet set = cells_to_set(problem, result.cells);
  json members = json::array();
  std::visit([&](const auto& s) { members = json(s.members()); }, set);
  json doc{{"schema_version", kSchemaVersion}, {"command", "extremal"}, {"group", g.name()},
           {"kind", std::string(to_string(kind))}, {"mode", mode}, {"subgroup", subgroup_json(problem.subgroup)},
           {"policy", to_json(problem.policy)}, {"size", result.size}, {"ground_size", result.ground_size},
           {"optimal", result.optimal}, {"nodes", result.nodes}, {"cells", result.cells}, {"members", members}};
  if (mode == "heuristic") doc["seed"] = seed;
  if (mode == "exact" && !result.optimal) doc["warning"] = "BudgetExceeded: best-so-far, not proved optimal";
  emit(out, o, doc,
       "max " + std::string(to_string(kind)) + "-free size " + std::to_string(result.size) +
           (result.optimal ? " (optimal)" : " (not proved optimal)"));
  return kOk;
}

int cmd_experiment(const CommonOptions& o, const std::string& densities, std::size_t trials, std::uint64_t seed,
                   std::ostream& out) {
  const ConfigKind kind = parse_config_kind(o.kind);
  const FiniteGroup g = load_group(o);
  ExperimentConfig config{.group = g, .subgroup = select_subgroup(g, o.subgroup, o.limits()), .kind = kind};
  config.policy = o.policy();
  for (const auto& d : split(densities, ',')) config.densities.push_back(to_double(d, "--densities"));
  config.trials = trials;
  config.seed = seed;
  config.dimension = o.dimension;
  config.jobs = o.jobs;
  config.subgroup_label = o.subgroup.empty() ? "whole" : o.subgroup;
  config.limits = o.limits();
  const auto report = density_experiment(config);
  if (o.format == "csv") {
    out << to_csv(report);
    return kOk;
  }
  auto doc = to_json(report);
  doc["command"] = "experiment";
  std::ostringstream text;
  for (const auto& row : report.rows)
    text << "density " << row.density << ": " << row.hits << "/" << row.trials << " hit\n";
  std::string t = text.str();
  if (!t.empty()) t.pop_back();
  emit(out, o, doc, t);
  return kOk;
}

int cmd_verify_witness(const CommonOptions& o, const std::string& path, std::ostream& out) {
  json doc_in;
  try {
    doc_in = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
  const ConfigWitness w = witness_from_json(doc_in);
  const FiniteGroup g = load_group(o);
  const AnySet set = make_subset(g, ground_of(w.kind), o);
  const Subgroup h = select_subgroup(g, o.subgroup, o.limits());
  const auto v = validate_witness(set, h, w, o.policy());
  json doc{{"schema_version", kSchemaVersion}, {"command", "verify"}, {"group", g.name()},
           {"kind", std::string(to_string(w.kind))}, {"valid", v.ok}, {"reason", v.ok ? json(nullptr) : json(v.reason)}};
  emit(out, o, doc, v.ok ? "valid" : "invalid: " + v.reason);
  return v.ok ? kOk : kNotFound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rothctl: Roth-type configurations in finite groups"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Expand all help");

  CommonOptions o;

  auto* group = app.add_subcommand("group", "Inspect a group");
  std::string group_action;
  group->add_option("action", group_action, "info | subgroups")
      ->required()
      ->check(CLI::IsMember({"info", "subgroups"}));
  add_group_options(group, o);
  group->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* find = app.add_subcommand("find", "Search for a configuration");
  std::string method = "brute", scope = "pigeonhole";
  bool require = false;
  add_context_options(find, o, true);
  find->add_option("--kind", o.kind, "elso | harmadik | quadruple | corollary | ap3 | corner | ksv")
      ->check(CLI::IsMember({"elso", "harmadik", "quadruple", "corollary", "ap3", "corner", "ksv"}))
      ->capture_default_str();
  find->add_option("--method", method, "brute | graph | pipeline")
      ->check(CLI::IsMember({"brute", "graph", "pipeline"}))
      ->capture_default_str();
  find->add_option("--scope", scope, "pigeonhole | all | full (graph method)")
      ->check(CLI::IsMember({"pigeonhole", "all", "all_coset_pairs", "full"}))
      ->capture_default_str();
  find->add_flag("--require", require, "Exit 1 when nothing is found");

  auto* count = app.add_subcommand("count", "Count configurations");
  add_context_options(count, o, true);
  count->add_option("--kind", o.kind, "elso | ksv")->check(CLI::IsMember({"elso", "ksv"}))->capture_default_str();

  auto* census = app.add_subcommand("census", "Triangle or clique census of a removal encoding");
  std::string census_scope = "full";
  bool hypergraph = false;
  add_context_options(census, o, true);
  census->add_option("--scope", census_scope, "full | pigeonhole | coset:<l>:<r>")->capture_default_str();
  census->add_flag("--hypergraph", hypergraph, "Corner hypergraph over a grid set (use --dim)");

  auto* extremal = app.add_subcommand("extremal", "Largest configuration-free subset");
  std::string mode = "exact";
  std::uint64_t node_cap = SearchBudget{}.node_cap, extremal_seed = 1;
  double time_cap = SearchBudget{}.time_cap_seconds;
  std::size_t iterations = 2000;
  add_context_options(extremal, o, false);
  extremal->add_option("--kind", o.kind, "Configuration kind")
      ->check(CLI::IsMember({"elso", "harmadik", "quadruple", "corollary", "ap3", "corner", "ksv"}))
      ->required();
  extremal->add_option("--mode", mode, "exact | heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}))
      ->capture_default_str();
  extremal->add_option("--node-cap", node_cap, "Search node budget")->capture_default_str();
  extremal->add_option("--time-cap", time_cap, "Search time budget in seconds")->capture_default_str();
  extremal->add_option("--iterations", iterations, "Heuristic local-search iterations")->capture_default_str();
  extremal->add_option("--seed", extremal_seed, "Heuristic seed")->capture_default_str();

  auto* experiment = app.add_subcommand("experiment", "Hit rate of random subsets by density");
  std::string densities = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::size_t trials = 100;
  std::uint64_t experiment_seed = 1;
  add_context_options(experiment, o, false);
  experiment->add_option("--kind", o.kind, "Configuration kind")
      ->check(CLI::IsMember({"elso", "harmadik", "quadruple", "corollary", "ap3", "corner", "ksv"}))
      ->required();
  experiment->add_option("--densities", densities, "Comma-separated densities in (0, 1]")->capture_default_str();
  experiment->add_option("--trials", trials, "Trials per density")->capture_default_str();
  experiment->add_option("--seed", experiment_seed, "Seed")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the invariant suite, or re-check a witness");
  std::string witness_path;
  std::size_t max_order = 8;
  std::uint64_t verify_seed = 1;
  add_context_options(verify, o, true);
  verify->add_option("--witness", witness_path, "Witness or find-report JSON to re-validate");
  verify->add_option("--max-order", max_order, "Largest built-in group used by the suite")->capture_default_str();
  verify->add_option("--seed", verify_seed, "Seed for randomised properties")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*group) return cmd_group(o, group_action, out);
    if (*find) return cmd_find(o, method, scope, require, out);
    if (*count) return cmd_count(o, out);
    if (*census) return cmd_census(o, census_scope, hypergraph, out);
    if (*extremal) return cmd_extremal(o, mode, node_cap, time_cap, iterations, extremal_seed, out);
    if (*experiment) return cmd_experiment(o, densities, trials, experiment_seed, out);
    if (*verify) {
      if (!witness_path.empty()) return cmd_verify_witness(o, witness_path, out);
      return run_invariant_suite(max_order, verify_seed, out) ? kOk : kInvariantViolation;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return kUsage;
}

}  // namespace roth::cli
