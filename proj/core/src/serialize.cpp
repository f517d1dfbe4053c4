#include "roth/serialize.hpp"

#include <charconv>
#include <sstream>

namespace roth {

using nlohmann::json;

json to_json(const ConfigWitness& w) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", std::string(to_string(w.kind))},
              {"points", w.points},
              {"parameter", w.parameter ? json(*w.parameter) : json(nullptr)}};
}

ConfigWitness witness_from_json(const json& doc) {
  const json& w = doc.contains("witness") ? doc.at("witness") : doc;
  if (!w.is_object()) throw Error(ErrorCode::kParse, "witness must be a JSON object");
  try {
    ConfigWitness out;
    out.kind = parse_config_kind(w.at("kind").get<std::string>());
    out.points = w.at("points").get<std::vector<std::vector<Element>>>();
    if (w.contains("parameter") && !w.at("parameter").is_null()) out.parameter = w.at("parameter").get<Element>();
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad witness JSON: ") + e.what());
  }
}

json to_json(const DegeneracyPolicy& p) {
  return json{{"require_nonidentity_parameter", p.require_nonidentity_parameter},
              {"require_distinct_rows", p.require_distinct_rows},
              {"exclude_order_two_parameter", p.exclude_order_two_parameter},
              {"require_distinct_points", p.require_distinct_points}};
}

json to_json(const CensusReport& c) {
  return json{{"generator_count", c.generator_count},
              {"total_count", c.total_count},
              {"non_generator_count", c.non_generator_count},
              {"edge_disjoint", c.edge_disjoint},
              {"unique_clique_cover", c.unique_clique_cover}};
}

json to_json(const CosetPairChoice& c) {
  return json{{"left", c.left}, {"right", c.right}, {"count", c.count}, {"bound", c.bound}};
}

json to_json(const HarmadikTrace& t) {
  json stages = json::array();
  auto status = [&t](const char* name, bool reached) -> std::string {
    if (t.failed_stage && *t.failed_stage == name) return "not_found";
    return reached ? "ok" : "skipped";
  };
  stages.push_back({{"name", "subgroup"}, {"status", "ok"}, {"auto", t.subgroup_auto}, {"elements", t.subgroup}});
  json pigeon{{"name", "pigeonhole"}, {"status", status("pigeonhole", t.coset_pair.has_value())}};
  if (t.coset_pair) pigeon.update(to_json(*t.coset_pair));
  stages.push_back(pigeon);
  json first{{"name", "stage1"}, {"status", status("stage1", t.stage1.has_value())}};
  if (t.stage1) first["census"] = to_json(*t.stage1);
  stages.push_back(first);
  json fixed{{"name", "fixed_x"}, {"status", status("fixed_x", t.x.has_value())}, {"distinct_x", t.distinct_x}};
  fixed["x"] = t.x ? json(*t.x) : json(nullptr);
  fixed["triple_count"] = t.triples.size();
  stages.push_back(fixed);
  json second{{"name", "stage2"}, {"status", status("stage2", t.stage2.has_value())}, {"rejected", t.stage2_rejected}};
  if (t.stage2) second["census"] = to_json(*t.stage2);
  second["matched_triples"] = t.matched ? json(*t.matched) : json(nullptr);
  stages.push_back(second);
  stages.push_back({{"name", "extract"},
                    {"status", status("extract", t.matched.has_value() && !t.failed_stage)}});
  return json{{"schema_version", kSchemaVersion},
              {"stages", stages},
              {"failed_stage", t.failed_stage ? json(*t.failed_stage) : json(nullptr)},
              {"detail", t.detail ? json(*t.detail) : json(nullptr)}};
}

json to_json(const GroupFacts& f) {
  return json{{"order", f.order},
              {"is_abelian", f.is_abelian},
              {"p_group_prime", f.p_group_prime ? json(*f.p_group_prime) : json(nullptr)},
              {"element_orders", f.element_orders},
              {"center_size", f.center_size},
              {"exponent", f.exponent}};
}

json to_json(const ExperimentReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"density", row.density},
                    {"set_size", row.set_size},
                    {"trials", row.trials},
                    {"hits", row.hits},
                    {"hit_fraction", row.hit_fraction}});
  return json{{"schema_version", kSchemaVersion},
              {"group", r.group_label},
              {"subgroup", r.subgroup_label},
              {"kind", std::string(to_string(r.kind))},
              {"dimension", r.dimension},
              {"policy", to_json(r.policy)},
              {"trials", r.trials},
              {"seed", r.seed},
              {"rows", rows}};
}

namespace {

// Shortest text that reads back to the same double.
std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "group,subgroup,kind,density,set_size,trials,hits,hit_fraction,seed\n";
  for (const auto& row : r.rows) {
    out << r.group_label << ",\"" << r.subgroup_label << "\"," << to_string(r.kind) << ','
        << shortest(row.density) << ',' << row.set_size << ',' << row.trials << ',' << row.hits << ','
        << shortest(row.hit_fraction) << ',' << r.seed << '\n';
  }
  return out.str();
}

}  // namespace roth
