#include <gtest/gtest.h>

#include "roth/named_groups.hpp"
#include "roth/serialize.hpp"

using namespace roth;

TEST(WitnessJson, RoundTrip) {
  const ConfigWitness w{ConfigKind::kCorner, {{0, 0}, {1, 0}, {0, 1}}, 1};
  const auto doc = to_json(w);
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
  EXPECT_EQ(doc["kind"], "corner");
  EXPECT_EQ(witness_from_json(doc), w);
  EXPECT_EQ(witness_from_json(nlohmann::json{{"witness", doc}}), w);

  const ConfigWitness h{ConfigKind::kHarmadik, {{0, 1}, {0, 0}, {1, 2}}, std::nullopt};
  EXPECT_TRUE(to_json(h)["parameter"].is_null());
  EXPECT_EQ(witness_from_json(to_json(h)), h);
}

TEST(WitnessJson, Malformed) {
  for (const char* text : {R"([1,2])", R"({"kind":"elso"})", R"({"kind":"nope","points":[]})",
                           R"({"kind":"elso","points":"x"})"})
    EXPECT_THROW(witness_from_json(nlohmann::json::parse(text)), Error) << text;
}

TEST(TraceJson, StagesAreListedInOrder) {
  const auto g = make_named_group(GroupSpec::cyclic(3));
  const auto result = harmadik_pipeline(PairSet::full(g), Subgroup::whole(g));
  const auto doc = to_json(result.trace);
  ASSERT_EQ(doc["stages"].size(), 6u);
  const std::vector<std::string> names{"subgroup", "pigeonhole", "stage1", "fixed_x", "stage2", "extract"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    EXPECT_EQ(doc["stages"][i]["name"], names[i]);
    EXPECT_EQ(doc["stages"][i]["status"], "ok");
  }
  EXPECT_TRUE(doc["failed_stage"].is_null());

  const auto empty = to_json(harmadik_pipeline(PairSet::empty(g), Subgroup::whole(g)).trace);
  EXPECT_EQ(empty["failed_stage"], "stage1");
  EXPECT_EQ(empty["stages"][2]["status"], "not_found");
  EXPECT_EQ(empty["stages"][4]["status"], "skipped");
}

TEST(ExperimentCsv, HeaderAndRows) {
  ExperimentReport r;
  r.group_label = "cyclic:4";
  r.subgroup_label = "whole";
  r.kind = ConfigKind::kAp3;
  r.seed = 9;
  r.rows.push_back({0.5, 2, 10, 3, 0.3});
  EXPECT_EQ(to_csv(r), "group,subgroup,kind,density,set_size,trials,hits,hit_fraction,seed\n"
                       "cyclic:4,\"whole\",ap3,0.5,2,10,3,0.3,9\n");
}
