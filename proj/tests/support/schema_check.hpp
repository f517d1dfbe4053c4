#pragma once

// Checks a JSON document against the subset of JSON Schema used in schemas/:
// type, const, enum, required, properties, additionalProperties (false only),
// items, minItems, maxItems, minimum, maximum, oneOf.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace schema {

using nlohmann::json;

inline bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  return false;
}

inline void check(const json& v, const json& s, const std::string& path, std::vector<std::string>& errors) {
  auto fail = [&](const std::string& what) { errors.push_back(path + ": " + what); };
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || type_matches(v, t.get<std::string>());
    } else {
      ok = type_matches(v, s["type"].get<std::string>());
    }
    if (!ok) return fail("expected type " + s["type"].dump() + ", got " + v.dump());
  }
  if (s.contains("const") && v != s["const"]) fail("expected " + s["const"].dump());
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) fail(v.dump() + " not in enum");
  }
  if (v.is_number()) {
    if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) fail("below minimum");
    if (s.contains("maximum") && v.get<double>() > s["maximum"].get<double>()) fail("above maximum");
  }
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& key : s["required"])
        if (!v.contains(key.get<std::string>())) fail("missing " + key.get<std::string>());
    const json props = s.value("properties", json::object());
    for (const auto& [key, value] : v.items()) {
      if (props.contains(key))
        check(value, props[key], path + "." + key, errors);
      else if (s.contains("additionalProperties") && s["additionalProperties"] == false)
        fail("unexpected property " + key);
    }
  }
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) fail("too few items");
    if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) fail("too many items");
    if (s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], path + "[" + std::to_string(i) + "]", errors);
  }
  if (s.contains("oneOf")) {
    std::size_t matches = 0;
    for (const auto& alt : s["oneOf"]) {
      std::vector<std::string> sub;
      check(v, alt, path, sub);
      if (sub.empty()) ++matches;
    }
    if (matches != 1) fail("matches " + std::to_string(matches) + " oneOf branches");
  }
}

inline std::vector<std::string> validate(const json& doc, const json& schema) {
  std::vector<std::string> errors;
  check(doc, schema, "$", errors);
  return errors;
}

}  // namespace schema
