#pragma once

// Minimal JSON Schema checker covering the keywords used by
// docs/output.schema.json: $ref (local), type, const, enum, required,
// properties, additionalProperties: false, minimum, maximum.

#include <json.hpp>

#include <string>
#include <vector>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json &v, const std::string &t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}

inline void check(const json &root, const json &schema, const json &v, const std::string &path,
                  std::vector<std::string> &errors) {
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"];
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) {
      errors.push_back(path + ": unsupported $ref " + ref);
      return;
    }
    check(root, root["$defs"][ref.substr(prefix.size())], v, path, errors);
    return;
  }
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto &t : schema["type"]) ok = ok || type_matches(v, t);
    } else {
      ok = type_matches(v, schema["type"]);
    }
    if (!ok) errors.push_back(path + ": wrong type");
  }
  if (schema.contains("const") && v != schema["const"]) errors.push_back(path + ": const mismatch");
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto &e : schema["enum"]) found = found || e == v;
    if (!found) errors.push_back(path + ": not in enum");
  }
  if (v.is_number()) {
    if (schema.contains("minimum") && v.get<double>() < schema["minimum"].get<double>())
      errors.push_back(path + ": below minimum");
    if (schema.contains("maximum") && v.get<double>() > schema["maximum"].get<double>())
      errors.push_back(path + ": above maximum");
  }
  if (v.is_object()) {
    if (schema.contains("required"))
      for (const auto &k : schema["required"])
        if (!v.contains(k.get<std::string>())) errors.push_back(path + ": missing " + k.get<std::string>());
    const bool closed = schema.contains("additionalProperties") && schema["additionalProperties"] == false;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (schema.contains("properties") && schema["properties"].contains(it.key()))
        check(root, schema["properties"][it.key()], it.value(), path + "/" + it.key(), errors);
      else if (closed)
        errors.push_back(path + ": unexpected " + it.key());
    }
  }
}

inline std::vector<std::string> validate(const json &schema, const json &doc) {
  std::vector<std::string> errors;
  check(schema, schema, doc, "", errors);
  return errors;
}

}  // namespace schema_check
