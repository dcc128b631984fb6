#pragma once

// Minimal JSON-Schema validator covering the subset the shipped schema uses:
// type (string or array of strings), enum, const, required, properties,
// additionalProperties (boolean), items, oneOf. Collects human-readable
// violation messages.

#include <string>
#include <vector>

#include "json.hpp"

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  return false;
}

inline void validate(const json& value, const json& schema,
                     const std::string& path, std::vector<std::string>& errors);

inline bool validates_quietly(const json& value, const json& schema) {
  std::vector<std::string> scratch;
  validate(value, schema, "", scratch);
  return scratch.empty();
}

inline void validate(const json& value, const json& schema,
                     const std::string& path,
                     std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const json& type = schema["type"];
    bool ok = false;
    if (type.is_string()) {
      ok = type_matches(value, type.get<std::string>());
    } else {
      for (const auto& option : type) {
        ok = ok || type_matches(value, option.get<std::string>());
      }
    }
    if (!ok) {
      errors.push_back(path + ": type mismatch (expected " + type.dump() + ")");
      return;
    }
  }

  if (schema.contains("const") && value != schema["const"]) {
    errors.push_back(path + ": expected const " + schema["const"].dump());
  }

  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& option : schema["enum"]) found = found || value == option;
    if (!found) {
      errors.push_back(path + ": value not in enum " + schema["enum"].dump());
    }
  }

  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!value.contains(key.get<std::string>())) {
        errors.push_back(path + ": missing required key '" +
                         key.get<std::string>() + "'");
      }
    }
  }

  if (value.is_object() && schema.contains("properties")) {
    const json& properties = schema["properties"];
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (properties.contains(it.key())) {
        validate(it.value(), properties[it.key()], path + "/" + it.key(),
                 errors);
      } else if (schema.value("additionalProperties", json(true)) ==
                 json(false)) {
        errors.push_back(path + ": unexpected key '" + it.key() + "'");
      }
    }
  }

  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      validate(value[i], schema["items"], path + "[" + std::to_string(i) + "]",
               errors);
    }
  }

  if (schema.contains("oneOf")) {
    int matches = 0;
    for (const auto& option : schema["oneOf"]) {
      if (validates_quietly(value, option)) ++matches;
    }
    if (matches != 1) {
      errors.push_back(path + ": matched " + std::to_string(matches) +
                       " oneOf branches (want exactly 1)");
    }
  }
}

inline std::vector<std::string> validate_document(const json& value,
                                                  const json& schema) {
  std::vector<std::string> errors;
  validate(value, schema, "$", errors);
  return errors;
}

}  // namespace schema_check
