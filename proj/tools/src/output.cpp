#include "output.hpp"

#include <cstdio>

namespace noonsim {

namespace {

std::string cell_to_csv(const Cell& cell, int digits) {
  switch (cell.kind) {
    case Cell::Kind::empty:
      return "";
    case Cell::Kind::number:
      return format_double(cell.number_value, digits);
    case Cell::Kind::integer:
      return std::to_string(cell.integer_value);
    case Cell::Kind::boolean:
      return cell.bool_value ? "true" : "false";
    case Cell::Kind::text:
      return cell.text_value;
  }
  return "";
}

nlohmann::ordered_json cell_to_json(const Cell& cell) {
  switch (cell.kind) {
    case Cell::Kind::empty:
      return nullptr;
    case Cell::Kind::number:
      return cell.number_value;
    case Cell::Kind::integer:
      return cell.integer_value;
    case Cell::Kind::boolean:
      return cell.bool_value;
    case Cell::Kind::text:
      return cell.text_value;
  }
  return nullptr;
}

}  // namespace

std::string format_double(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return buffer;
}

std::string to_csv(const Report& report, int digits) {
  std::string out;
  out += "# noonsim " + report.command + "\n";
  for (const auto& [key, value] : report.config) {
    out += "# config " + key + "=" + cell_to_csv(value, digits) + "\n";
  }
  for (const auto& [key, value] : report.scalars) {
    if (report.table.has_value()) {
      // With a table present the scalar results ride along as metadata.
      out += "# " + key + "=" + cell_to_csv(value, digits) + "\n";
    }
  }
  for (const auto& warning : report.warnings) {
    out += "# warning " + warning.code + ": " + warning.message + "\n";
  }

  if (report.table.has_value()) {
    const Table& table = *report.table;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      if (i) out += ",";
      out += table.header[i];
    }
    out += "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ",";
        out += cell_to_csv(row[i], digits);
      }
      out += "\n";
    }
  } else {
    // Scalar report: one header row, one value row.
    for (std::size_t i = 0; i < report.scalars.size(); ++i) {
      if (i) out += ",";
      out += report.scalars[i].first;
    }
    out += "\n";
    for (std::size_t i = 0; i < report.scalars.size(); ++i) {
      if (i) out += ",";
      out += cell_to_csv(report.scalars[i].second, digits);
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json envelope;
  envelope["command"] = report.command;

  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.config) {
    config[key] = cell_to_json(value);
  }
  envelope["config"] = std::move(config);

  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.scalars) {
    results[key] = cell_to_json(value);
  }
  if (report.table.has_value()) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.table->rows) {
      nlohmann::ordered_json row_object = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        row_object[report.table->header[i]] = cell_to_json(row[i]);
      }
      rows.push_back(std::move(row_object));
    }
    results["rows"] = std::move(rows);
  }
  for (const auto& [key, value] : report.json_extras) {
    results[key] = value;
  }
  envelope["results"] = std::move(results);

  nlohmann::ordered_json warnings = nlohmann::ordered_json::array();
  for (const auto& warning : report.warnings) {
    warnings.push_back({{"code", warning.code}, {"message", warning.message}});
  }
  envelope["warnings"] = std::move(warnings);

  return envelope.dump(2) + "\n";
}

std::string error_json(const std::string& code, const std::string& message,
                       nlohmann::ordered_json details) {
  nlohmann::ordered_json object;
  object["error"]["code"] = code;
  object["error"]["message"] = message;
  if (!details.is_null() && !details.empty()) {
    object["error"]["details"] = std::move(details);
  }
  return object.dump() + "\n";
}

}  // namespace noonsim
