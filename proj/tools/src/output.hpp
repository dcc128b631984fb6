#pragma once

// Output model for the noonsim CLI. Every command produces a Report; the
// emitters render it as CSV (comment-embedded metadata, stable header, LF
// endings) or as a single JSON envelope {command, config, results, warnings}.
// Identical reports always serialize to identical bytes.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace noonsim {

struct Cell {
  enum class Kind { empty, number, integer, boolean, text };

  Kind kind = Kind::empty;
  double number_value = 0.0;
  std::int64_t integer_value = 0;
  bool bool_value = false;
  std::string text_value;

  static Cell empty() { return {}; }
  static Cell number(double v) {
    Cell c;
    c.kind = Kind::number;
    c.number_value = v;
    return c;
  }
  static Cell integer(std::int64_t v) {
    Cell c;
    c.kind = Kind::integer;
    c.integer_value = v;
    return c;
  }
  static Cell boolean(bool v) {
    Cell c;
    c.kind = Kind::boolean;
    c.bool_value = v;
    return c;
  }
  static Cell text(std::string v) {
    Cell c;
    c.kind = Kind::text;
    c.text_value = std::move(v);
    return c;
  }
};

struct Warning {
  std::string code;
  std::string message;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> config;   // resolved, fixed order
  std::vector<std::pair<std::string, Cell>> scalars;  // scalar results
  std::optional<Table> table;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> json_extras;
  std::vector<Warning> warnings;
  int exit_code = 0;  // nonzero for reportable failures (e.g. infeasible)
  std::optional<Warning> error;  // machine-readable error for stderr
};

// Full double precision by default (17 significant digits) so golden-file
// comparisons are exact; smaller `digits` prettifies.
std::string format_double(double value, int digits);

std::string to_csv(const Report& report, int digits);
std::string to_json(const Report& report);

// {"error": {"code", "message", "details"}} line for stderr.
std::string error_json(const std::string& code, const std::string& message,
                       nlohmann::ordered_json details = {});

}  // namespace noonsim
