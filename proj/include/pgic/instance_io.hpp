#pragma once

// Instance files (JSON) and CSV formatting helpers.
//
// Instance format:
//   {"channels": [{"a": 0.6, "b": 0.6, "c": 4, "d": 4}, ...], "P": 0.5, "Q": 0.5}
// All keys are required and no other keys are accepted.

#include <string>
#include <string_view>
#include <vector>

#include "pgic/model.hpp"

namespace pgic {

// Throws Error{ParseError} for malformed JSON, missing or unknown keys and
// non-numeric values; model validation errors propagate unchanged.
PgicInstance parse_instance(std::string_view text);

// Reads and parses a file; an unreadable file is a ParseError.
PgicInstance load_instance(const std::string& path);

std::string instance_to_json(const PgicInstance& inst);

// Twelve significant digits ("%.12g").
std::string format_number(double x);

// Joins fields with commas, quoting any field that contains a comma or quote.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace pgic
