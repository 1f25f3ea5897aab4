#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ssmlp {

// Small text helpers shared by the CSV reader/writers.

void trim(std::string& s);

// Splits one CSV line on commas. No quoting; a trailing comma yields a
// trailing empty cell.
std::vector<std::string> split_csv_line(const std::string& line);

// Strict full-token numeric parse ("C" locale, decimal or scientific).
std::optional<double> parse_number(std::string_view token);

// Shortest decimal string that round-trips to the same double.
std::string to_decimal_string(double value);

} // namespace ssmlp
