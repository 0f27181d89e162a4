#pragma once

// Minimal CSV support: header-row numeric tables for input, deterministic
// shortest round-trip formatting for output.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace esolow::csv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Numeric table with named columns; row-major cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::optional<std::size_t> column_index(const std::string& name) const;
};

/// Reads a comma-separated table: one header row, '.' decimal separator,
/// UTF-8 (an optional BOM is ignored).
Table read_table(const std::filesystem::path& path);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Writes rows of preformatted cells under a header row, LF-terminated.
void write_rows(const std::filesystem::path& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

}  // namespace esolow::csv
