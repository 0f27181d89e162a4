#include "esolow/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <system_error>

namespace esolow::csv {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

}  // namespace

std::optional<std::size_t> Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  return std::nullopt;
}

Table read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");

  Table table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
      line.erase(0, 3);
    if (line.empty()) continue;

    if (table.columns.empty()) {
      table.columns = split_fields(line);
      if (table.columns.empty() || table.columns.front().empty())
        throw ParseError("missing header row in '" + path.string() + "'", line_no);
      continue;
    }

    const auto fields = split_fields(line);
    if (fields.size() != table.columns.size())
      throw ParseError("expected " + std::to_string(table.columns.size()) + " fields, got " +
                           std::to_string(fields.size()) + " in '" + path.string() + "'",
                       line_no);
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& field : fields) {
      double value = 0.0;
      const auto* first = field.data();
      const auto* last = field.data() + field.size();
      const auto result = std::from_chars(first, last, value);
      if (result.ec != std::errc{} || result.ptr != last)
        throw ParseError("malformed numeric field '" + field + "' in '" + path.string() + "'",
                         line_no);
      row.push_back(value);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty())
    throw ParseError("empty file '" + path.string() + "'", line_no == 0 ? 1 : line_no);
  return table;
}

std::string format_double(double value) {
  std::array<char, 32> buf;
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), result.ptr);
}

void write_rows(const std::filesystem::path& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path.string() + "'");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
}

}  // namespace esolow::csv
