#include <charconv>
#include <cmath>
#include <system_error>

#include <json.hpp>

#include "eisenfun/cli.hpp"

namespace eisenfun::cli {

std::string format_number(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc{}) return {};
  return std::string(buf, end);
}

void write_csv(std::ostream& os, const DataTable& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      if (row[c] && std::isfinite(*row[c])) os << format_number(*row[c]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const DataTable& table) {
  auto records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] && std::isfinite(*row[c])) {
        record[table.columns[c]] = *row[c];
      } else {
        record[table.columns[c]] = nullptr;
      }
    }
    records.push_back(std::move(record));
  }
  os << records.dump(2) << '\n';
}

void write_table(std::ostream& os, const DataTable& table, Format format) {
  if (format == Format::json) {
    write_json(os, table);
  } else {
    write_csv(os, table);
  }
}

}  // namespace eisenfun::cli
