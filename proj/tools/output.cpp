#include "output.hpp"

#include <algorithm>
#include <ostream>

namespace permspec::cli {

namespace {

bool is_exact_object(const Json& v) {
  return v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void flatten(const std::string& prefix, const Json& v, Table& table) {
  if (v.is_object() && !is_exact_object(v) && !v.empty()) {
    for (const auto& [key, child] : v.items()) flatten(prefix.empty() ? key : prefix + "." + key, child, table);
    return;
  }
  table.rows.push_back({prefix, cell(v)});
}

}  // namespace

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (is_exact_object(v)) {
    const auto den = v.at("den").get<std::string>();
    const auto num = v.at("num").get<std::string>();
    return den == "1" ? num : num + "/" + den;
  }
  if (v.is_array()) {
    std::string s;
    for (const auto& item : v) s += (s.empty() ? "" : " ") + cell(item);
    return s;
  }
  if (v.is_null()) return "";
  return v.dump();
}

Table key_value_table(const Json& doc) {
  Table table{{"key", "value"}, {}};
  flatten("", doc, table);
  return table;
}

void emit(std::ostream& out, const Output& output, Format format) {
  if (format == Format::Json) {
    if (!output.lines.empty()) {
      for (const auto& line : output.lines) out << line.dump() << '\n';
    } else {
      out << output.doc.dump(2) << '\n';
    }
    return;
  }
  const Table table = output.table.header.empty() ? key_value_table(output.doc) : output.table;
  if (format == Format::Csv) {
    auto row_out = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    };
    row_out(table.header);
    for (const auto& row : table.rows) row_out(row);
    return;
  }
  std::vector<std::size_t> width(table.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  measure(table.header);
  for (const auto& row : table.rows) measure(row);
  auto row_out = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << '\n';
  };
  row_out(table.header);
  for (const auto& row : table.rows) row_out(row);
}

}  // namespace permspec::cli
