#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "permspec/serialize.hpp"

namespace permspec::cli {

enum class Format { Json, Csv, Text };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// json prints `doc`, or one line per element of `lines` when that is set
struct Output {
  Json doc;
  std::vector<Json> lines;
  Table table;
};

void emit(std::ostream& out, const Output& output, Format format);

// flat key/value rows for reports without a natural table
Table key_value_table(const Json& doc);

std::string cell(const Json& v);

}  // namespace permspec::cli
