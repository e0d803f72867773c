#pragma once

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace relcli {

// All numeric CSV output goes through this: 12 significant digits, so that
// emit -> parse -> emit is byte-stable.
inline std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct csv_table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

inline std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

inline double parse_cell(const std::string& cell) {
  const char* s = cell.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0') throw std::runtime_error("not a number: '" + cell + "'");
  return v;
}

// Header row then numeric rows; ragged or non-numeric rows are errors.
inline csv_table parse_csv(std::istream& in) {
  csv_table t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      t.header = split_fields(line, ',');
      first = false;
      continue;
    }
    std::vector<std::string> cells = split_fields(line, ',');
    if (cells.size() != t.header.size())
      throw std::runtime_error("row has " + std::to_string(cells.size()) +
                               " fields, header has " + std::to_string(t.header.size()));
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& c : cells) row.push_back(parse_cell(c));
    t.rows.push_back(std::move(row));
  }
  if (first) throw std::runtime_error("no header row");
  return t;
}

inline std::string emit_csv(const csv_table& t) {
  std::string out;
  for (size_t i = 0; i < t.header.size(); ++i) {
    if (i) out += ',';
    out += t.header[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += g12(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace relcli
