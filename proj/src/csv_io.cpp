#include "fhsic/csv_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fhsic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

double parse_cell(std::string_view cell, const std::string& name,
                  std::size_t line_no, std::size_t column_no) {
  const std::string_view t = trim(cell);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw CsvError(name + " line " + std::to_string(line_no) + ", column " +
                   std::to_string(column_no) + ": cannot parse '" +
                   std::string(t) + "' as a number");
  }
  return value;
}

struct NumberedLine {
  std::size_t number;
  std::string text;
};

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

CurveSet parse_curve_set(std::istream& in, const std::string& name) {
  std::vector<NumberedLine> lines;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    if (trim(raw).empty()) {
      continue;  // blank lines carry no cells
    }
    lines.push_back({line_no, raw});
  }
  if (lines.empty()) {
    throw CsvError(name + ": no data");
  }

  std::size_t first_data = 0;
  std::vector<double> grid_points;
  {
    const auto fields = split_fields(lines[0].text);
    if (trim(fields[0]) == "t") {
      if (fields.size() < 3) {
        throw CsvError(name + " line " + std::to_string(lines[0].number) +
                       ": grid header needs at least 2 points");
      }
      for (std::size_t c = 1; c < fields.size(); ++c) {
        grid_points.push_back(
            parse_cell(fields[c], name, lines[0].number, c + 1));
      }
      first_data = 1;
    }
  }

  std::size_t columns = 0;
  std::vector<Curve> curves;
  for (std::size_t r = first_data; r < lines.size(); ++r) {
    const auto fields = split_fields(lines[r].text);
    if (columns == 0) {
      columns = grid_points.empty() ? fields.size() : grid_points.size();
      if (columns < 2) {
        throw CsvError(name + ": need at least 2 columns per curve");
      }
    }
    if (fields.size() != columns) {
      throw CsvError(name + " line " + std::to_string(lines[r].number) +
                     ": expected " + std::to_string(columns) +
                     " fields, found " + std::to_string(fields.size()));
    }
    Curve c;
    c.values.reserve(columns);
    for (std::size_t j = 0; j < columns; ++j) {
      c.values.push_back(parse_cell(fields[j], name, lines[r].number, j + 1));
    }
    curves.push_back(std::move(c));
  }
  if (curves.size() < 2) {
    throw CsvError(name + ": need at least 2 curve rows, found " +
                   std::to_string(curves.size()));
  }

  Grid grid = grid_points.empty() ? Grid::equispaced(columns)
                                  : Grid(std::move(grid_points));
  return CurveSet(std::move(grid), std::move(curves));
}

CurveSet read_curve_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CsvError(path + ": cannot open file");
  }
  return parse_curve_set(in, path);
}

void write_curve_set(std::ostream& out, const CurveSet& data) {
  out << 't';
  for (double p : data.grid().points()) {
    out << ',' << format_full(p);
  }
  out << '\n';
  for (const Curve& c : data.curves()) {
    for (std::size_t j = 0; j < c.values.size(); ++j) {
      if (j > 0) out << ',';
      out << format_full(c.values[j]);
    }
    out << '\n';
  }
}

void write_curve_set(const std::string& path, const CurveSet& data) {
  std::ofstream out(path);
  if (!out) {
    throw CsvError(path + ": cannot open file for writing");
  }
  write_curve_set(out, data);
}

}  // namespace fhsic
