#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "packetlab/errors.hpp"
#include "packetlab/types.hpp"

namespace packetlab {

// RFC-4180-style CSV: header row, '.' decimal point, '\n' line ends, UTF-8.
// Values are printed with %.17g so reruns are byte-identical.
struct CsvWriter {
  std::vector<std::string> header;
  std::vector<std::vector<Real>> rows;

  explicit CsvWriter(std::vector<std::string> columns) : header(std::move(columns)) {}

  void add_row(std::initializer_list<Real> values) {
    if (values.size() != header.size()) throw ShapeError("csv row width mismatch");
    rows.emplace_back(values);
  }
  void add_row(const std::vector<Real>& values) {
    if (values.size() != header.size()) throw ShapeError("csv row width mismatch");
    rows.push_back(values);
  }

  void write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    for (size_t i = 0; i < header.size(); ++i) {
      out << header[i];
      out << (i + 1 == header.size() ? "\n" : ",");
    }
    char buf[40];
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
        out << buf << (i + 1 == row.size() ? "\n" : ",");
      }
    }
  }
};

}  // namespace packetlab
