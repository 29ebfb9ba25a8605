#include "common/csv.hpp"

#include <fstream>
#include <sstream>

#include "common/error.hpp"
#include "common/fs.hpp"
#include "common/num_format.hpp"

namespace flexarm {

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out_ += ',';
    out_ += header[i];
  }
  out_ += '\n';
  row_fill_ = columns_;
}

CsvWriter& CsvWriter::begin_row() {
  if (row_fill_ != columns_) throw UsageError("csv row incomplete");
  row_fill_ = 0;
  return *this;
}

CsvWriter& CsvWriter::col(const std::string& value) {
  if (row_fill_ >= columns_) throw UsageError("csv row overflow");
  if (row_fill_) out_ += ',';
  out_ += value;
  if (++row_fill_ == columns_) out_ += '\n';
  return *this;
}

CsvWriter& CsvWriter::col(double value) { return col(format_double(value)); }

CsvWriter& CsvWriter::col(long long value) { return col(std::to_string(value)); }

std::string CsvWriter::str() const {
  if (row_fill_ != columns_) throw UsageError("csv row incomplete");
  return out_;
}

void CsvWriter::write_file(const std::string& path) const {
  atomic_write_file(path, str());
}

size_t CsvTable::column_index(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw ConfigError("csv column not found: " + name);
}

double CsvTable::number(size_t row, const std::string& col) const {
  return parse_double(cell(row, col));
}

const std::string& CsvTable::cell(size_t row, const std::string& col) const {
  return rows.at(row).at(column_index(col));
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open csv: " + path);
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

}  // namespace flexarm
