#pragma once

#include <string>
#include <vector>

namespace flexarm {

// CSV files are the primary experiment artifact: header row, fixed column
// order, shortest round-trip float formatting.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  CsvWriter& begin_row();
  CsvWriter& col(const std::string& value);
  CsvWriter& col(double value);
  CsvWriter& col(long long value);
  CsvWriter& col(int value) { return col(static_cast<long long>(value)); }
  CsvWriter& col(size_t value) { return col(static_cast<long long>(value)); }

  // Full file contents, ending with a newline.
  std::string str() const;
  void write_file(const std::string& path) const;

 private:
  size_t columns_;
  size_t row_fill_ = 0;
  std::string out_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  size_t column_index(const std::string& name) const;
  double number(size_t row, const std::string& col) const;
  const std::string& cell(size_t row, const std::string& col) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace flexarm
