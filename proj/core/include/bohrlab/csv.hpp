#pragma once

// CSV persistence. Every file starts with a schema line
//   # schema=bohrlab/<kind>/<version>
// followed by a header row. Doubles are written in shortest round-trip form.

#include <string>
#include <string_view>
#include <vector>

namespace bohrlab {

std::string format_double(double v);

class CsvTable {
 public:
  static constexpr int kVersion = 1;

  CsvTable(std::string kind, std::vector<std::string> columns);

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

  /// Throws if the row width differs from the header.
  void add_row(std::vector<std::string> row);
  void append(const CsvTable& other);

  std::string schema_line() const;
  std::string str() const;
  /// Throws std::runtime_error when the path cannot be written.
  void write(const std::string& path) const;

  /// Parses text produced by str(). Rejects a missing or foreign schema line
  /// and ragged rows.
  static CsvTable parse(std::string_view text);

 private:
  std::string kind_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace bohrlab
