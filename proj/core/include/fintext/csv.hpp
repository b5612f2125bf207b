#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace fintext {

/// Splits one CSV line into fields. Double-quoted fields may contain commas
/// and doubled quotes; embedded newlines are not supported.
std::vector<std::string> split_csv_line(std::string_view line);

/// Quotes a field if it contains a comma, quote, or leading/trailing space.
std::string csv_escape(std::string_view field);

/// Line-oriented CSV reader. Skips blank lines, strips trailing '\r'.
class CsvReader {
 public:
  explicit CsvReader(const std::filesystem::path& path);

  /// Reads the next row; returns false at end of file.
  bool next(std::vector<std::string>& fields);

  std::size_t line_number() const { return line_number_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ifstream stream_;
  std::size_t line_number_ = 0;
};

/// Locale-independent shortest round-trip formatting of a double.
std::string format_double(double value);

/// Strict double parse of a whole field. Throws DataError.
double parse_double(std::string_view field, std::string_view context);

/// Strict integer parse of a whole field. Throws DataError.
long long parse_integer(std::string_view field, std::string_view context);

}  // namespace fintext
