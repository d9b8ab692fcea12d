#pragma once

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace dieselop::io {

/// Shortest decimal string that parses back to the exact same double.
std::string format_exact(double v);

/// 9 significant digits (trajectory CSV contract).
std::string format_sig9(double v);

double parse_double(std::string_view token);

std::vector<std::string> split_line(const std::string& line, char sep = ',');

/// Line-oriented CSV file with leading '#' comment lines.
class CsvFile {
 public:
  /// Reads all lines; comment lines (starting with '#') are collected
  /// separately, the first non-comment line is the header.
  static CsvFile read(const std::string& path);

  const std::vector<std::string>& comments() const { return comments_; }
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Streaming CSV writer; fails loudly on I/O errors.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);
  void comment(const std::string& text);
  void row(const std::vector<std::string>& cells);
  void close();

 private:
  std::string path_;
  std::ofstream out_;
};

}  // namespace dieselop::io
