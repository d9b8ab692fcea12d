#include "dieselop/io/csv.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

#include "dieselop/errors.hpp"

namespace dieselop::io {

std::string format_exact(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_sig9(double v) {
  char buf[40];
  int n = std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

double parse_double(std::string_view token) {
  double value = 0.0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw DataError("csv_parse", "invalid numeric field '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string> split_line(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return cells;
}

CsvFile CsvFile::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("file_open", "cannot open '" + path + "' for reading");
  CsvFile f;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      f.comments_.push_back(line);
      continue;
    }
    if (!have_header) {
      f.header_ = split_line(line);
      have_header = true;
    } else {
      f.rows_.push_back(split_line(line));
    }
  }
  if (in.bad()) throw IoError("file_read", "read failure on '" + path + "'");
  return f;
}

CsvWriter::CsvWriter(const std::string& path) : path_(path), out_(path, std::ios::trunc) {
  if (!out_) throw IoError("file_open", "cannot open '" + path + "' for writing");
}

void CsvWriter::comment(const std::string& text) {
  out_ << "# " << text << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << "\n";
}

void CsvWriter::close() {
  out_.flush();
  if (!out_) throw IoError("file_write", "write failure on '" + path_ + "'");
  out_.close();
}

}  // namespace dieselop::io
