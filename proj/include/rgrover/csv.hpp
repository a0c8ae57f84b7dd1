#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace rgrover {

// Doubles are printed with 17 significant digits so files round-trip exactly
// and reruns are byte-identical.
inline std::string csv_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string csv_num(long long x) { return std::to_string(x); }
inline std::string csv_num(unsigned long long x) { return std::to_string(x); }

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& columns)
      : out_(out) {
    write_row(columns);
  }

  template <typename... Cells>
  void row(const Cells&... cells) {
    std::vector<std::string> r;
    r.reserve(sizeof...(cells));
    (r.push_back(cell(cells)), ...);
    write_row(r);
  }

 private:
  static std::string cell(double x) { return csv_num(x); }
  static std::string cell(int x) { return std::to_string(x); }
  static std::string cell(long x) { return std::to_string(x); }
  static std::string cell(long long x) { return std::to_string(x); }
  static std::string cell(unsigned x) { return std::to_string(x); }
  static std::string cell(unsigned long x) { return std::to_string(x); }
  static std::string cell(unsigned long long x) { return std::to_string(x); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }

  void write_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  std::ostream& out_;
};

}  // namespace rgrover
