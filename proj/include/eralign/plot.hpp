#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eralign {

/// A sweep CSV that does not match the schema; `line` is 1-based.
class CsvParseError : public std::runtime_error {
 public:
  CsvParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct SweepRow {
  std::size_t n = 0;
  double p11 = 0, p10 = 0, p01 = 0, p00 = 0;
  std::size_t trials = 0;
  double strict_rate = 0;
  double mean_eta = 0;
  double mean_q = 0;
  double mean_aut = 0;
  std::uint64_t seed = 0;
};

std::vector<SweepRow> parse_sweep_csv(std::string_view text);

/// 800x600 SVG: x = p11 n / ln n, y = strict success rate, one polyline per n,
/// and a dashed reference line at x = 1.
std::string render_svg(const std::vector<SweepRow>& rows);

void emit_plot(const std::string& csv_path, const std::string& svg_path);

}  // namespace eralign
