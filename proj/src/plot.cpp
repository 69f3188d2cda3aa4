#include "eralign/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "eralign/experiment.hpp"

namespace eralign {

namespace {

constexpr double kWidth = 800, kHeight = 600;
constexpr double kLeft = 80, kRight = 160, kTop = 40, kBottom = 70;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

template <class T>
T field(std::string_view s, std::size_t line, const char* name) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw CsvParseError(line, std::string("bad value '") + std::string(s) + "' in column " + name);
  }
  return v;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::vector<SweepRow> parse_sweep_csv(std::string_view text) {
  std::vector<SweepRow> rows;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != kSweepCsvHeader) throw CsvParseError(line_no, "expected header '" + std::string(kSweepCsvHeader) + "'");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    const auto cols = split(line);
    if (cols.size() != 11) {
      throw CsvParseError(line_no, "expected 11 columns, found " + std::to_string(cols.size()));
    }
    SweepRow r;
    r.n = field<std::size_t>(cols[0], line_no, "n");
    r.p11 = field<double>(cols[1], line_no, "p11");
    r.p10 = field<double>(cols[2], line_no, "p10");
    r.p01 = field<double>(cols[3], line_no, "p01");
    r.p00 = field<double>(cols[4], line_no, "p00");
    r.trials = field<std::size_t>(cols[5], line_no, "trials");
    r.strict_rate = field<double>(cols[6], line_no, "strict_rate");
    r.mean_eta = field<double>(cols[7], line_no, "mean_eta");
    r.mean_q = field<double>(cols[8], line_no, "mean_q");
    r.mean_aut = field<double>(cols[9], line_no, "mean_aut");
    r.seed = field<std::uint64_t>(cols[10], line_no, "seed");
    if (r.n < 2) throw CsvParseError(line_no, "n must be at least 2 to place p11 in threshold units");
    rows.push_back(r);
  }
  if (!header_seen) throw CsvParseError(1, "empty file, expected header");
  return rows;
}

std::string render_svg(const std::vector<SweepRow>& rows) {
  std::map<std::size_t, std::vector<std::pair<double, double>>> series;
  double x_max = 1.0;
  for (const SweepRow& r : rows) {
    const double x = r.p11 * static_cast<double>(r.n) / std::log(static_cast<double>(r.n));
    series[r.n].emplace_back(x, r.strict_rate);
    x_max = std::max(x_max, x);
  }
  x_max *= 1.05;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + x / x_max * pw; };
  auto sy = [&](double y) { return kTop + (1 - y) * ph; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  s << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  // axes
  s << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  s << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(kLeft + pw) << "\" y2=\""
    << num(sy(0)) << "\"/>\n";
  s << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(kLeft) << "\" y2=\""
    << num(sy(1)) << "\"/>\n";
  s << "</g>\n";
  s << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double y = i / 5.0;
    s << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(sy(y)) << "\" x2=\"" << num(kLeft) << "\" y2=\""
      << num(sy(y)) << "\" stroke=\"black\"/>";
    s << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(sy(y) + 4) << "\" text-anchor=\"end\">" << num(y)
      << "</text>\n";
  }
  const int xticks = 5;
  for (int i = 0; i <= xticks; ++i) {
    const double x = x_max * i / xticks;
    s << "<line x1=\"" << num(sx(x)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(x)) << "\" y2=\""
      << num(sy(0) + 5) << "\" stroke=\"black\"/>";
    s << "<text x=\"" << num(sx(x)) << "\" y=\"" << num(sy(0) + 20) << "\" text-anchor=\"middle\">" << num(x)
      << "</text>\n";
  }
  s << "</g>\n";
  s << "<text class=\"xlabel\" x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 20)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">p11 &#183; n / ln n</text>\n";
  s << "<text class=\"ylabel\" x=\"20\" y=\"" << num(kTop + ph / 2) << "\" transform=\"rotate(-90 20 "
    << num(kTop + ph / 2)
    << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">strict success rate</text>\n";
  s << "<line class=\"threshold\" x1=\"" << num(sx(1)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(1))
    << "\" y2=\"" << num(sy(1)) << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";

  std::size_t k = 0;
  for (auto& [n, pts] : series) {
    std::stable_sort(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.first < b.first; });
    const char* color = kPalette[k % std::size(kPalette)];
    s << "<g class=\"series\" data-n=\"" << n << "\">\n<polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      s << (i ? " " : "") << num(sx(pts[i].first)) << ',' << num(sy(pts[i].second));
    }
    s << "\"/>\n";
    for (const auto& [x, y] : pts) {
      s << "<circle class=\"marker\" cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"4\" fill=\""
        << color << "\"/>\n";
    }
    s << "</g>\n";
    const double ly = kTop + 20 + 22 * static_cast<double>(k);
    s << "<g class=\"legend\"><line x1=\"" << num(kWidth - kRight + 20) << "\" y1=\"" << num(ly) << "\" x2=\""
      << num(kWidth - kRight + 50) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
      << "\" stroke-width=\"2\"/><text x=\"" << num(kWidth - kRight + 58) << "\" y=\"" << num(ly + 4)
      << "\" font-family=\"sans-serif\" font-size=\"12\">n=" << n << "</text></g>\n";
    ++k;
  }
  s << "</svg>\n";
  return s.str();
}

void emit_plot(const std::string& csv_path, const std::string& svg_path) {
  write_text_file(svg_path, render_svg(parse_sweep_csv(read_text_file(csv_path))));
}

}  // namespace eralign
