#include "voi/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "voi/errors.hpp"

namespace voi {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 150;
constexpr double kTop = 30;
constexpr double kBottom = 50;

constexpr std::string_view kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (budget, y)
};

struct Axes {
  double x_min, x_max, y_min, y_max;

  double px(double budget) const {
    const double lx = std::log2(budget);
    const double span = x_max > x_min ? x_max - x_min : 1.0;
    return kLeft + (lx - x_min) / span * (kWidth - kLeft - kRight);
  }
  double py(double y) const {
    const double span = y_max > y_min ? y_max - y_min : 1.0;
    return kHeight - kBottom - (y - y_min) / span * (kHeight - kTop - kBottom);
  }
};

std::string render(const std::vector<Series>& series, std::string_view title, std::string_view y_label,
                   std::string_view x_label, double y_min, double y_max, const double* reference) {
  double lo = INFINITY;
  double hi = -INFINITY;
  std::vector<double> budgets;
  for (const auto& s : series) {
    for (auto [b, y] : s.points) {
      lo = std::min(lo, std::log2(b));
      hi = std::max(hi, std::log2(b));
      budgets.push_back(b);
    }
  }
  std::sort(budgets.begin(), budgets.end());
  budgets.erase(std::unique(budgets.begin(), budgets.end()), budgets.end());
  if (hi == lo) {
    lo -= 1;
    hi += 1;
  }
  const Axes ax{lo, hi, y_min, y_max};

  std::string out;
  auto add = [&out](std::string s) { out += s; };
  add(fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">)"
                  "\n",
                  kWidth, kHeight, kWidth, kHeight));
  add(R"(<rect width="100%" height="100%" fill="white"/>)"
      "\n");
  add(fmt::format(R"(<text x="{:.1f}" y="18" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>)"
                  "\n",
                  (kLeft + kWidth - kRight) / 2, title));

  // Axes and ticks.
  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double y1 = kTop;
  add(fmt::format(R"(<line x1="{:.1f}" y1="{:.1f}" x2="{:.1f}" y2="{:.1f}" stroke="black"/>)"
                  "\n",
                  x0, y0, x1, y0));
  add(fmt::format(R"(<line x1="{:.1f}" y1="{:.1f}" x2="{:.1f}" y2="{:.1f}" stroke="black"/>)"
                  "\n",
                  x0, y0, x0, y1));
  for (double b : budgets) {
    const double x = ax.px(b);
    add(fmt::format(R"(<line x1="{:.1f}" y1="{:.1f}" x2="{:.1f}" y2="{:.1f}" stroke="black"/>)"
                    "\n",
                    x, y0, x, y0 + 5));
    add(fmt::format(R"(<text x="{:.1f}" y="{:.1f}" font-family="sans-serif" font-size="11" text-anchor="middle">{}</text>)"
                    "\n",
                    x, y0 + 18, static_cast<unsigned long long>(b)));
  }
  for (int i = 0; i <= 5; ++i) {
    const double v = y_min + (y_max - y_min) * i / 5.0;
    const double y = ax.py(v);
    add(fmt::format(R"(<line x1="{:.1f}" y1="{:.1f}" x2="{:.1f}" y2="{:.1f}" stroke="black"/>)"
                    "\n",
                    x0 - 5, y, x0, y));
    add(fmt::format(R"(<text x="{:.1f}" y="{:.1f}" font-family="sans-serif" font-size="11" text-anchor="end">{:.3g}</text>)"
                    "\n",
                    x0 - 8, y + 4, v));
  }
  add(fmt::format(R"(<text x="{:.1f}" y="{:.1f}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>)"
                  "\n",
                  (x0 + x1) / 2, kHeight - 12, x_label));
  add(fmt::format(R"svg(<text x="16" y="{:.1f}" font-family="sans-serif" font-size="12" text-anchor="middle" transform="rotate(-90 16 {:.1f})">{}</text>)svg"
                  "\n",
                  (y0 + y1) / 2, (y0 + y1) / 2, y_label));

  if (reference) {
    const double y = ax.py(*reference);
    add(fmt::format(R"(<line x1="{:.1f}" y1="{:.1f}" x2="{:.1f}" y2="{:.1f}" stroke="gray" stroke-dasharray="6,4"/>)"
                    "\n",
                    x0, y, x1, y));
  }

  for (std::size_t s = 0; s < series.size(); ++s) {
    const std::string_view color = kPalette[s % std::size(kPalette)];
    std::string pts;
    for (auto [b, v] : series[s].points) {
      if (!pts.empty()) pts += ' ';
      pts += fmt::format("{:.2f},{:.2f}", ax.px(b), ax.py(v));
    }
    add(fmt::format(R"(<polyline fill="none" stroke="{}" stroke-width="2" points="{}"/>)"
                    "\n",
                    color, pts));
    const double ly = kTop + 20 + 18 * static_cast<double>(s);
    add(fmt::format(R"(<line x1="{:.1f}" y1="{:.1f}" x2="{:.1f}" y2="{:.1f}" stroke="{}" stroke-width="2"/>)"
                    "\n",
                    x1 + 15, ly, x1 + 40, ly, color));
    add(fmt::format(R"(<text x="{:.1f}" y="{:.1f}" font-family="sans-serif" font-size="12">{}</text>)"
                    "\n",
                    x1 + 45, ly + 4, series[s].label));
  }
  add("</svg>\n");
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << content;
  if (!file) throw std::runtime_error("failed writing " + path);
}

}  // namespace

std::string render_svg(const ResultTable& table) {
  if (table.rows.empty()) throw UsageError("cannot plot an empty result table");
  std::vector<Series> series;
  std::map<std::string, std::size_t> index;
  double y_max = 0.0;
  for (const ResultRow& r : table.rows) {
    auto [it, inserted] = index.try_emplace(r.policy, series.size());
    if (inserted) series.push_back({r.policy, {}});
    series[it->second].points.emplace_back(static_cast<double>(r.budget), r.mean_regret);
    y_max = std::max(y_max, r.mean_regret);
  }
  if (y_max <= 0.0) y_max = 1.0;
  return render(series, "Simple regret vs. number of samples", "mean simple regret", "samples (log2 scale)", 0.0,
                y_max * 1.05, nullptr);
}

std::string render_svg(const MatchReport& report) {
  if (report.rows.empty()) throw UsageError("cannot plot an empty match report");
  Series s{"engine A win rate", {}};
  for (const MatchResult& r : report.rows) s.points.emplace_back(static_cast<double>(r.budget), r.a_winrate);
  const double half = 0.5;
  return render({s}, "Win rate vs. samples per ply", "win rate", "samples per ply (log2 scale)", 0.0, 1.0, &half);
}

void emit_plot(const ResultTable& table, const std::string& path) { write_file(path, render_svg(table)); }

void emit_plot(const MatchReport& report, const std::string& path) { write_file(path, render_svg(report)); }

}  // namespace voi
