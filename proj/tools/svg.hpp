#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "csv.hpp"

namespace relcli {

struct svg_options {
  bool x_log = false;
  bool y_log = false;
  std::string title;
};

namespace detail {

inline std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

struct axis_range {
  double lo = 0.0, hi = 1.0;
  bool log = false;

  double to_unit(double v) const {
    double a = log ? std::log10(lo) : lo;
    double b = log ? std::log10(hi) : hi;
    double x = log ? std::log10(v) : v;
    return (x - a) / (b - a);
  }
};

inline axis_range make_range(double lo, double hi, bool log) {
  axis_range r;
  r.log = log;
  if (log) {
    double a = std::log10(lo), b = std::log10(hi);
    if (b - a < 1e-12) {
      a -= 0.5;
      b += 0.5;
    } else {
      double pad = 0.04 * (b - a);
      a -= pad;
      b += pad;
    }
    r.lo = std::pow(10.0, a);
    r.hi = std::pow(10.0, b);
  } else {
    if (hi - lo < 1e-300) {
      lo -= 1.0;
      hi += 1.0;
    } else {
      double pad = 0.04 * (hi - lo);
      lo -= pad;
      hi += pad;
    }
    r.lo = lo;
    r.hi = hi;
  }
  return r;
}

struct tick {
  double value;
  std::string label;
};

inline std::vector<tick> make_ticks(const axis_range& r) {
  std::vector<tick> out;
  if (r.log) {
    int e0 = static_cast<int>(std::ceil(std::log10(r.lo) - 1e-9));
    int e1 = static_cast<int>(std::floor(std::log10(r.hi) + 1e-9));
    if (e1 - e0 >= 1) {
      int step = 1 + (e1 - e0) / 8;  // at most 9 decade labels
      for (int e = e0; e <= e1; e += step) {
        char buf[24];
        std::snprintf(buf, sizeof buf, "1e%d", e);
        out.push_back({std::pow(10.0, e), buf});
      }
      return out;
    }
    for (int i = 0; i <= 4; ++i) {
      double x = std::log10(r.lo) + (std::log10(r.hi) - std::log10(r.lo)) * i / 4.0;
      double v = std::pow(10.0, x);
      out.push_back({v, fmt("%.3g", v)});
    }
    return out;
  }
  for (int i = 0; i <= 5; ++i) {
    double v = r.lo + (r.hi - r.lo) * i / 5.0;
    out.push_back({v, fmt("%.4g", v)});
  }
  return out;
}

}  // namespace detail

// Standalone line plot: first column is x, every other column is one series.
// Log axes drop non-positive points. Output depends only on the inputs, so
// identical tables render to identical bytes.
inline std::string render_svg(const csv_table& t, const svg_options& opt) {
  using detail::fmt;
  if (t.header.size() < 2) throw std::runtime_error("need an x column and at least one series");
  if (t.rows.empty()) throw std::runtime_error("no data rows");

  const double W = 880, H = 560;
  const double ml = 76, mr = 24, mt = 44, mb = 58;
  static const char* kPalette[] = {"#1f6feb", "#d1242f", "#1a7f37", "#8250df",
                                   "#bf3989", "#9a6700", "#0969da", "#57606a"};
  const int n_series = static_cast<int>(t.header.size()) - 1;

  auto usable = [&](double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return false;
    if (opt.x_log && x <= 0.0) return false;
    if (opt.y_log && y <= 0.0) return false;
    return true;
  };

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  for (const auto& row : t.rows) {
    for (int s = 0; s < n_series; ++s) {
      double x = row[0], y = row[1 + s];
      if (!usable(x, y)) continue;
      if (!any) {
        xmin = xmax = x;
        ymin = ymax = y;
        any = true;
      } else {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  }
  if (!any) throw std::runtime_error("no plottable points for the chosen axes");

  detail::axis_range xr = detail::make_range(xmin, xmax, opt.x_log);
  detail::axis_range yr = detail::make_range(ymin, ymax, opt.y_log);
  auto px = [&](double v) { return ml + xr.to_unit(v) * (W - ml - mr); };
  auto py = [&](double v) { return H - mb - yr.to_unit(v) * (H - mt - mb); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"880\" height=\"560\" "
       "viewBox=\"0 0 880 560\" font-family=\"sans-serif\">\n";
  s += "<rect width=\"880\" height=\"560\" fill=\"#ffffff\"/>\n";
  if (!opt.title.empty())
    s += "<text x=\"440\" y=\"26\" text-anchor=\"middle\" font-size=\"16\" fill=\"#24292f\">" +
         opt.title + "</text>\n";

  for (const detail::tick& tk : detail::make_ticks(xr)) {
    double x = px(tk.value);
    s += "<line x1=\"" + fmt("%.2f", x) + "\" y1=\"" + fmt("%.2f", mt) + "\" x2=\"" +
         fmt("%.2f", x) + "\" y2=\"" + fmt("%.2f", H - mb) +
         "\" stroke=\"#d0d7de\" stroke-width=\"1\"/>\n";
    s += "<text x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", H - mb + 18) +
         "\" text-anchor=\"middle\" font-size=\"12\" fill=\"#57606a\">" + tk.label +
         "</text>\n";
  }
  for (const detail::tick& tk : detail::make_ticks(yr)) {
    double y = py(tk.value);
    s += "<line x1=\"" + fmt("%.2f", ml) + "\" y1=\"" + fmt("%.2f", y) + "\" x2=\"" +
         fmt("%.2f", W - mr) + "\" y2=\"" + fmt("%.2f", y) +
         "\" stroke=\"#d0d7de\" stroke-width=\"1\"/>\n";
    s += "<text x=\"" + fmt("%.2f", ml - 8) + "\" y=\"" + fmt("%.2f", y + 4) +
         "\" text-anchor=\"end\" font-size=\"12\" fill=\"#57606a\">" + tk.label + "</text>\n";
  }
  s += "<rect x=\"" + fmt("%.2f", ml) + "\" y=\"" + fmt("%.2f", mt) + "\" width=\"" +
       fmt("%.2f", W - ml - mr) + "\" height=\"" + fmt("%.2f", H - mt - mb) +
       "\" fill=\"none\" stroke=\"#24292f\" stroke-width=\"1\"/>\n";
  s += "<text x=\"" + fmt("%.2f", (ml + W - mr) / 2) + "\" y=\"" + fmt("%.2f", H - 12) +
       "\" text-anchor=\"middle\" font-size=\"13\" fill=\"#24292f\">" + t.header[0] +
       "</text>\n";

  for (int si = 0; si < n_series; ++si) {
    const char* color = kPalette[si % 8];
    std::string pts;
    for (const auto& row : t.rows) {
      double x = row[0], y = row[1 + si];
      if (!usable(x, y)) continue;
      pts += fmt("%.2f", px(x)) + "," + fmt("%.2f", py(y)) + " ";
    }
    if (!pts.empty())
      s += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    double ly = mt + 16 + 18.0 * si;
    s += "<line x1=\"" + fmt("%.2f", W - mr - 150) + "\" y1=\"" + fmt("%.2f", ly - 4) +
         "\" x2=\"" + fmt("%.2f", W - mr - 126) + "\" y2=\"" + fmt("%.2f", ly - 4) +
         "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + fmt("%.2f", W - mr - 120) + "\" y=\"" + fmt("%.2f", ly) +
         "\" font-size=\"12\" fill=\"#24292f\">" + t.header[1 + si] + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace relcli
