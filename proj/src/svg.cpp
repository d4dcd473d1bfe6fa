#include "graphon/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace graphon::svg {

namespace {

std::string num2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string num_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  bool log = false;
  double lo = 0.0, hi = 1.0;  // in transformed coordinates
  double pix_lo = 0.0, pix_hi = 1.0;

  double transform(double v) const { return log ? std::log10(v) : v; }
  bool usable(double v) const {
    return std::isfinite(v) && (!log || v > 0.0);
  }
  double to_pix(double v) const {
    const double t = transform(v);
    return pix_lo + (t - lo) / (hi - lo) * (pix_hi - pix_lo);
  }
  double back(double t) const { return log ? std::pow(10.0, t) : t; }
};

void fit_axis(Axis& axis, const std::vector<double>& values) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    if (!axis.usable(v)) continue;
    const double t = axis.transform(v);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  if (!(lo <= hi)) {  // no usable data
    lo = axis.log ? -1.0 : 0.0;
    hi = axis.log ? 1.0 : 1.0;
  }
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  axis.lo = lo - pad;
  axis.hi = hi + pad;
}

}  // namespace

std::string line_plot(const PlotSpec& spec) {
  const double width = spec.width;
  const double height = spec.height;
  const double ml = 78.0, mr = 24.0, mt = 46.0, mb = 58.0;

  Axis xa, ya;
  xa.log = spec.logx;
  ya.log = spec.logy;
  xa.pix_lo = ml;
  xa.pix_hi = width - mr;
  ya.pix_lo = height - mb;  // y grows downward in SVG
  ya.pix_hi = mt;

  std::vector<double> all_x, all_y;
  for (const Series& s : spec.series) {
    for (double v : s.xs) all_x.push_back(v);
    for (double v : s.ys) all_y.push_back(v);
    for (double v : s.band_lo) all_y.push_back(v);
    for (double v : s.band_hi) all_y.push_back(v);
  }
  fit_axis(xa, all_x);
  fit_axis(ya, all_y);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num2(width) + "\" height=\"" + num2(height) + "\" viewBox=\"0 0 " +
         num2(width) + " " + num2(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num2(width) + "\" height=\"" +
         num2(height) + "\" fill=\"#ffffff\"/>\n";

  // Grid and ticks: five evenly spaced positions per axis.
  const int n_ticks = 5;
  for (int i = 0; i < n_ticks; ++i) {
    const double tx = xa.lo + (xa.hi - xa.lo) * i / (n_ticks - 1);
    const double px = xa.pix_lo + (xa.pix_hi - xa.pix_lo) * i / (n_ticks - 1);
    out += "<line x1=\"" + num2(px) + "\" y1=\"" + num2(mt) + "\" x2=\"" +
           num2(px) + "\" y2=\"" + num2(height - mb) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num2(px) + "\" y=\"" + num2(height - mb + 18.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\" "
           "text-anchor=\"middle\">" +
           xml_escape(num_label(xa.back(tx))) + "</text>\n";
  }
  for (int i = 0; i < n_ticks; ++i) {
    const double ty = ya.lo + (ya.hi - ya.lo) * i / (n_ticks - 1);
    const double py = ya.pix_lo + (ya.pix_hi - ya.pix_lo) * i / (n_ticks - 1);
    out += "<line x1=\"" + num2(ml) + "\" y1=\"" + num2(py) + "\" x2=\"" +
           num2(width - mr) + "\" y2=\"" + num2(py) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num2(ml - 8.0) + "\" y=\"" + num2(py + 4.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\" "
           "text-anchor=\"end\">" +
           xml_escape(num_label(ya.back(ty))) + "</text>\n";
  }

  // Frame.
  out += "<rect x=\"" + num2(ml) + "\" y=\"" + num2(mt) + "\" width=\"" +
         num2(width - ml - mr) + "\" height=\"" + num2(height - mt - mb) +
         "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  // Bands first so lines draw on top.
  for (const Series& s : spec.series) {
    if (s.band_lo.size() != s.xs.size() || s.band_hi.size() != s.xs.size() ||
        s.xs.empty()) {
      continue;
    }
    std::string pts;
    int used = 0;
    for (size_t i = 0; i < s.xs.size(); ++i) {
      if (!xa.usable(s.xs[i]) || !ya.usable(s.band_hi[i])) continue;
      pts += num2(xa.to_pix(s.xs[i])) + "," + num2(ya.to_pix(s.band_hi[i])) + " ";
      ++used;
    }
    for (size_t ir = s.xs.size(); ir-- > 0;) {
      if (!xa.usable(s.xs[ir]) || !ya.usable(s.band_lo[ir])) continue;
      pts += num2(xa.to_pix(s.xs[ir])) + "," + num2(ya.to_pix(s.band_lo[ir])) + " ";
    }
    if (used >= 2) {
      out += "<polygon points=\"" + pts + "\" fill=\"" + s.color +
             "\" fill-opacity=\"0.18\" stroke=\"none\"/>\n";
    }
  }

  for (const Series& s : spec.series) {
    std::string pts;
    std::vector<std::pair<double, double>> marker_px;
    for (size_t i = 0; i < s.xs.size(); ++i) {
      if (!xa.usable(s.xs[i]) || !ya.usable(s.ys[i])) continue;
      const double px = xa.to_pix(s.xs[i]);
      const double py = ya.to_pix(s.ys[i]);
      pts += num2(px) + "," + num2(py) + " ";
      marker_px.emplace_back(px, py);
    }
    if (!pts.empty()) {
      out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" +
             s.color + "\" stroke-width=\"2\"";
      if (s.dashed) out += " stroke-dasharray=\"6,4\"";
      out += "/>\n";
    }
    if (s.markers) {
      for (const auto& [px, py] : marker_px) {
        out += "<circle cx=\"" + num2(px) + "\" cy=\"" + num2(py) +
               "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
      }
    }
  }

  // Legend, top-right inside the frame.
  double ly = mt + 16.0;
  for (const Series& s : spec.series) {
    const double lx = width - mr - 190.0;
    out += "<line x1=\"" + num2(lx) + "\" y1=\"" + num2(ly - 4.0) + "\" x2=\"" +
           num2(lx + 26.0) + "\" y2=\"" + num2(ly - 4.0) + "\" stroke=\"" +
           s.color + "\" stroke-width=\"2\"";
    if (s.dashed) out += " stroke-dasharray=\"6,4\"";
    out += "/>\n";
    out += "<text x=\"" + num2(lx + 32.0) + "\" y=\"" + num2(ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"#333333\">" +
           xml_escape(s.name) + "</text>\n";
    ly += 18.0;
  }

  out += "<text x=\"" + num2(width / 2.0) + "\" y=\"" + num2(mt - 16.0) +
         "\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#000000\" "
         "text-anchor=\"middle\">" +
         xml_escape(spec.title) + "</text>\n";
  out += "<text x=\"" + num2(width / 2.0) + "\" y=\"" + num2(height - 14.0) +
         "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#000000\" "
         "text-anchor=\"middle\">" +
         xml_escape(spec.xlabel) + "</text>\n";
  out += "<text x=\"20\" y=\"" + num2(height / 2.0) +
         "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#000000\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         num2(height / 2.0) + ")\">" +
         xml_escape(spec.ylabel) + "</text>\n";
  out += "</svg>\n";
  return out;
}

std::string centrality_plot(const CentralityFunction& f,
                            const std::string& title) {
  const int n = 512;
  Series s;
  s.name = kind_name(f.kind);
  s.markers = false;
  s.xs.reserve(n);
  s.ys.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) / n;
    s.xs.push_back(x);
    s.ys.push_back(f.evaluate(x));
  }
  PlotSpec spec;
  spec.title = title;
  spec.xlabel = "x";
  spec.ylabel = "centrality value";
  spec.series.push_back(std::move(s));
  return line_plot(spec);
}

std::string convergence_plot(const convergence::ConvergenceReport& report) {
  PlotSpec spec;
  spec.title = report.graphon_id + " " + kind_name(report.kind) + " convergence";
  spec.xlabel = "N";
  spec.ylabel = "L2 error";
  spec.logx = true;
  spec.logy = true;

  bool has_aligned = false, has_misaligned = false;
  for (const auto& row : report.rows) {
    (row.aligned ? has_aligned : has_misaligned) = true;
  }
  const bool split = has_aligned && has_misaligned;

  auto sampled_series = [&](bool aligned, const std::string& name,
                            const std::string& color) {
    Series s;
    s.name = name;
    s.color = color;
    for (const auto& row : report.rows) {
      if (split && row.aligned != aligned) continue;
      s.xs.push_back(static_cast<double>(row.N));
      s.ys.push_back(row.mean_error);
      s.band_lo.push_back(row.mean_error - row.std_error);
      s.band_hi.push_back(row.mean_error + row.std_error);
    }
    return s;
  };
  if (split) {
    spec.series.push_back(sampled_series(true, "sampled error (aligned N)",
                                         "#1f77b4"));
    spec.series.push_back(sampled_series(false, "sampled error (misaligned N)",
                                         "#d62728"));
  } else {
    spec.series.push_back(sampled_series(true, "sampled error", "#1f77b4"));
  }

  Series det;
  det.name = "expected-matrix error";
  det.color = "#2ca02c";
  Series rho_s;
  rho_s.name = "rho bound";
  rho_s.color = "#ff7f0e";
  rho_s.dashed = true;
  rho_s.markers = false;
  Series bound_s;
  bound_s.name = "sampled bound";
  bound_s.color = "#9467bd";
  bound_s.dashed = true;
  bound_s.markers = false;
  for (const auto& row : report.rows) {
    const double N = static_cast<double>(row.N);
    if (std::isfinite(row.det_mean_error)) {
      det.xs.push_back(N);
      det.ys.push_back(row.det_mean_error);
    }
    if (std::isfinite(row.rho_bound)) {
      rho_s.xs.push_back(N);
      rho_s.ys.push_back(row.rho_bound);
    }
    if (std::isfinite(row.sampled_bound)) {
      bound_s.xs.push_back(N);
      bound_s.ys.push_back(row.sampled_bound);
    }
  }
  if (!det.xs.empty()) spec.series.push_back(std::move(det));
  if (!rho_s.xs.empty()) spec.series.push_back(std::move(rho_s));
  if (!bound_s.xs.empty()) spec.series.push_back(std::move(bound_s));
  return line_plot(spec);
}

}  // namespace graphon::svg
