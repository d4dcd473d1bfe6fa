#pragma once

#include <string>
#include <vector>

#include "graphon/centrality_function.hpp"
#include "graphon/convergence.hpp"

namespace graphon::svg {

struct Series {
  std::string name;
  std::string color = "#1f77b4";
  std::vector<double> xs;
  std::vector<double> ys;
  // Optional band (same length as xs); empty = no band.
  std::vector<double> band_lo;
  std::vector<double> band_hi;
  bool dashed = false;
  bool markers = true;
};

struct PlotSpec {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  bool logx = false;
  bool logy = false;
  int width = 800;
  int height = 560;
  std::vector<Series> series;
};

// Deterministic standalone SVG 1.1 line plot: fixed layout, fixed number
// formatting, no external resources.
std::string line_plot(const PlotSpec& spec);

// Centrality function sampled at 512 midpoints on [0, 1], linear axes.
std::string centrality_plot(const CentralityFunction& f,
                            const std::string& title);

// Log-log convergence plot: per-N mean error with a +/- std band (split into
// aligned/misaligned series when the report tags both), the expected-matrix
// error path, and the two bound curves.
std::string convergence_plot(const convergence::ConvergenceReport& report);

}  // namespace graphon::svg
