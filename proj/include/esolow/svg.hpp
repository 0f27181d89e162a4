#pragma once

// Deterministic SVG 1.1 line plots: fixed palette, fixed geometry, no
// timestamps or external references.

#include <filesystem>
#include <string>
#include <vector>

namespace esolow::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

class LinePlot {
 public:
  LinePlot(std::string title, std::string x_label, std::string y_label);

  void add_series(std::string label, std::vector<double> x, std::vector<double> y);
  /// Dashed horizontal marker, e.g. a steady-state level.
  void add_hline(double y, std::string label);

  void write(const std::filesystem::path& path) const;

 private:
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<Series> series_;
  std::vector<std::pair<double, std::string>> hlines_;
};

}  // namespace esolow::svg
