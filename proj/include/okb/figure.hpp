// SVG / TikZ drawings of nested Okounkov bodies.
//
// Coordinates are multiplied by `scale` and printed as decimals rounded to
// four places; this is the only place where floating point appears, and it
// is presentation only.
#pragma once

#include "okb/okounkov.hpp"

#include <string>
#include <vector>

namespace okb {

enum class FigureFormat { kSvg, kTikz };

inline constexpr double kDefaultFigureScale = 10.2;

struct FigureTicks {
  /// Nonzero x-coordinates of vertices on the t-axis.
  std::vector<Rational> x;
  /// y-coordinates of vertices off the t-axis.
  std::vector<Rational> y;
  /// Vertices with both coordinates positive; each gets a dashed guide
  /// from the y-axis.
  std::vector<RationalPoint> guides;
};

/// Sorted, de-duplicated tick positions for a list of bodies.
FigureTicks figure_ticks(const std::vector<DissectionEntry>& bodies);

std::string emit_figure(const std::vector<DissectionEntry>& bodies, FigureFormat format,
                        double scale = kDefaultFigureScale);

/// Fixed 4-decimal rendering with trailing zeros stripped ("3.4", "9.6333").
std::string format_coordinate(double value);

}  // namespace okb
