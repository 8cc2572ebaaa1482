#include "okb/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace okb {

std::string format_coordinate(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

FigureTicks figure_ticks(const std::vector<DissectionEntry>& bodies) {
  FigureTicks t;
  for (const DissectionEntry& e : bodies) {
    for (const RationalPoint& p : e.body.vertices()) {
      if (p.y == 0 && p.x > 0) t.x.push_back(p.x);
      if (p.y > 0) t.y.push_back(p.y);
      if (p.x > 0 && p.y > 0) t.guides.push_back(p);
    }
  }
  const auto tidy = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(t.x);
  tidy(t.y);
  tidy(t.guides);
  return t;
}

namespace {

std::string tikz_label(const Rational& r) {
  if (is_integer(r)) return "$" + to_string(r) + "$";
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  return std::string("$") + (num < 0 ? "-" : "") + "\\frac{" + Integer(abs(num)).str() + "}{" + den.str() + "}$";
}

class Scaler {
 public:
  explicit Scaler(double scale) : scale_(scale) {}
  std::string operator()(const Rational& r) const { return format_coordinate(to_double(r) * scale_); }
  std::string raw(double v) const { return format_coordinate(v * scale_); }

 private:
  double scale_;
};

std::string emit_tikz(const std::vector<DissectionEntry>& bodies, const FigureTicks& ticks, const Scaler& s) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  out << "\\draw (0,0) -- (" << s.raw(1) << ",0);\n";
  out << "\\draw (0,0) -- (0," << s.raw(1) << ");\n";
  for (const Rational& x : ticks.x) out << "\\node [below] at (" << s(x) << ",0) {" << tikz_label(x) << "};\n";
  for (const Rational& y : ticks.y) out << "\\node [left] at (0," << s(y) << ") {" << tikz_label(y) << "};\n";
  for (const RationalPoint& g : ticks.guides) {
    out << "\\draw [dashed] (0," << s(g.y) << ") -- (" << s(g.x) << "," << s(g.y) << ");\n";
  }
  for (const DissectionEntry& e : bodies) {
    if (e.body.empty()) continue;
    out << "% n=" << e.n << "\n\\draw ";
    for (std::size_t i = 0; i < e.body.size(); ++i) {
      const RationalPoint& p = e.body.vertices()[i];
      out << (i ? " -- " : "") << "(" << s(p.x) << "," << s(p.y) << ")";
    }
    out << (e.body.size() > 2 ? " -- cycle" : "") << ";\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

// The drawing lives in a group flipped about the x-axis so that every
// emitted coordinate is the figure coordinate itself; labels sit outside
// the flip to stay readable.
std::string emit_svg(const std::vector<DissectionEntry>& bodies, const FigureTicks& ticks, const Scaler& s) {
  const std::string one = s.raw(1);
  const std::string margin = s.raw(0.15);
  const std::string tick = s.raw(0.015);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-" << margin << " -" << s.raw(1.15) << " "
      << s.raw(1.3) << " " << s.raw(1.3) << "\">\n";
  out << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"" << s.raw(0.003) << "\">\n";
  out << "<line class=\"axis\" x1=\"0\" y1=\"0\" x2=\"" << one << "\" y2=\"0\"/>\n";
  out << "<line class=\"axis\" x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" << one << "\"/>\n";
  for (const Rational& x : ticks.x) {
    out << "<line class=\"tick-x\" data-label=\"" << to_string(x) << "\" x1=\"" << s(x) << "\" y1=\"0\" x2=\""
        << s(x) << "\" y2=\"-" << tick << "\"/>\n";
  }
  for (const Rational& y : ticks.y) {
    out << "<line class=\"tick-y\" data-label=\"" << to_string(y) << "\" x1=\"0\" y1=\"" << s(y) << "\" x2=\"-"
        << tick << "\" y2=\"" << s(y) << "\"/>\n";
  }
  for (const RationalPoint& g : ticks.guides) {
    out << "<line class=\"guide\" stroke-dasharray=\"" << s.raw(0.01) << "\" x1=\"0\" y1=\"" << s(g.y) << "\" x2=\""
        << s(g.x) << "\" y2=\"" << s(g.y) << "\"/>\n";
  }
  for (const DissectionEntry& e : bodies) {
    if (e.body.empty()) continue;
    out << "<polygon class=\"body\" data-n=\"" << e.n << "\" points=\"";
    for (std::size_t i = 0; i < e.body.size(); ++i) {
      const RationalPoint& p = e.body.vertices()[i];
      out << (i ? " " : "") << s(p.x) << "," << s(p.y);
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
  out << "<g font-size=\"" << s.raw(0.03) << "\" font-family=\"serif\">\n";
  for (const Rational& x : ticks.x) {
    out << "<text text-anchor=\"middle\" x=\"" << s(x) << "\" y=\"" << s.raw(0.06) << "\">" << to_string(x)
        << "</text>\n";
  }
  for (const Rational& y : ticks.y) {
    out << "<text text-anchor=\"end\" x=\"-" << s.raw(0.03) << "\" y=\"-" << s(y) << "\">" << to_string(y)
        << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string emit_figure(const std::vector<DissectionEntry>& bodies, FigureFormat format, double scale) {
  const FigureTicks ticks = figure_ticks(bodies);
  const Scaler s(scale);
  return format == FigureFormat::kTikz ? emit_tikz(bodies, ticks, s) : emit_svg(bodies, ticks, s);
}

}  // namespace okb
