#include "arrangeclass/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "arrangeclass/errors.hpp"
#include "arrangeclass/lattice.hpp"

namespace arrangeclass {

namespace {

constexpr double kColumn = 40;
constexpr double kRow = 30;
constexpr double kMargin = 30;

std::string fmt(double v) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << v;
  return out.str();
}

const char* colour(int wire) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  return palette[(wire - 1) % 8];
}

}  // namespace

RenderKind parse_render_kind(std::string_view text) {
  if (text == "wiring") return RenderKind::Wiring;
  if (text == "multipoint") return RenderKind::Multipoint;
  throw InputError("render kind must be 'wiring' or 'multipoint'");
}

std::vector<std::vector<int>> wiring_columns(const LefschetzList& list) {
  std::vector<int> at(static_cast<std::size_t>(list.lines()));
  for (int k = 0; k < list.lines(); ++k) at[static_cast<std::size_t>(k)] = k + 1;
  std::vector<std::vector<int>> out{at};
  for (const Pair& p : list.pairs()) {
    std::reverse(at.begin() + p.a - 1, at.begin() + p.b);
    out.push_back(at);
  }
  return out;
}

std::string render_wiring_svg(const LefschetzList& list) {
  const int l = list.lines();
  const std::size_t cols = list.size();
  const double width = 2 * kMargin + kColumn * static_cast<double>(cols + 1);
  const double height = 2 * kMargin + kRow * (l - 1);
  auto y_of = [&](double pos) { return height - kMargin - kRow * (pos - 1); };
  const auto stages = wiring_columns(list);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int wire = 1; wire <= l; ++wire) {
    svg << "<polyline class=\"wire\" data-wire=\"" << wire << "\" fill=\"none\" stroke=\""
        << colour(wire) << "\" stroke-width=\"2\" points=\"";
    double x = kMargin;
    auto pos_of = [&](std::size_t stage) {
      const auto& s = stages[stage];
      return static_cast<int>(std::find(s.begin(), s.end(), wire) - s.begin()) + 1;
    };
    svg << fmt(x) << ',' << fmt(y_of(pos_of(0)));
    for (std::size_t k = 0; k < cols; ++k) {
      const Pair p = list[k];
      const int before = pos_of(k);
      const int after = pos_of(k + 1);
      const double cx = kMargin + kColumn * static_cast<double>(k + 1);
      if (p.a <= before && before <= p.b) {
        svg << ' ' << fmt(cx - kColumn / 2) << ',' << fmt(y_of(before));
        svg << ' ' << fmt(cx) << ',' << fmt(y_of((p.a + p.b) / 2.0));
        svg << ' ' << fmt(cx + kColumn / 2) << ',' << fmt(y_of(after));
      }
    }
    svg << ' ' << fmt(width - kMargin) << ',' << fmt(y_of(pos_of(cols))) << "\"/>\n";
    svg << "<text x=\"" << fmt(kMargin - 18) << "\" y=\"" << fmt(y_of(wire) + 4)
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << wire << "</text>\n";
  }
  for (std::size_t k = 0; k < cols; ++k) {
    const Pair p = list[k];
    const double cx = kMargin + kColumn * static_cast<double>(k + 1);
    const double cy = y_of((p.a + p.b) / 2.0);
    const int m = p.multiplicity();
    svg << "<circle class=\"point\" data-pair=\"" << int{p.a} << ',' << int{p.b} << "\" cx=\""
        << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << (m == 2 ? 2.5 : 4.0 + m)
        << "\" fill=\"black\"/>\n";
    if (m > 3) {
      svg << "<text x=\"" << fmt(cx + 8) << "\" y=\"" << fmt(cy - 8)
          << "\" font-size=\"11\" font-family=\"sans-serif\">" << m << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_multipoint_svg(const LefschetzList& list) {
  const IncidenceLattice lat = lattice_of(list);
  const MultiPointGraph g = multipoint_graph(lat);
  const double size = 320;
  const double radius = 110;
  const std::size_t n = g.points.size();
  std::vector<std::pair<double, double>> at(n);
  for (std::size_t v = 0; v < n; ++v) {
    const double angle = n == 1 ? 0 : 2 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(n);
    at[v] = {size / 2 + (n == 1 ? 0 : radius * std::cos(angle)),
             size / 2 - (n == 1 ? 0 : radius * std::sin(angle))};
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\""
      << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& e : g.edges) {
    const auto [x1, y1] = at[e.u];
    const auto [x2, y2] = at[e.v];
    svg << "<line class=\"edge\" data-line=\"" << e.line << "\" x1=\"" << fmt(x1) << "\" y1=\""
        << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2)
        << "\" stroke=\"" << colour(e.line) << "\" stroke-width=\"4\"/>\n";
    svg << "<text x=\"" << fmt((x1 + x2) / 2 + 4) << "\" y=\"" << fmt((y1 + y2) / 2 - 4)
        << "\" font-size=\"11\" font-family=\"sans-serif\">L" << e.line << "</text>\n";
  }
  for (std::size_t v = 0; v < n; ++v) {
    const int m = g.multiplicities[v];
    const auto [x, y] = at[v];
    svg << "<circle class=\"point\" data-multiplicity=\"" << m << "\" cx=\"" << fmt(x) << "\" cy=\""
        << fmt(y) << "\" r=\"" << (m == 3 ? 5 : 10) << "\" fill=\"black\"/>\n";
    if (m > 3) {
      svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y + 4)
          << "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"white\" text-anchor=\"middle\">"
          << m << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_svg(const LefschetzList& list, RenderKind kind) {
  return kind == RenderKind::Wiring ? render_wiring_svg(list) : render_multipoint_svg(list);
}

}  // namespace arrangeclass
