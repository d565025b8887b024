#include "tropcheck/svg_plot.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tropcheck {

Viewport parse_viewport(std::string_view text) {
  const Vector v = parse_point(text);
  if (v.size() != 4) throw std::invalid_argument("viewport needs XMIN,XMAX,YMIN,YMAX");
  Viewport view{v[0], v[1], v[2], v[3]};
  if (!(view.xmin < view.xmax) || !(view.ymin < view.ymax)) throw std::invalid_argument("empty viewport");
  return view;
}

std::vector<Vector> clip_cell(const Polyhedron& cell, const Viewport& view) {
  if (cell.dim != 2) throw std::invalid_argument("clip_cell: cell is not planar");
  std::vector<Vector> poly = {
      {view.xmin, view.ymin}, {view.xmax, view.ymin}, {view.xmax, view.ymax}, {view.xmin, view.ymax}};
  // Sutherland-Hodgman against each half-plane form >= 0.
  for (const auto& c : cell.constraints) {
    if (poly.empty()) break;
    std::vector<Vector> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Vector& a = poly[i];
      const Vector& b = poly[(i + 1) % poly.size()];
      const Rational fa = c.form(a), fb = c.form(b);
      if (fa >= 0) next.push_back(a);
      if ((fa > 0 && fb < 0) || (fa < 0 && fb > 0)) {
        const Rational t = fa / (fa - fb);
        next.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
      }
    }
    poly = std::move(next);
  }
  if (poly.size() < 3) poly.clear();
  return poly;
}

namespace {

const char* fill_for(const LinearPiece& p) {
  if (!p.jac) return "#cccccc";
  switch (sgn(*p.jac)) {
    case 1: return "#8fb8de";
    case -1: return "#e59a8c";
    default: return "#bbbbbb";
  }
}

}  // namespace

std::string plot_svg(const Decomposition& d, const Viewport& view) {
  if (d.dim != 2) throw std::invalid_argument("plot_svg: decomposition is not planar");
  constexpr double kSize = 480.0;
  const double w = Rational(view.xmax - view.xmin).get_d(), h = Rational(view.ymax - view.ymin).get_d();
  auto sx = [&](const Rational& x) { return Rational(x - view.xmin).get_d() / w * kSize; };
  auto sy = [&](const Rational& y) { return kSize - Rational(y - view.ymin).get_d() / h * kSize; };

  std::ostringstream svg;
  char buf[64];
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  for (const auto& p : d.pieces) {
    const auto poly = clip_cell(p.cell, view);
    if (poly.empty()) continue;
    svg << "  <polygon data-piece=\"" << p.id << "\" data-jac=\"" << (p.jac ? to_string(*p.jac) : "") << "\" fill=\""
        << fill_for(p) << "\" stroke=\"#333333\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", i ? " " : "", sx(poly[i][0]), sy(poly[i][1]));
      svg << buf;
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tropcheck
