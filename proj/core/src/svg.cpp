#include "sphersing/svg.hpp"

#include "sphersing/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sphersing {

namespace {

constexpr int kScale = 40;  // pixels per lattice unit, world box [-3,3]^2

/// Fixed three-decimal rendering of an exact pixel coordinate.
std::string px(const Rat& world) {
  Rat v = world * kScale * 1000;
  Int n = floor_rat(v + Rat(1, 2));
  std::string sign = n < 0 ? "-" : "";
  Int a = n < 0 ? Int(-n) : n;
  Int whole = a / 1000, frac = a % 1000;
  std::string f = frac.str();
  while (f.size() < 3) f = "0" + f;
  return sign + whole.str() + "." + f;
}

}  // namespace

std::string render_fan_svg(const ColoredFan& fan) {
  if (fan.space->rank != 2)
    throw Error("RenderRankUnsupported", "SVG rendering handles rank 2 only");

  std::ostringstream out;
  int half = 3 * kScale;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << -half << " "
      << -half << " " << 2 * half << " " << 2 * half << "\">\n";
  out << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
         "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"black\"/></marker></defs>\n";
  out << "<line x1=\"" << -half << "\" y1=\"0\" x2=\"" << half
      << "\" y2=\"0\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"0\" y1=\"" << -half << "\" x2=\"0\" y2=\"" << half
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  std::vector<IVec> rays = fan_rays(fan);
  std::vector<IVec> cls = colorless_rays(fan);
  std::set<IVec> colorless(cls.begin(), cls.end());

  for (const IVec& r : rays) {
    Int m = r[0] < 0 ? Int(-r[0]) : r[0];
    Int m1 = r[1] < 0 ? Int(-r[1]) : r[1];
    if (m1 > m) m = m1;
    Rat f = Rat(5, 2 * m);  // arrow length 2.5 world units in the sup norm
    Rat tx = Rat(r[0]) * f, ty = Rat(r[1]) * f;
    out << "<line x1=\"0\" y1=\"0\" x2=\"" << px(tx) << "\" y2=\"" << px(-ty)
        << "\" stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
    if (colorless.count(r))
      out << "<circle cx=\"" << px(Rat(r[0])) << "\" cy=\"" << px(Rat(-r[1]))
          << "\" r=\"5\" fill=\"black\"/>\n";
  }

  for (const std::string& name : fan_colors(fan)) {
    const Color* d = fan.space->find_color(name);
    out << "<circle cx=\"" << px(Rat(d->sigma[0])) << "\" cy=\"" << px(Rat(-d->sigma[1]))
        << "\" r=\"5\" fill=\"white\" stroke=\"#888888\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sphersing
