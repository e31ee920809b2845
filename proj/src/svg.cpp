#include "nph/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "nph/error.hpp"

namespace nph {

namespace {

constexpr double kTau = 6.283185307179586;
constexpr double kSize = 640;
constexpr double kMargin = 40;

struct P2 {
  double x, y, depth;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

const char* index_colour(std::int64_t index) {
  if (index > 0) return "#c0392b";
  if (index < 0) return "#2471a3";
  return "#7f8c8d";
}

}  // namespace

std::string emit_svg(const SurfaceComplex& c, const NField* field, const VerificationVerdict* report) {
  if (!c.coords()) throw Error(ErrorCode::MissingCoordinates, "mesh has no vertex coordinates");
  const auto& xyz = *c.coords();

  // Fixed axonometric view.
  const double a = 0.6, b = 0.45;
  std::vector<P2> p;
  for (const Point3& q : xyz) {
    const double x = q[0] * std::cos(a) - q[1] * std::sin(a);
    const double y0 = q[0] * std::sin(a) + q[1] * std::cos(a);
    p.push_back({x, -(q[2] * std::cos(b) - y0 * std::sin(b)), q[2] * std::sin(b) + y0 * std::cos(b)});
  }
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const P2& q : p) {
    lo_x = std::min(lo_x, q.x), hi_x = std::max(hi_x, q.x);
    lo_y = std::min(lo_y, q.y), hi_y = std::max(hi_y, q.y);
  }
  const double scale = (kSize - 2 * kMargin) / std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  for (P2& q : p) {
    q.x = kMargin + (q.x - lo_x) * scale;
    q.y = kMargin + (q.y - lo_y) * scale;
  }

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) + "\" height=\"" + num(kSize) +
                    "\" viewBox=\"0 0 " + num(kSize) + " " + num(kSize) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Back to front.
  std::vector<int> order(c.face_count());
  std::iota(order.begin(), order.end(), 0);
  auto depth = [&](int f) {
    const Face& t = c.face(f);
    return p[t[0]].depth + p[t[1]].depth + p[t[2]].depth;
  };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return depth(x) < depth(y); });
  for (int f : order) {
    const Face& t = c.face(f);
    out += "<polygon points=\"";
    for (int j = 0; j < 3; ++j) out += num(p[t[j]].x) + "," + num(p[t[j]].y) + (j < 2 ? " " : "");
    out += "\" fill=\"#f4f1e8\" fill-opacity=\"0.7\" stroke=\"#555\" stroke-width=\"0.8\"/>\n";
    if (field && field->rank() == 2) {
      const double cx = (p[t[0]].x + p[t[1]].x + p[t[2]].x) / 3, cy = (p[t[0]].y + p[t[1]].y + p[t[2]].y) / 3;
      const double len = 0.12 * scale;
      for (const FieldValue& v : field->values()[f]) {
        const double ang = kTau * v.angle.turn().value().convert_to<double>();
        out += "<line x1=\"" + num(cx) + "\" y1=\"" + num(cy) + "\" x2=\"" + num(cx + len * std::cos(ang)) +
               "\" y2=\"" + num(cy - len * std::sin(ang)) + "\" stroke=\"#1e8449\" stroke-width=\"1.2\"/>\n";
      }
    }
  }
  for (int v = 0; v < c.vertex_count(); ++v) {
    std::int64_t index = 0;
    if (report && v < static_cast<int>(report->table.size())) index = report->table[v].index;
    const double r = index != 0 ? 7 : 3;
    out += "<circle cx=\"" + num(p[v].x) + "\" cy=\"" + num(p[v].y) + "\" r=\"" + num(r) + "\" fill=\"" +
           index_colour(index) + "\"/>\n";
    if (index != 0)
      out += "<text x=\"" + num(p[v].x + 9) + "\" y=\"" + num(p[v].y - 9) + "\" font-size=\"12\">" +
             std::to_string(index) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace nph
