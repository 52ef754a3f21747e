#include "splitquat/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "splitquat/cli/emit.hpp"
#include "splitquat/errors.hpp"

namespace splitquat::cli {

namespace {

constexpr double kSize = 640;
constexpr double kMargin = 24;

struct Chart {
  double radius;  // visible window is [-radius, radius]^2

  [[nodiscard]] double sx(double x) const { return kMargin + (x + radius) / (2 * radius) * (kSize - 2 * kMargin); }
  [[nodiscard]] double sy(double y) const { return kMargin + (radius - y) / (2 * radius) * (kSize - 2 * kMargin); }
  [[nodiscard]] double scale() const { return (kSize - 2 * kMargin) / (2 * radius); }
  [[nodiscard]] bool inside(double x, double y) const { return std::fabs(x) <= radius && std::fabs(y) <= radius; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  return s == "-0.0000" ? "0.0000" : s;
}

std::array<double, 3> floats(const Quaternion& q) { return {q.x().to_double(), q.y().to_double(), q.z().to_double()}; }

std::array<double, 3> floats(const ProjPoint& p) { return floats(p.rep()); }

// Chart coordinates, or nothing for points with x1 = 0.
std::optional<std::array<double, 2>> affine(const std::array<double, 3>& c) {
  double n = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  if (n == 0 || std::fabs(c[0]) <= 1e-12 * n) return std::nullopt;
  return std::array<double, 2>{c[1] / c[0], c[2] / c[0]};
}

double view_radius(const std::vector<ProjPoint>& pts) {
  double r = 1.25;
  for (const auto& p : pts)
    if (auto a = affine(floats(p))) r = std::max({r, 1.15 * std::fabs((*a)[0]), 1.15 * std::fabs((*a)[1])});
  return std::min(r, 8.0);
}

void open(std::ostringstream& out, const Chart& ch, Signature sig) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  out << "<style>.frame{fill:none;stroke:#888}.null{fill:none;stroke:#000;stroke-width:1.2}"
         ".conic{fill:none;stroke:#1f6fb4;stroke-width:1.5}.tangent{stroke:#999;stroke-dasharray:4 3}"
         ".path{fill:none;stroke-width:1.2}.fixed circle,.fixed path{fill:#c0392b}"
         ".moving circle,.moving path{fill:#27ae60}.focal circle{fill:none;stroke:#1f6fb4}"
         "text{font:11px sans-serif}</style>\n";
  out << "<defs><clipPath id=\"view\"><rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
      << num(kSize - 2 * kMargin) << "\" height=\"" << num(kSize - 2 * kMargin) << "\"/></clipPath></defs>\n";
  out << "<rect class=\"frame\" x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
      << num(kSize - 2 * kMargin) << "\" height=\"" << num(kSize - 2 * kMargin) << "\"/>\n";
  if (sig == Signature::Split)
    out << "<circle class=\"null\" cx=\"" << num(ch.sx(0)) << "\" cy=\"" << num(ch.sy(0)) << "\" r=\""
        << num(ch.scale()) << "\"/>\n";
}

// A dot at the point, or a triangle on the frame pointing towards it.
void dot(std::ostringstream& out, const Chart& ch, const std::array<double, 3>& c, const std::string& cls,
         const std::string& id, const std::string& label) {
  out << "<g class=\"" << cls << "\" id=\"" << id << "\">";
  auto a = affine(c);
  if (a && ch.inside((*a)[0], (*a)[1])) {
    double x = ch.sx((*a)[0]), y = ch.sy((*a)[1]);
    out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\"/><text x=\"" << num(x + 6)
        << "\" y=\"" << num(y - 6) << "\">" << label << "</text>";
  } else {
    // Direction of the point seen from the chart origin; sign of x1 is irrelevant projectively.
    double dx = a ? (*a)[0] : c[1], dy = a ? (*a)[1] : c[2];
    double n = std::max(std::fabs(dx), std::fabs(dy));
    dx /= n;
    dy /= n;
    double x = ch.sx(dx * ch.radius), y = ch.sy(dy * ch.radius);
    double len = std::hypot(dx, dy), ux = dx / len, uy = -dy / len;
    out << "<path d=\"M" << num(x) << ' ' << num(y) << " L" << num(x - 10 * ux - 5 * uy) << ' '
        << num(y - 10 * uy + 5 * ux) << " L" << num(x - 10 * ux + 5 * uy) << ' ' << num(y - 10 * uy - 5 * ux)
        << " Z\"/><text x=\"" << num(x - 24 * ux) << "\" y=\"" << num(y - 24 * uy) << "\">" << label
        << (a ? "" : " (ideal)") << "</text>";
  }
  out << "</g>\n";
}

// Line u1 x1 + s (u2 x2 + u3 x3) = 0 with s = -1 (split) or +1, clipped to the view.
void line(std::ostringstream& out, const Chart& ch, const ProjLine& l, Signature sig, const std::string& cls) {
  auto u = floats(l.rep());
  double s = sig == Signature::Split ? -1 : 1;
  double a = s * u[1], b = s * u[2], c = u[0];  // a X + b Y + c = 0
  double r = ch.radius;
  std::vector<std::array<double, 2>> hits;
  if (std::fabs(b) > 1e-12)
    for (double x : {-r, r}) {
      double y = -(a * x + c) / b;
      if (std::fabs(y) <= r + 1e-9) hits.push_back({x, y});
    }
  if (std::fabs(a) > 1e-12)
    for (double y : {-r, r}) {
      double x = -(b * y + c) / a;
      if (std::fabs(x) <= r + 1e-9) hits.push_back({x, y});
    }
  out << "<line class=\"" << cls << "\"";
  if (hits.size() >= 2) {
    auto [p, q] = std::minmax_element(hits.begin(), hits.end());
    out << " x1=\"" << num(ch.sx((*p)[0])) << "\" y1=\"" << num(ch.sy((*p)[1])) << "\" x2=\""
        << num(ch.sx((*q)[0])) << "\" y2=\"" << num(ch.sy((*q)[1])) << "\"";
  } else {
    // Outside the view; kept so the scene still records the line.
    out << " x1=\"0\" y1=\"0\" x2=\"0\" y2=\"0\" visibility=\"hidden\"";
  }
  out << "><title>" << l.to_string() << "</title></line>\n";
}

// Polylines through chart points, broken where a point is missing or far outside.
void polyline(std::ostringstream& out, const Chart& ch, const std::vector<std::optional<std::array<double, 3>>>& pts,
              const std::string& cls, const std::string& id) {
  std::vector<std::string> segments;
  std::string cur;
  int count = 0;
  std::optional<double> last_x1;
  auto flush = [&] {
    if (count >= 2) segments.push_back(cur);
    cur.clear();
    count = 0;
  };
  for (const auto& p : pts) {
    std::optional<std::array<double, 2>> a;
    if (p) a = affine(*p);
    bool far = !a || std::fabs((*a)[0]) > 4 * ch.radius || std::fabs((*a)[1]) > 4 * ch.radius;
    if (far || (last_x1 && (*p)[0] * *last_x1 < 0)) flush();
    last_x1 = p ? std::optional<double>((*p)[0]) : std::nullopt;
    if (far) continue;
    cur += (count ? " " : "") + num(ch.sx((*a)[0])) + "," + num(ch.sy((*a)[1]));
    ++count;
  }
  flush();
  out << "<g class=\"" << cls << "\" id=\"" << id << "\" clip-path=\"url(#view)\">";
  for (const auto& s : segments) out << "<polyline points=\"" << s << "\"/>";
  out << "</g>\n";
}

std::vector<ProjPoint> fixed_joints(const FourBar& fb) {
  std::vector<ProjPoint> out;
  for (const auto& l : fb.legs) out.push_back(l.fixed_joint);
  return out;
}

}  // namespace

std::string linkage_svg(const FourBar& fb, const std::vector<std::optional<CouplerConic>>& conics) {
  std::vector<ProjPoint> pts = fixed_joints(fb);
  for (const auto& l : fb.legs) pts.push_back(l.moving_joint_initial);
  Chart ch{view_radius(pts)};
  std::ostringstream out;
  open(out, ch, fb.signature());

  auto conic = std::find_if(conics.begin(), conics.end(), [](const auto& c) { return c.has_value(); });
  if (conic != conics.end()) {
    const CouplerConic& s = **conic;
    QuatPoly g = s.reduced.to_backend(Backend::Float);
    std::vector<std::optional<std::array<double, 3>>> samples;
    constexpr int n = 720;
    for (int i = 0; i <= n; ++i) {
      double phi = -std::numbers::pi / 2 + std::numbers::pi * i / n;
      if (i == 0 || i == n) {
        samples.push_back(floats(g.coeffs().back()));
        continue;
      }
      samples.push_back(floats(g.evaluate(Scalar::floating(std::tan(phi)))));
    }
    polyline(out, ch, samples, "conic", "conic");
    for (const auto& l : s.null_tangents) line(out, ch, l, fb.signature(), "tangent");
    for (std::size_t i = 0; i < s.focal_points.size(); ++i) {
      auto a = affine(floats(s.focal_points[i]));
      if (a && ch.inside((*a)[0], (*a)[1]))
        out << "<g class=\"focal\"><circle cx=\"" << num(ch.sx((*a)[0])) << "\" cy=\"" << num(ch.sy((*a)[1]))
            << "\" r=\"7\"/></g>\n";
    }
  }
  for (std::size_t i = 0; i < fb.legs.size(); ++i) {
    std::string name = leg_name(fb, i);
    dot(out, ch, floats(fb.legs[i].fixed_joint), "joint fixed", "A" + name, "A" + name);
    dot(out, ch, floats(fb.legs[i].moving_joint_initial), "joint moving", "B" + name, "B" + name);
  }
  out << "</svg>\n";
  return out.str();
}

std::string trajectory_svg(const FourBar& fb, const Trajectory& traj) {
  std::vector<ProjPoint> pts = fixed_joints(fb);
  Chart ch{view_radius(pts)};
  std::ostringstream out;
  open(out, ch, fb.signature());
  auto collect = [&](auto pick) {
    std::vector<std::optional<std::array<double, 3>>> v;
    for (const auto& row : traj.rows) {
      const std::optional<ProjPoint>& p = pick(row);
      v.push_back(p ? std::optional(floats(*p)) : std::nullopt);
    }
    return v;
  };
  static const std::array<const char*, 6> colors{"#27ae60", "#8e44ad", "#d35400", "#16a085", "#2c3e50", "#f39c12"};
  for (std::size_t i = 0; i < fb.legs.size(); ++i) {
    out << "<g style=\"stroke:" << colors[i % colors.size()] << "\">";
    polyline(out, ch, collect([&](const MotionSample& r) -> const std::optional<ProjPoint>& { return r.moving_joints[i]; }),
             "path", "path-B" + leg_name(fb, i));
    out << "</g>\n";
  }
  polyline(out, ch, collect([](const MotionSample& r) -> const std::optional<ProjPoint>& { return r.coupler; }),
           "conic", "path-S");
  std::size_t tracers = traj.rows.empty() ? 0 : traj.rows.front().tracers.size();
  for (std::size_t k = 0; k < tracers; ++k) {
    out << "<g style=\"stroke:#7f8c8d\">";
    polyline(out, ch, collect([&](const MotionSample& r) -> const std::optional<ProjPoint>& { return r.tracers[k]; }),
             "path", "path-P" + std::to_string(k + 1));
    out << "</g>\n";
  }
  for (std::size_t i = 0; i < fb.legs.size(); ++i) {
    std::string name = leg_name(fb, i);
    dot(out, ch, floats(fb.legs[i].fixed_joint), "joint fixed", "A" + name, "A" + name);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace splitquat::cli
