#include "sl2real/figure.hpp"

#include "sl2real/classify.hpp"
#include "sl2real/errors.hpp"
#include "sl2real/farey.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace sl2real {

namespace {

Fraction mediant(const Fraction& l, const Fraction& r) { return {l.num + r.num, l.den + r.den}; }

Fraction mirror(const Fraction& f) {
  if (f.is_infinity()) return f;
  return {-f.num, f.den};
}

// Sign of (point - f) on the real line, for a finite fraction f.
int cmp(const Fraction& point, const Fraction& f) {
  const Int lhs = point.num * f.den;
  const Int rhs = f.num * point.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}
int cmp(const Surd& point, const Fraction& f) { return compare(point, f.num, f.den); }

bool is_infinity(const Fraction& f) { return f.is_infinity(); }
bool is_infinity(const Surd&) { return false; }

// Whether w lies in the component of the boundary circle minus {u, v} that
// avoids infinity (the open interval between finite u and v, or (u, +inf)
// when v is infinity).
template <class Point>
bool in_component(const Point& w, const Fraction& u, const Fraction& v) {
  if (is_infinity(w)) return false;
  if (u.is_infinity()) return cmp(w, v) > 0;
  if (v.is_infinity()) return cmp(w, u) > 0;
  const bool u_first = cmp(u, v) < 0;
  const Fraction& lo = u_first ? u : v;
  const Fraction& hi = u_first ? v : u;
  return cmp(w, lo) > 0 && cmp(w, hi) < 0;
}

struct Edge {
  Fraction u;
  Fraction v;
  bool operator==(const Edge& o) const { return (u == o.u && v == o.v) || (u == o.v && v == o.u); }
};

struct AxisGeometry {
  Surd start;  // repelling
  Surd end;    // attracting

  bool separates(const Edge& e) const {
    return in_component(start, e.u, e.v) != in_component(end, e.u, e.v);
  }

  // e1 is met before e2 along the oriented axis.
  bool before(const Edge& e1, const Edge& e2) const {
    if (e1 == e2) return false;
    const Fraction& w = (e1.u == e2.u || e1.u == e2.v) ? e1.v : e1.u;
    return in_component(w, e2.u, e2.v) == in_component(start, e2.u, e2.v);
  }

  // For start < end the axis arcs over the interval between them, so points
  // inside that interval lie on the right; reversed when start > end.
  Side side_of(const Fraction& x) const {
    // start is the conjugate of end, so end - start = 2 sqrt(d) / q.
    const bool start_lower = end.q() > 0;
    bool between;
    if (x.is_infinity()) {
      between = false;
    } else {
      const int cs = cmp(start, x);
      const int ce = cmp(end, x);
      between = (cs < 0) != (ce < 0);
    }
    const bool right = start_lower ? between : !between;
    return right ? Side::Right : Side::Left;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << (std::abs(v) < 5e-7 ? 0.0 : v);
  return os.str();
}

// SVG path commands for the geodesic from p1 to p2 (math coordinates on the
// unit circle), assuming the pen is already at p1.
std::string geodesic_segment(std::pair<double, double> p1, std::pair<double, double> p2) {
  const auto [x1, y1] = p1;
  const auto [x2, y2] = p2;
  const double det = x1 * y2 - y1 * x2;
  if (std::abs(det) < 1e-12) return "L " + fmt(x2) + " " + fmt(-y2);
  // Orthogonal circle: center c with c.p1 = c.p2 = 1, radius^2 = |c|^2 - 1.
  const double cx = (y2 - y1) / det;
  const double cy = (x1 - x2) / det;
  const double norm = std::hypot(cx, cy);
  const double r = std::sqrt(std::max(0.0, norm * norm - 1.0));
  const double mx = cx - r * cx / norm;
  const double my = cy - r * cy / norm;
  // Orientation of p1 -> m -> p2 in screen coordinates (y down) picks the sweep.
  const double cross = (mx - x1) * (-y2 + my) - (-my + y1) * (x2 - mx);
  const int sweep = cross > 0 ? 1 : 0;
  return "A " + fmt(r) + " " + fmt(r) + " 0 0 " + std::to_string(sweep) + " " + fmt(x2) + " " +
         fmt(-y2);
}

std::string move_to(std::pair<double, double> p) {
  return "M " + fmt(p.first) + " " + fmt(-p.second);
}

}  // namespace

std::string AxisOverlay::label_string() const {
  std::string out;
  for (Side s : labels) out.push_back(s == Side::Left ? 'L' : 'R');
  return out;
}

std::pair<double, double> disk_point(double x) {
  const double denom = x * x + 1.0;
  return {2.0 * x / denom, (x * x - 1.0) / denom};
}

std::pair<double, double> disk_point(const Fraction& f) {
  if (f.is_infinity()) return {0.0, 1.0};
  const long double m = f.num.convert_to<long double>();
  const long double n = f.den.convert_to<long double>();
  const long double denom = m * m + n * n;
  return {static_cast<double>(2 * m * n / denom), static_cast<double>((m * m - n * n) / denom)};
}

FareyFigure build_farey_figure(int depth, const std::optional<Mat2>& axis) {
  if (depth < 0 || depth > kMaxFigureDepth) {
    throw Error(ErrorCode::DepthTooLarge,
                "depth " + std::to_string(depth) + " outside [0, " +
                    std::to_string(kMaxFigureDepth) + "]");
  }
  FareyFigure fig{depth, {}, {}, std::nullopt};
  fig.arcs.push_back({Fraction{0, 1}, Fraction::infinity()});

  // Right half: fractions from 0/1 up to 1/0 in increasing order.
  std::vector<Fraction> row{{0, 1}, Fraction::infinity()};
  for (int round = 1; round <= depth; ++round) {
    std::vector<Fraction> next;
    next.reserve(2 * row.size());
    std::vector<Arc> right_arcs, left_arcs;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      const Fraction& l = row[i];
      const Fraction& r = row[i + 1];
      const Fraction m = mediant(l, r);
      next.push_back(l);
      next.push_back(m);
      right_arcs.push_back({l, m});
      right_arcs.push_back({m, r});
      left_arcs.push_back({mirror(l), mirror(m)});
      left_arcs.push_back({mirror(m), mirror(r)});
      fig.triangles.push_back({{l, m, r}});
      fig.triangles.push_back({{mirror(l), mirror(m), mirror(r)}});
    }
    next.push_back(row.back());
    row = std::move(next);
    fig.arcs.insert(fig.arcs.end(), right_arcs.begin(), right_arcs.end());
    fig.arcs.insert(fig.arcs.end(), left_arcs.begin(), left_arcs.end());
  }

  if (axis) {
    const AxisGeometry geo{repelling_fixed_point(*axis), attracting_fixed_point(*axis)};
    AxisOverlay overlay{geo.start, geo.end, {}, {}};

    std::vector<Edge> crossed;
    for (const Arc& arc : fig.arcs) {
      const Edge e{arc.from, arc.to};
      if (geo.separates(e)) crossed.push_back(e);
    }
    std::sort(crossed.begin(), crossed.end(),
              [&](const Edge& x, const Edge& y) { return geo.before(x, y); });
    for (std::size_t i = 0; i + 1 < crossed.size(); ++i) {
      const Edge& e1 = crossed[i];
      const Edge& e2 = crossed[i + 1];
      const Fraction& shared = (e1.u == e2.u || e1.u == e2.v) ? e1.u : e1.v;
      const Fraction& a = (e1.u == shared) ? e1.v : e1.u;
      const Fraction& b = (e2.u == shared) ? e2.v : e2.u;
      overlay.crossed.push_back({{a, shared, b}});
      overlay.labels.push_back(geo.side_of(shared));
    }
    fig.axis = std::move(overlay);
  }
  return fig;
}

std::string render_svg(const FareyFigure& figure) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
        "viewBox=\"-1.05 -1.05 2.1 2.1\">\n"
     << "<title>Farey tessellation, depth " << figure.depth << "</title>\n";

  if (figure.axis) {
    os << "<g id=\"crossed-triangles\" stroke=\"none\">\n";
    const auto& axis = *figure.axis;
    for (std::size_t i = 0; i < axis.crossed.size(); ++i) {
      const auto& v = axis.crossed[i].vertices;
      const bool left = axis.labels[i] == Side::Left;
      os << "<path class=\"crossed " << (left ? 'L' : 'R') << "\" fill=\""
         << (left ? "#f2b8b5" : "#b5cdf2") << "\" d=\"" << move_to(disk_point(v[0])) << " "
         << geodesic_segment(disk_point(v[0]), disk_point(v[1])) << " "
         << geodesic_segment(disk_point(v[1]), disk_point(v[2])) << " "
         << geodesic_segment(disk_point(v[2]), disk_point(v[0])) << " Z\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000000\" "
        "stroke-width=\"0.004\"/>\n";
  os << "<g id=\"geodesics\" fill=\"none\" stroke=\"#333333\" stroke-width=\"0.002\">\n";
  for (const Arc& arc : figure.arcs) {
    const auto p1 = disk_point(arc.from);
    const auto p2 = disk_point(arc.to);
    os << "<path class=\"geodesic\" data-from=\"" << arc.from.to_string() << "\" data-to=\""
       << arc.to.to_string() << "\" d=\"" << move_to(p1) << " " << geodesic_segment(p1, p2)
       << "\"/>\n";
  }
  os << "</g>\n";

  if (figure.axis) {
    const auto& axis = *figure.axis;
    const auto p1 = disk_point(axis.repelling.to_double());
    const auto p2 = disk_point(axis.attracting.to_double());
    os << "<path id=\"axis\" fill=\"none\" stroke=\"#c00000\" stroke-width=\"0.006\" "
          "data-labels=\""
       << axis.label_string() << "\" d=\"" << move_to(p1) << " " << geodesic_segment(p1, p2)
       << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_farey(int depth, const std::optional<Mat2>& axis) {
  return render_svg(build_farey_figure(depth, axis));
}

}  // namespace sl2real
