#pragma once

#include "sl2real/mat2.hpp"
#include "sl2real/surd.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sl2real {

/// Boundary point num/den of the disk, den >= 0; infinity is 1/0.
struct Fraction {
  Int num;
  Int den;

  static Fraction infinity() { return {1, 0}; }
  bool is_infinity() const { return den == 0; }
  std::string to_string() const { return num.str() + "/" + den.str(); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Geodesic of the tessellation between two boundary fractions.
struct Arc {
  Fraction from;
  Fraction to;
};

struct Triangle {
  std::array<Fraction, 3> vertices;
};

enum class Side { Left, Right };

struct AxisOverlay {
  Surd repelling;
  Surd attracting;
  /// Drawn triangles crossed by the axis, ordered from the repelling to the
  /// attracting end, each labelled by the side of the vertex shared by its two
  /// crossed edges.
  std::vector<Triangle> crossed;
  std::vector<Side> labels;

  std::string label_string() const;  // e.g. "LRLR"
};

struct FareyFigure {
  int depth;
  std::vector<Arc> arcs;
  std::vector<Triangle> triangles;
  std::optional<AxisOverlay> axis;
};

inline constexpr int kMaxFigureDepth = 12;

/// Tessellation after `depth` mediant rounds (2^(depth+2) - 3 arcs), with an
/// optional hyperbolic axis. Throws DepthTooLarge, NotHyperbolic.
FareyFigure build_farey_figure(int depth, const std::optional<Mat2>& axis = std::nullopt);

/// Standalone SVG 1.1 document in unit-disk coordinates.
std::string render_svg(const FareyFigure& figure);

std::string render_farey(int depth, const std::optional<Mat2>& axis = std::nullopt);

/// Boundary point of the unit disk for x in R u {inf}: 0 at the south pole,
/// infinity at the north pole, 1 to the east.
std::pair<double, double> disk_point(const Fraction& f);
std::pair<double, double> disk_point(double x);

}  // namespace sl2real
