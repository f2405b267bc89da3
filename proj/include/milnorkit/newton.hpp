#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "milnorkit/poly.hpp"
#include "milnorkit/univariate.hpp"

namespace milnorkit {

struct LatticePoint {
  int i = 0;  // exponent of x
  int j = 0;  // exponent of y
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Compact edge of the Newton polygon, from p (left, higher) to q.
struct Segment {
  LatticePoint p;
  LatticePoint q;

  /// Lattice length: number of primitive steps from p to q.
  int lattice_length() const;
  /// Primitive step (dx, -dy) with dx, dy > 0.
  int step_x() const;
  int step_y() const;
  /// Normal weights (w_x, w_y) and weighted degree d: w_x*i + w_y*j = d on
  /// the segment and > d strictly above it.
  int weight_x() const { return step_y(); }
  int weight_y() const { return step_x(); }
  int weighted_degree() const { return weight_x() * p.i + weight_y() * p.j; }
  bool contains(const LatticePoint& pt) const;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct NewtonPolygon {
  std::vector<LatticePoint> vertices;  // increasing i, decreasing j
  std::vector<Segment> segments;
  std::optional<int> x_intercept;      // a: vertex (a, 0)
  std::optional<int> y_intercept;      // b: vertex (0, b)
  std::optional<Rational> area;        // S, present iff convenient

  bool convenient() const { return x_intercept.has_value() && y_intercept.has_value(); }
};

/// Newton polygon of a plane germ. Throws ZeroPolynomial, ArityUnsupported.
NewtonPolygon newton_polygon(const Poly& f);
NewtonPolygon newton_polygon_of_support(const std::vector<LatticePoint>& support);

/// nu(f) = 2S - a - b + 1. Throws NotConvenient naming the missing axis.
long newton_number(const Poly& f);
long newton_number(const NewtonPolygon& p);

/// Sum of the terms of f lying on the segment.
Poly face_poly(const Poly& f, const Segment& segment);

struct FaceCertificate {
  bool nondegenerate = true;
  /// f_gamma = x^p.i * y^p.j * g(t) with t = x^dx / y^dy.
  UPoly<ParamRatio> g;
  /// gcd(g, g'); a nonconstant gcd collects the multiple roots of g.
  UPoly<ParamRatio> gcd_g_dg;
};

/// Kouchnirenko non-degeneracy on one segment via the multiple-root test on
/// the face polynomial's dehomogenisation.
FaceCertificate nondegenerate_on(const Poly& f, const Segment& segment);
bool nondegenerate(const Poly& f);

/// Standalone SVG picture: grid, support dots, shaded diagram, polygon.
std::string polygon_svg(const NewtonPolygon& polygon, const std::vector<LatticePoint>& support);

std::vector<LatticePoint> plane_support(const Poly& f);

/// {vertices, segments, a, b, S, nu, nondegenerate, per_segment}.
nlohmann::json polygon_report(const Poly& f);

}  // namespace milnorkit
