#include "milnorkit/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "milnorkit/errors.hpp"

namespace milnorkit {

int Segment::lattice_length() const { return std::gcd(q.i - p.i, p.j - q.j); }
int Segment::step_x() const { return (q.i - p.i) / lattice_length(); }
int Segment::step_y() const { return (p.j - q.j) / lattice_length(); }

bool Segment::contains(const LatticePoint& pt) const {
  return pt.i >= p.i && pt.i <= q.i && weight_x() * pt.i + weight_y() * pt.j == weighted_degree();
}

namespace {

void require_plane(const Poly& f) {
  if (f.ring().arity() != 2)
    throw Error(ErrorKind::ArityUnsupported, "Newton polygons are implemented for two variables only");
}

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<long long>(a.i - o.i) * (b.j - o.j) - static_cast<long long>(a.j - o.j) * (b.i - o.i);
}

}  // namespace

std::vector<LatticePoint> plane_support(const Poly& f) {
  require_plane(f);
  std::vector<LatticePoint> pts;
  for (const auto& e : f.support()) pts.push_back({e[0], e[1]});
  std::sort(pts.begin(), pts.end());
  return pts;
}

NewtonPolygon newton_polygon_of_support(const std::vector<LatticePoint>& support) {
  NewtonPolygon poly;
  if (support.empty()) return poly;
  // Lowest point in each column, left to right.
  std::vector<LatticePoint> pts = support;
  std::sort(pts.begin(), pts.end());
  std::vector<LatticePoint> columns;
  for (const auto& p : pts)
    if (columns.empty() || columns.back().i != p.i) columns.push_back(p);

  std::vector<LatticePoint> hull;
  for (const auto& p : columns) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  // Keep the descending part, up to the first lowest vertex.
  int min_j = std::min_element(hull.begin(), hull.end(), [](auto& a, auto& b) { return a.j < b.j; })->j;
  for (const auto& v : hull) {
    poly.vertices.push_back(v);
    if (v.j == min_j) break;
  }
  for (std::size_t k = 0; k + 1 < poly.vertices.size(); ++k)
    poly.segments.push_back({poly.vertices[k], poly.vertices[k + 1]});
  if (poly.vertices.front().i == 0) poly.y_intercept = poly.vertices.front().j;
  if (poly.vertices.back().j == 0) poly.x_intercept = poly.vertices.back().i;
  if (poly.convenient()) {
    long twice = 0;
    for (const auto& s : poly.segments) twice += static_cast<long>(s.q.i - s.p.i) * (s.p.j + s.q.j);
    poly.area = Rational(twice, 2);
    poly.area->canonicalize();
  }
  return poly;
}

NewtonPolygon newton_polygon(const Poly& f) {
  require_plane(f);
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no Newton polygon");
  return newton_polygon_of_support(plane_support(f));
}

long newton_number(const NewtonPolygon& p) {
  if (!p.convenient()) {
    std::string missing = !p.x_intercept && !p.y_intercept ? "both axes"
                          : !p.x_intercept                 ? "the x-axis (no pure power of x)"
                                                           : "the y-axis (no pure power of y)";
    throw Error(ErrorKind::NotConvenient, "Newton diagram does not meet " + missing);
  }
  Rational nu = 2 * *p.area - *p.x_intercept - *p.y_intercept + 1;
  return nu.get_num().get_si();
}

long newton_number(const Poly& f) { return newton_number(newton_polygon(f)); }

namespace {

void require_segment(const Poly& f, const Segment& s) {
  NewtonPolygon poly = newton_polygon(f);
  if (std::find(poly.segments.begin(), poly.segments.end(), s) == poly.segments.end())
    throw Error(ErrorKind::SegmentMismatch, "segment is not an edge of the Newton polygon");
}

}  // namespace

Poly face_poly(const Poly& f, const Segment& segment) {
  require_segment(f, segment);
  Poly out(f.ring_ptr());
  for (const auto& [e, c] : f.terms())
    if (segment.contains({e[0], e[1]})) out.add_term(e, c);
  return out;
}

FaceCertificate nondegenerate_on(const Poly& f, const Segment& segment) {
  require_segment(f, segment);
  const int k = segment.lattice_length();
  std::vector<ParamRatio> coeffs;
  for (int m = 0; m <= k; ++m) {
    ExpVec e;
    e[0] = static_cast<std::uint16_t>(segment.p.i + m * segment.step_x());
    e[1] = static_cast<std::uint16_t>(segment.p.j - m * segment.step_y());
    coeffs.push_back(f.coefficient(e));
  }
  FaceCertificate cert;
  cert.g = UPoly<ParamRatio>(std::move(coeffs));
  cert.gcd_g_dg = gcd(cert.g, cert.g.derivative());
  cert.nondegenerate = cert.gcd_g_dg.degree() < 1;
  return cert;
}

bool nondegenerate(const Poly& f) {
  NewtonPolygon poly = newton_polygon(f);
  for (const auto& s : poly.segments)
    if (!nondegenerate_on(f, s).nondegenerate) return false;
  return true;
}

std::string polygon_svg(const NewtonPolygon& polygon, const std::vector<LatticePoint>& support) {
  constexpr int kScale = 40;
  constexpr int kMargin = 40;
  int max_i = 1, max_j = 1;
  for (const auto& p : support) {
    max_i = std::max(max_i, p.i);
    max_j = std::max(max_j, p.j);
  }
  max_i += 1;
  max_j += 1;
  const int width = 2 * kMargin + max_i * kScale;
  const int height = 2 * kMargin + max_j * kScale;
  auto X = [&](int i) { return kMargin + i * kScale; };
  auto Y = [&](int j) { return kMargin + (max_j - j) * kScale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  os << "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int i = 0; i <= max_i; ++i)
    os << "<line x1=\"" << X(i) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(i) << "\" y2=\"" << Y(max_j) << "\"/>\n";
  for (int j = 0; j <= max_j; ++j)
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(j) << "\" x2=\"" << X(max_i) << "\" y2=\"" << Y(j) << "\"/>\n";
  os << "</g>\n";

  if (!polygon.vertices.empty()) {
    const auto& first = polygon.vertices.front();
    const auto& last = polygon.vertices.back();
    os << "<polygon class=\"diagram\" fill=\"#cfe3f7\" fill-opacity=\"0.7\" stroke=\"none\" points=\"";
    os << X(first.i) << ',' << Y(max_j);
    for (const auto& v : polygon.vertices) os << ' ' << X(v.i) << ',' << Y(v.j);
    os << ' ' << X(max_i) << ',' << Y(last.j) << ' ' << X(max_i) << ',' << Y(max_j) << "\"/>\n";

    os << "<polyline class=\"newton-polygon\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"3\" data-lattice=\"";
    for (std::size_t k = 0; k < polygon.vertices.size(); ++k)
      os << (k ? " " : "") << polygon.vertices[k].i << ',' << polygon.vertices[k].j;
    os << "\" points=\"";
    for (std::size_t k = 0; k < polygon.vertices.size(); ++k)
      os << (k ? " " : "") << X(polygon.vertices[k].i) << ',' << Y(polygon.vertices[k].j);
    os << "\"/>\n";
  }

  os << "<g class=\"axes\" stroke=\"black\" stroke-width=\"2\">\n"
     << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(max_i) << "\" y2=\"" << Y(0) << "\"/>\n"
     << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(max_j) << "\"/>\n"
     << "</g>\n";

  os << "<g class=\"support\" fill=\"#c0392b\">\n";
  for (const auto& p : support)
    os << "<circle cx=\"" << X(p.i) << "\" cy=\"" << Y(p.j) << "\" r=\"5\" data-i=\"" << p.i << "\" data-j=\""
       << p.j << "\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

nlohmann::json polygon_report(const Poly& f) {
  using nlohmann::json;
  NewtonPolygon poly = newton_polygon(f);
  json out;
  out["vertices"] = json::array();
  for (const auto& v : poly.vertices) out["vertices"].push_back({v.i, v.j});
  out["segments"] = json::array();
  out["per_segment"] = json::array();
  bool all = true;
  for (const auto& s : poly.segments) {
    FaceCertificate cert = nondegenerate_on(f, s);
    all = all && cert.nondegenerate;
    out["segments"].push_back({{"from", {s.p.i, s.p.j}},
                               {"to", {s.q.i, s.q.j}},
                               {"face", face_poly(f, s).to_string()}});
    out["per_segment"].push_back(
        {{"verdict", cert.nondegenerate},
         {"certificate",
          {{"g", upoly_to_string(cert.g, "t", f.ring().params)},
           {"gcd_g_dg", upoly_to_string(cert.gcd_g_dg, "t", f.ring().params)}}}});
  }
  out["a"] = poly.x_intercept ? json(*poly.x_intercept) : json(nullptr);
  out["b"] = poly.y_intercept ? json(*poly.y_intercept) : json(nullptr);
  out["S"] = poly.area ? json(poly.area->get_str()) : json(nullptr);
  out["convenient"] = poly.convenient();
  out["nu"] = poly.convenient() ? json(newton_number(poly)) : json(nullptr);
  out["nondegenerate"] = all;
  return out;
}

}  // namespace milnorkit
