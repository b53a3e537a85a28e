#include "tropreal/polygon.hpp"

#include <algorithm>
#include <string>

namespace tropreal {

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;
  // Monotone chain; strict turns only, so collinear points are dropped.
  std::vector<LatticePoint> lower, upper;
  for (const auto& p : pts) {
    while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() == 2 && lower[1] < lower[0]) std::swap(lower[0], lower[1]);
  return lower;
}

bool hull_contains(const std::vector<LatticePoint>& hull, const LatticePoint& pt) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == pt;
  if (hull.size() == 2) {
    if (cross(hull[0], hull[1], pt) != 0) return false;
    return std::min(hull[0].x, hull[1].x) <= pt.x && pt.x <= std::max(hull[0].x, hull[1].x) &&
           std::min(hull[0].y, hull[1].y) <= pt.y && pt.y <= std::max(hull[0].y, hull[1].y);
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const LatticePoint& a = hull[i];
    const LatticePoint& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, pt) < 0) return false;
  }
  return true;
}

NewtonPolygon::NewtonPolygon(long long degree, std::vector<LatticePoint> vertices_ccw)
    : degree_(degree), vertices_(std::move(vertices_ccw)) {
  if (vertices_.size() < 2)
    throw TropError(ErrorKind::InvariantViolation, "Newton polygon must have dimension >= 1");
  bool side_i = false, side_j = false, side_k = false;
  for (const auto& v : vertices_) {
    if (v.x < 0 || v.y < 0 || v.x + v.y > degree_)
      throw TropError(ErrorKind::InvariantViolation, "vertex outside the simplex");
    if (v.x == 0) side_i = true;
    if (v.y == 0) side_j = true;
    if (v.x + v.y == degree_) side_k = true;
  }
  if (!side_i || !side_j || !side_k)
    throw TropError(ErrorKind::InvariantViolation, "polygon misses a side of the simplex");
}

bool NewtonPolygon::contains(const LatticePoint& pt) const {
  if (pt.x < 0 || pt.y < 0 || pt.x + pt.y > degree_)
    throw TropError(ErrorKind::BadDimensions, "query point outside the simplex");
  return hull_contains(vertices_, pt);
}

namespace {

// Support classes of the positive-order table; class index gives the cyclic
// position, the (num, den) pair orders within a class by ascending num/den.
struct Classified {
  int cls;
  long long num, den;
  LatticeVector v;
};

Classified classify(const LatticeVector& v) {
  long long a = v[0], b = v[1], c = v[2];
  if (a > 0 && b > 0 && c == 0) return {1, b, a, v};
  if (a == 0 && b > 0 && c == 0) return {2, 0, 1, v};
  if (a == 0 && b > 0 && c > 0) return {3, c, b, v};
  if (a == 0 && b == 0 && c > 0) return {4, 0, 1, v};
  if (a > 0 && b == 0 && c > 0) return {5, a, c, v};
  if (a > 0 && b == 0 && c == 0) return {6, 0, 1, v};
  throw TropError(ErrorKind::InvariantViolation, "vector does not fit the orientation table");
}

}  // namespace

NewtonPolygon newton_polygon(const PlaneTropicalCurve& c) {
  const TropicalCurve& cur = c.curve();
  const long long d = cur.degree();
  std::vector<Classified> order;
  for (const auto& v : cur.vectors()) order.push_back(classify(v));
  std::sort(order.begin(), order.end(), [](const Classified& l, const Classified& r) {
    if (l.cls != r.cls) return l.cls < r.cls;
    return l.num * r.den < r.num * l.den;
  });
  long long m = 0;
  for (const auto& e : order)
    if (e.v[1] != 0) m += e.v[0];
  std::vector<LatticePoint> pts;
  long long q0 = 0, q1 = m;  // third coordinate implicit
  pts.push_back({q0, q1});
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const LatticeVector& v = order[k].v;
    q0 += v[1] - v[2];
    q1 += v[2] - v[0];
    pts.push_back({q0, q1});
  }
  return NewtonPolygon(d, convex_hull(std::move(pts)));
}

}  // namespace tropreal
