#ifndef TROPREAL_POLYGON_HPP
#define TROPREAL_POLYGON_HPP

#include <vector>

#include "tropreal/curve.hpp"

namespace tropreal {

struct LatticePoint {
  long long x = 0;
  long long y = 0;

  bool operator==(const LatticePoint& other) const { return x == other.x && y == other.y; }
  bool operator<(const LatticePoint& other) const {
    return x != other.x ? x < other.x : y < other.y;
  }
};

/// Convex hull, counterclockwise, starting at the lexicographically smallest
/// point; collinear interior points removed.  Degenerate inputs yield a
/// segment (2 points) or a single point.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts);

/// Convex lattice polygon inside the dilated simplex Delta_d, touching all
/// three of its sides.  Point (i,j) is the exponent pair of the two
/// lowest-index variables; the third exponent is d-i-j.
class NewtonPolygon {
 public:
  NewtonPolygon(long long degree, std::vector<LatticePoint> vertices_ccw);

  long long degree() const { return degree_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  /// Exact membership test, boundary included.
  bool contains(const LatticePoint& pt) const;

  bool operator==(const NewtonPolygon& other) const {
    return degree_ == other.degree_ && vertices_ == other.vertices_;
  }

 private:
  long long degree_;
  std::vector<LatticePoint> vertices_;
};

/// Newton polygon of a plane tropical curve via the positive-order vertex
/// walk; the inverse of the inner-normal-fan correspondence.
NewtonPolygon newton_polygon(const PlaneTropicalCurve& c);

/// Membership in an arbitrary hull (same conventions as NewtonPolygon).
bool hull_contains(const std::vector<LatticePoint>& hull, const LatticePoint& pt);

}  // namespace tropreal

#endif
