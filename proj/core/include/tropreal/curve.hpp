#ifndef TROPREAL_CURVE_HPP
#define TROPREAL_CURVE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "tropreal/plane.hpp"

namespace tropreal {

/// Integer vector m(sigma) * u_sigma for a ray, normalized so the minimum
/// coordinate is 0.
using LatticeVector = std::vector<long long>;

/// gcd of the coordinates (the ray multiplicity); positive for valid vectors.
long long multiplicity(const LatticeVector& v);
LatticeVector primitive(const LatticeVector& v);

/// A balanced 1-cycle given by its set P(C): pairwise non-parallel lattice
/// vectors summing to d * (1,...,1).  Vectors are stored sorted.
class TropicalCurve {
 public:
  static TropicalCurve from_vectors(std::vector<LatticeVector> vs, int ambient);

  const std::vector<LatticeVector>& vectors() const { return vectors_; }
  int ambient() const { return ambient_; }
  long long degree() const { return degree_; }

  /// Multiplicity of the ray through u (u primitive); 0 when absent.
  long long ray_multiplicity(const LatticeVector& u) const;

  bool operator==(const TropicalCurve& other) const { return vectors_ == other.vectors_; }
  bool operator!=(const TropicalCurve& other) const { return !(*this == other); }
  bool operator<(const TropicalCurve& other) const { return vectors_ < other.vectors_; }

 private:
  TropicalCurve() = default;
  std::vector<LatticeVector> vectors_;
  int ambient_ = 0;
  long long degree_ = 0;
};

/// A tropical curve in R^3/<1> remembering the ascending coordinate triple
/// it was projected from.
class PlaneTropicalCurve {
 public:
  PlaneTropicalCurve(TropicalCurve curve, std::array<int, 3> source_triple);
  const TropicalCurve& curve() const { return curve_; }
  const std::array<int, 3>& source_triple() const { return triple_; }

 private:
  TropicalCurve curve_;
  std::array<int, 3> triple_;
};

/// Checks every ray of c against the fan of m; throws RayOutsideFan.
void validate_in_fan(const TropicalCurve& c, const Matroid& m);

/// Push-forward to the coordinates of the basis a (ascending triple):
/// coordinates outside a are deleted, vectors on a common ray are summed,
/// zero images dropped.  Degree is preserved.
PlaneTropicalCurve project(const TropicalCurve& c, const std::array<int, 3>& a);

/// All nontrivial splittings C = D1 + D2 into positive balanced cycles,
/// as unordered pairs with D1 <= D2, deduplicated.
std::vector<std::pair<TropicalCurve, TropicalCurve>> decompositions(const TropicalCurve& c);

/// All permutations of {0..n-1}.
std::vector<std::vector<int>> symmetric_group(int n);

TropicalCurve apply_permutation(const TropicalCurve& c, const std::vector<int>& perm);

/// Lexicographically minimal sorted vector list over the group orbit.
TropicalCurve canonical_form(const TropicalCurve& c, const std::vector<std::vector<int>>& group);

/// Degree-1 curve whose rays are the indicator vectors of the rank-1 flats.
TropicalCurve rank1_flats_curve(const Matroid& m);

}  // namespace tropreal

#endif
