#ifndef TROPREAL_REALIZE_HPP
#define TROPREAL_REALIZE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropreal/curve.hpp"
#include "tropreal/homopoly.hpp"
#include "tropreal/polygon.hpp"

namespace tropreal {

enum class RealizationStatus { Empty, NonEmpty };

/// Outcome of the realizability decision: the realization space is the
/// complement of the vertex hyperplanes inside the span of solution_basis.
struct RealizationResult {
  RealizationStatus status = RealizationStatus::Empty;
  long long proj_dim = -1;  // projective dimension; -1 when Empty
  std::vector<std::vector<FieldElement>> solution_basis;
  std::vector<std::vector<FieldElement>> vertex_functionals;
};

/// Coefficient transfer matrix M with coefficients(f_A) = M * coefficients(f)
/// for the degree-d expansion of a 3x3 variable substitution.
ExactMatrix substitution_expand(const ExactMatrix& sub, long long d);

/// Decides relative realizability of c in the plane: projects to every basis,
/// compares Newton polygons, and solves the resulting linear conditions.
/// The coefficient coordinates live on reference_basis (default: the
/// lexicographically least basis); the dimension does not depend on it.
RealizationResult realization_space(const PlaneIdeal& plane, const TropicalCurve& c,
                                    const std::optional<std::vector<int>>& reference_basis =
                                        std::nullopt);

/// -1 when the realization space is empty, else its projective dimension.
long long realization_dim(const PlaneIdeal& plane, const TropicalCurve& c);

/// Small-integer witness polynomial in the variables of the reference basis;
/// characteristic 0 only.
HomoPoly realization_poly(const PlaneIdeal& plane, const TropicalCurve& c);

/// True iff the divisor of f on E tropicalizes to c, checked projection by
/// projection through Newton polygons.
bool tropicalizes_to(const PlaneIdeal& plane, const HomoPoly& f, const TropicalCurve& c);

using DimCache = std::map<std::vector<LatticeVector>, long long>;

/// -1 when no irreducible cycle in E tropicalizes to c, else the realization
/// dimension.  An optional cache keyed by P(C) memoizes dimensions across
/// decompositions.
long long irr_realization_dim(const PlaneIdeal& plane, const TropicalCurve& c,
                              DimCache* cache = nullptr);

/// One summand of a signed-cycle realization.
struct CyclePiece {
  int sign = 1;              // +1 or -1
  long long multiplicity = 1;
  HomoPoly poly;
  TropicalCurve curve;  // the tropicalization of the divisor of poly
};

/// Constructive realization of c by a Z-linear combination of curves in E;
/// characteristic 0.  The signed sum of the piece tropicalizations is c.
std::vector<CyclePiece> realize_as_cycle(const PlaneIdeal& plane, const TropicalCurve& c);

}  // namespace tropreal

#endif
