#ifndef TROPREAL_CRITERIA32_HPP
#define TROPREAL_CRITERIA32_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "tropreal/curve.hpp"
#include "tropreal/polygon.hpp"

namespace tropreal {

/// One of the three straight lines contained in L^3_2, named by the pair
/// {i,j} of the ray e_i + e_j; P = {e_i+e_j, e_k+e_l}.
struct ClassicalLine {
  std::array<int, 2> pair;
  TropicalCurve curve() const;
};

std::array<ClassicalLine, 3> classical_lines();

/// Degree product minus the local corrections min(ad,bc) over shared
/// two-coordinate supports.
long long intersection_product(const TropicalCurve& c1, const TropicalCurve& c2);

/// The same intersection number read off the projected Newton polygons,
/// C . D = d - m_0 - m_3.
long long line_intersection_via_newton(const TropicalCurve& c, const ClassicalLine& line);

/// Stable intersection of L^3_2 with the classical plane a.x = 0; requires
/// sum(a) = 0, a != 0.
TropicalCurve plane_cycle_intersection(const std::array<long long, 4>& normal);

enum class Verdict { Fires, DoesNotFire, NotApplicable };

const char* to_string(Verdict v);

/// Verdict of one criterion with its witness: the index labeling and the
/// numbers appearing in the inequality, plus the plane normal when relevant.
struct CriterionResult {
  Verdict verdict = Verdict::DoesNotFire;
  std::array<int, 4> labeling{0, 1, 2, 3};
  std::map<std::string, long long> numbers;
  std::optional<std::array<long long, 4>> normal;
};

CriterionResult obstruction_intprod(const TropicalCurve& c);
CriterionResult obstruction_newton_margin(const TropicalCurve& c);
CriterionResult obstruction_commonray(const TropicalCurve& c);
CriterionResult obstruction_oppositefaces(const TropicalCurve& c);
CriterionResult obstruction_oneside(const TropicalCurve& c, long long characteristic);
CriterionResult obstruction_lattice(const TropicalCurve& c, long long characteristic);
CriterionResult obstruction_bogartkatz(const TropicalCurve& c, long long characteristic);

struct ObstructionReport {
  CriterionResult intprod;
  CriterionResult newton_margin;
  CriterionResult commonray;
  CriterionResult oppositefaces;
  CriterionResult oneside;
  CriterionResult lattice;
  CriterionResult bogartkatz;

  bool any_fires() const;
};

ObstructionReport run_all(const TropicalCurve& c, long long characteristic);

}  // namespace tropreal

#endif
