#include <set>

#include "doctest.h"
#include "tropreal/curve.hpp"

using namespace tropreal;

namespace {

TropicalCurve curve4(std::vector<LatticeVector> vs) {
  return TropicalCurve::from_vectors(std::move(vs), 4);
}

const std::vector<LatticeVector> kDegcVectors = {
    {0, 3, 1, 0}, {0, 0, 1, 3}, {2, 0, 1, 0}, {1, 0, 0, 0}};

Matroid l32_matroid() {
  static PlaneIdeal plane = PlaneIdeal::from_forms({{1, 1, 1, 1}}, 0);
  return Matroid(plane);
}

}  // namespace

TEST_CASE("curve validation") {
  TropicalCurve c = curve4(kDegcVectors);
  CHECK(c.degree() == 3);
  CHECK(c.vectors().front() == LatticeVector{0, 0, 1, 3});  // sorted

  CHECK_THROWS_AS(curve4({{1, 1, 0, 0}}), TropError);                    // Unbalanced
  CHECK_THROWS_AS(curve4({{1, 1, 0, 0}, {2, 2, 0, 0}}), TropError);      // ParallelRays
  CHECK_THROWS_AS(curve4({{1, 1, 1, 1}}), TropError);                    // all-ones line
  CHECK_THROWS_AS(curve4({{1, 2, 1, 1}, {1, 0, 1, 1}}), TropError);      // NotNormalized
  CHECK_THROWS_AS(TropicalCurve::from_vectors({}, 4), TropError);        // empty
}

TEST_CASE("degree") {
  CHECK(curve4({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}).degree() == 1);
  CHECK(curve4({{2, 2, 0, 0}, {0, 0, 2, 2}}).degree() == 2);
}

TEST_CASE("validate_in_fan") {
  Matroid m = l32_matroid();
  CHECK_NOTHROW(validate_in_fan(curve4(kDegcVectors), m));
  TropicalCurve bad = curve4({{1, 1, 1, 0}, {0, 0, 0, 1}});
  CHECK_THROWS_AS(validate_in_fan(bad, m), TropError);
}

TEST_CASE("projection deletes coordinates and merges rays") {
  TropicalCurve degc = curve4(kDegcVectors);
  PlaneTropicalCurve p = project(degc, {0, 1, 2});
  std::vector<LatticeVector> expect = {{0, 0, 1}, {0, 3, 1}, {1, 0, 0}, {2, 0, 1}};
  CHECK(p.curve().vectors() == expect);
  CHECK(p.curve().degree() == 3);

  TropicalCurve doubled = curve4({{2, 2, 0, 0}, {0, 0, 2, 2}});
  PlaneTropicalCurve q = project(doubled, {0, 1, 2});
  std::vector<LatticeVector> expect2 = {{0, 0, 2}, {2, 2, 0}};
  CHECK(q.curve().vectors() == expect2);

  // merge case: two distinct rays map onto one ray of the image
  TropicalCurve merging = curve4({{1, 0, 0, 1}, {1, 0, 0, 0}, {0, 2, 1, 0}, {0, 0, 1, 1}});
  PlaneTropicalCurve r = project(merging, {0, 1, 2});
  std::vector<LatticeVector> expect3 = {{0, 0, 1}, {0, 2, 1}, {2, 0, 0}};
  CHECK(r.curve().vectors() == expect3);
}

TEST_CASE("projection preserves degree over all bases") {
  Matroid m = l32_matroid();
  std::vector<TropicalCurve> samples = {
      curve4(kDegcVectors),
      curve4({{2, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 0, 1}}),
      curve4({{3, 2, 0, 0}, {0, 1, 0, 2}, {0, 0, 3, 1}}),
  };
  for (const auto& c : samples)
    for (const auto& b : m.bases()) {
      PlaneTropicalCurve p = project(c, {b[0], b[1], b[2]});
      CHECK(p.curve().degree() == c.degree());
    }
}

TEST_CASE("plane curve projected by its own triple is itself") {
  TropicalCurve c = TropicalCurve::from_vectors({{0, 3, 1}, {0, 0, 1}, {2, 0, 1}, {1, 0, 0}}, 3);
  PlaneTropicalCurve p = project(c, {0, 1, 2});
  CHECK(p.curve() == c);
}

TEST_CASE("decompositions") {
  TropicalCurve line = curve4({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(decompositions(line).empty());

  TropicalCurve doubled = curve4({{2, 2, 0, 0}, {0, 0, 2, 2}});
  auto ds = decompositions(doubled);
  REQUIRE(ds.size() == 1);
  std::vector<LatticeVector> half = {{0, 0, 1, 1}, {1, 1, 0, 0}};
  CHECK(ds[0].first.vectors() == half);
  CHECK(ds[0].second.vectors() == half);

  // every emitted pair splits the degree and is a valid curve
  TropicalCurve degc = curve4(kDegcVectors);
  for (const auto& [d1, d2] : decompositions(degc))
    CHECK(d1.degree() + d2.degree() == degc.degree());
}

TEST_CASE("canonical form") {
  auto s4 = symmetric_group(4);
  CHECK(s4.size() == 24);

  TropicalCurve doubled = curve4({{0, 0, 2, 2}, {2, 2, 0, 0}});
  CHECK(canonical_form(doubled, s4) == doubled);

  // the degc curve is fixed by swapping coordinates 1 and 3
  TropicalCurve degc = curve4(kDegcVectors);
  std::set<std::vector<LatticeVector>> orbit;
  for (const auto& g : s4) orbit.insert(apply_permutation(degc, g).vectors());
  CHECK(orbit.size() == 12);
  CHECK(apply_permutation(degc, {0, 3, 2, 1}) == degc);

  // identity group: canonical form is just the sorted input
  CHECK(canonical_form(degc, {{0, 1, 2, 3}}) == degc);
}

TEST_CASE("rank1_flats_curve") {
  Matroid m = l32_matroid();
  TropicalCurve d = rank1_flats_curve(m);
  std::vector<LatticeVector> expect = {
      {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  CHECK(d.vectors() == expect);
  CHECK(d.degree() == 1);

  PlaneIdeal deg = PlaneIdeal::from_forms({{1, -1, 0, 0, 0}, {0, 0, 1, 1, 1}}, 0);
  Matroid md(deg);
  TropicalCurve dd = rank1_flats_curve(md);
  CHECK(dd.degree() == 1);
  std::vector<LatticeVector> expect5 = {
      {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {1, 1, 0, 0, 0}};
  CHECK(dd.vectors() == expect5);
}

TEST_CASE("multiplicity and primitive") {
  CHECK(multiplicity({2, 0, 4, 0}) == 2);
  CHECK(primitive({2, 0, 4, 0}) == LatticeVector{1, 0, 2, 0});
  CHECK_THROWS_AS(primitive({0, 0, 0, 0}), TropError);
}
