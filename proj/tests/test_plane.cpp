#include <algorithm>

#include "doctest.h"
#include "tropreal/plane.hpp"

using namespace tropreal;

namespace {

PlaneIdeal l32(long characteristic = 0) {
  return PlaneIdeal::from_forms({{1, 1, 1, 1}}, characteristic);
}

PlaneIdeal degenerate5() {
  // L = (x0 - x1, x2 + x3 + x4) in a 5-torus
  return PlaneIdeal::from_forms({{1, -1, 0, 0, 0}, {0, 0, 1, 1, 1}}, 0);
}

}  // namespace

TEST_CASE("plane validation") {
  CHECK(l32().n_plus_1() == 4);
  CHECK_THROWS_AS(PlaneIdeal::from_forms({{1, 1, 1, 1}, {1, 1, 1, 1}}, 0), TropError);
  // reduces to zero over F_2
  CHECK_THROWS_AS(PlaneIdeal::from_forms({{2, 2, 2, 2}}, 2), TropError);
  // x4 vanishes identically on E
  CHECK_THROWS_AS(PlaneIdeal::from_forms({{1, 1, 1, 1, 0}, {0, 0, 0, 0, 1}}, 0), TropError);
}

TEST_CASE("uniform matroid of the symmetric plane") {
  Matroid m(l32());
  CHECK(m.ground_size() == 4);
  CHECK(m.rank({0, 1, 2, 3}) == 3);
  auto r1 = m.flats_of_rank(1);
  REQUIRE(r1.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(r1[i].members == std::vector<int>{i});
  auto r2 = m.flats_of_rank(2);
  CHECK(r2.size() == 6);
  auto bases = m.bases();
  REQUIRE(bases.size() == 4);
  CHECK(bases[0] == std::vector<int>{0, 1, 2});
  CHECK(bases[3] == std::vector<int>{1, 2, 3});
}

TEST_CASE("uniform rank-3 matroid on 5 elements has 10 bases") {
  PlaneIdeal plane = PlaneIdeal::from_forms({{1, 1, 1, 1, 1}, {1, 2, 3, 4, 5}}, 0);
  Matroid m(plane);
  CHECK(m.bases().size() == 10);
}

TEST_CASE("closure") {
  Matroid m(l32());
  CHECK(m.closure({}) == std::vector<int>{});
  CHECK(m.closure({0, 1}) == std::vector<int>{0, 1});
  Matroid md(degenerate5());
  CHECK(md.closure({0}) == std::vector<int>{0, 1});
}

TEST_CASE("degenerate plane flats") {
  Matroid m(degenerate5());
  auto r1 = m.flats_of_rank(1);
  REQUIRE(r1.size() == 4);
  CHECK(r1[0].members == std::vector<int>{0, 1});
  CHECK(r1[1].members == std::vector<int>{2});
  CHECK(r1[2].members == std::vector<int>{3});
  CHECK(r1[3].members == std::vector<int>{4});
  // no basis contains both parallel elements 0 and 1
  for (const auto& b : m.bases())
    CHECK(!(std::find(b.begin(), b.end(), 0) != b.end() &&
            std::find(b.begin(), b.end(), 1) != b.end()));
}

TEST_CASE("rank function is monotone and submodular (spot checks)") {
  Matroid m(degenerate5());
  std::vector<std::vector<int>> subsets = {{}, {0}, {1}, {0, 1}, {0, 2}, {1, 3}, {2, 3},
                                           {0, 1, 2}, {0, 2, 3}, {2, 3, 4}, {0, 1, 2, 3}};
  for (const auto& a : subsets)
    for (const auto& b : subsets) {
      std::vector<int> uni, inter;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      CHECK(m.rank(uni) + m.rank(inter) <= m.rank(a) + m.rank(b));
      if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
        CHECK(m.rank(a) <= m.rank(b));
    }
}

TEST_CASE("uniform fan cone census: 4 + 6 rays and 12 two-dimensional cones") {
  Matroid m(l32());
  auto r1 = m.flats_of_rank(1);
  auto r2 = m.flats_of_rank(2);
  CHECK(r1.size() + r2.size() == 10);
  int chains = 0;
  for (const Flat& g1 : r1)
    for (const Flat& g2 : r2)
      if (std::includes(g2.members.begin(), g2.members.end(), g1.members.begin(),
                        g1.members.end()))
        ++chains;
  CHECK(chains == 12);
}

TEST_CASE("contains_ray in L^3_2") {
  Matroid m(l32());
  auto unit = contains_ray(m, {1, 0, 0, 0});
  REQUIRE(unit.has_value());
  CHECK(unit->g1.members == std::vector<int>{0});
  CHECK(!unit->g2.has_value());
  CHECK(unit->alpha == 1);
  CHECK(unit->beta == 0);

  auto interior = contains_ray(m, {2, 0, 1, 0});
  REQUIRE(interior.has_value());
  CHECK(interior->g1.members == std::vector<int>{0});
  REQUIRE(interior->g2.has_value());
  CHECK(interior->g2->members == std::vector<int>{0, 2});
  CHECK(interior->alpha == 1);
  CHECK(interior->beta == 1);

  CHECK(!contains_ray(m, {1, 1, 1, 0}).has_value());

  auto flat2 = contains_ray(m, {3, 3, 0, 0});
  REQUIRE(flat2.has_value());
  REQUIRE(flat2->g2.has_value());
  CHECK(flat2->g2->members == std::vector<int>{0, 1});
  CHECK(flat2->alpha == 0);
  CHECK(flat2->beta == 3);
}

TEST_CASE("rank-1 flat indicators sum to the all-ones vector") {
  for (const Matroid& m : {Matroid(l32()), Matroid(degenerate5())}) {
    std::vector<long long> sum(m.ground_size(), 0);
    for (const Flat& f : m.flats_of_rank(1)) {
      auto v = indicator(f, m.ground_size());
      for (std::size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
    }
    CHECK(std::all_of(sum.begin(), sum.end(), [](long long x) { return x == 1; }));
  }
}

TEST_CASE("eliminate") {
  Matroid m(l32());
  ExactMatrix same = m.eliminate({0, 1, 2}, {0, 1, 2});
  CHECK(same == ExactMatrix::identity(3, 0));

  // x0 = -x1 - x2 - x3 modulo (x0+x1+x2+x3)
  ExactMatrix sub = m.eliminate({0, 1, 2}, {1, 2, 3});
  for (int a = 0; a < 3; ++a) CHECK(sub.at(0, a).rat() == -1);
  CHECK(sub.at(1, 0).rat() == 1);  // x1 -> x1
  CHECK(sub.at(2, 1).rat() == 1);  // x2 -> x2

  CHECK_THROWS_AS(m.eliminate({0, 1, 2}, {0, 1, 1}), TropError);
}

TEST_CASE("eliminate round trip is the identity on E") {
  Matroid m(degenerate5());
  std::vector<int> a{0, 2, 3}, b{1, 2, 4};
  REQUIRE(m.is_basis(a));
  REQUIRE(m.is_basis(b));
  ExactMatrix ab = m.eliminate(a, b);
  ExactMatrix ba = m.eliminate(b, a);
  // substituting b-variables into the a-to-b rule must reproduce a-variables
  CHECK(ab * ba == ExactMatrix::identity(3, 0));
}

TEST_CASE("eliminate respects the ideal") {
  // substituting the rule into each generator form yields the zero form
  PlaneIdeal plane = degenerate5();
  Matroid m(plane);
  std::vector<int> from{0, 2, 3};
  std::vector<int> to{1, 2, 4};
  ExactMatrix sub = m.eliminate(from, to);
  // build substituted row: for each form, express it in to-variables
  for (std::size_t r = 0; r < plane.forms().rows(); ++r) {
    std::vector<FieldElement> acc(3, FieldElement::zero(0));
    // sum over all variables: coefficient * expression of x_i in to-vars
    for (int i = 0; i < plane.n_plus_1(); ++i) {
      const FieldElement& coeff = plane.forms().at(r, i);
      if (coeff.is_zero()) continue;
      // x_i written in to-variables: need one elimination per variable, so
      // reuse eliminate with a from-basis containing i when possible
      std::vector<int> from_i;
      for (const auto& cand : m.bases())
        if (std::find(cand.begin(), cand.end(), i) != cand.end()) {
          from_i = cand;
          break;
        }
      ExactMatrix sub_i = m.eliminate(from_i, to);
      std::size_t pos = std::find(from_i.begin(), from_i.end(), i) - from_i.begin();
      for (int t = 0; t < 3; ++t) acc[t] += coeff * sub_i.at(pos, t);
    }
    for (int t = 0; t < 3; ++t) CHECK(acc[t].is_zero());
  }
}
