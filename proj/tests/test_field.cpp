#include "doctest.h"
#include "tropreal/field.hpp"

using namespace tropreal;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  FieldElement a = FieldElement::rational(4, -6);
  CHECK(a.rat().get_num() == -2);
  CHECK(a.rat().get_den() == 3);
  FieldElement b = FieldElement::rational(1, 3);
  CHECK((a + b).rat() == mpq_class(-1, 3));
}

TEST_CASE("residues reduced into [0,p)") {
  FieldElement a = FieldElement::integer(-3, 7);
  CHECK(a.res() == 4);
  CHECK((a * FieldElement::integer(2, 7)).res() == 1);
  CHECK((-FieldElement::integer(0, 7)).res() == 0);
}

TEST_CASE("mismatched fields are rejected") {
  FieldElement q = FieldElement::integer(1, 0);
  FieldElement f2 = FieldElement::integer(1, 2);
  CHECK_THROWS_AS(q + f2, TropError);
}

TEST_CASE("division and inverse") {
  FieldElement a = FieldElement::integer(3, 11);
  CHECK((a * a.inverse()).is_one());
  CHECK_THROWS_AS(FieldElement::integer(0, 11).inverse(), TropError);
  FieldElement q = FieldElement::rational(3, 4);
  CHECK((q / q).is_one());
}

// F_p arithmetic agrees with integer arithmetic followed by reduction.
TEST_CASE("modular arithmetic matches reduced integer arithmetic") {
  const long p = 97;
  unsigned long long state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((state >> 33) % 2001) - 1000;
  };
  for (int trial = 0; trial < 500; ++trial) {
    long x = next(), y = next();
    auto fx = FieldElement::integer(x, p);
    auto fy = FieldElement::integer(y, p);
    CHECK((fx + fy).res() == ((x + y) % p + p) % p);
    CHECK((fx - fy).res() == ((x - y) % p + p) % p);
    CHECK((fx * fy).res() == ((x * y) % p + p) % p);
  }
}

TEST_CASE("from_rational maps into F_p when the denominator is a unit") {
  CHECK(FieldElement::from_rational(mpq_class(1, 3), 5).res() == 2);  // 3*2 = 6 = 1
  CHECK_THROWS_AS(FieldElement::from_rational(mpq_class(1, 5), 5), TropError);
}
