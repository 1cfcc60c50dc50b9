#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewlab/field.hpp"

using namespace skewlab;

namespace {

std::vector<Scalar> all_elements(const FieldSpec& field) {
  std::vector<Scalar> out;
  for (std::int64_t n = 0; n < field.p(); ++n) out.push_back(Scalar::from_int(field, n));
  return out;
}

} // namespace

TEST_CASE("GF(2): 1 + 1 = 0") {
  const FieldSpec f = FieldSpec::gfp(2);
  CHECK(Scalar::one(f) + Scalar::one(f) == Scalar::zero(f));
}

TEST_CASE("rationals: (2/3)*(3/4) = 1/2") {
  const Scalar prod = Scalar::from_fraction(2, 3) * Scalar::from_fraction(3, 4);
  // cross-multiplied integer oracle: prod = 6/12 as exact fractions
  const Rational v = prod.value();
  CHECK(boost::multiprecision::numerator(v) * 12 == boost::multiprecision::denominator(v) * 6);
  CHECK(prod == Scalar::from_fraction(1, 2));
  CHECK(prod.to_string() == "1/2"); // emitted in lowest terms
}

TEST_CASE("GF(3): inverse of 2 is 2") {
  const FieldSpec f = FieldSpec::gfp(3);
  const Scalar two = Scalar::from_int(f, 2);
  CHECK(two.inv() == two);
  CHECK((2 * 2) % 3 == 1); // the residue oracle behind it
  CHECK(two * two.inv() == Scalar::one(f));
}

TEST_CASE("field axioms hold exhaustively over GF(2) and GF(3)") {
  for (std::int64_t p : {2, 3}) {
    const FieldSpec f = FieldSpec::gfp(p);
    const Scalar zero = Scalar::zero(f);
    const Scalar one = Scalar::one(f);
    const auto elems = all_elements(f);
    for (const Scalar& a : elems) {
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a + (-a) == zero);
      CHECK(a * zero == zero);
      if (!a.is_zero()) CHECK(a * a.inv() == one);
      for (const Scalar& b : elems) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const Scalar& c : elems) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("multiplicative inverses over small prime fields") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    const FieldSpec f = FieldSpec::gfp(p);
    for (std::int64_t n = 1; n < p; ++n) {
      const Scalar a = Scalar::from_int(f, n);
      CHECK(a * a.inv() == Scalar::one(f));
      CHECK(a / a == Scalar::one(f));
    }
  }
}

TEST_CASE("rational field axioms on sampled values") {
  std::vector<Scalar> sample;
  for (int num : {-3, -1, 0, 1, 2, 5})
    for (int den : {1, 2, 3}) sample.push_back(Scalar::from_fraction(num, den));
  const Scalar zero = Scalar::zero(FieldSpec::rationals());
  const Scalar one = Scalar::one(FieldSpec::rationals());
  for (const Scalar& a : sample) {
    CHECK(a + zero == a);
    CHECK(a + (-a) == zero);
    if (!a.is_zero()) CHECK(a * a.inv() == one);
    for (const Scalar& b : sample) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const Scalar& c : sample) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("scalars reduce to canonical form") {
  const FieldSpec f = FieldSpec::gfp(5);
  CHECK(Scalar::from_int(f, 7).residue() == 2);
  CHECK(Scalar::from_int(f, -1).residue() == 4);
  CHECK(Scalar::from_int(f, -10).residue() == 0);
  // negative denominators normalize to positive ones
  CHECK(Scalar::from_fraction(2, -4) == Scalar::from_fraction(-1, 2));
  CHECK(Scalar::from_fraction(2, -4).to_string() == "-1/2");
  CHECK(Scalar::zero(FieldSpec::rationals()).to_string() == "0/1");
}

TEST_CASE("rational literals parse and round-trip") {
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("-2/4") == Rational(-1) / Rational(2));
  CHECK(parse_rational("6/-4") == Rational(-3) / Rational(2));
  CHECK(rational_to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(rational_to_string(Rational(7)) == "7/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1//2"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("field construction and naming") {
  CHECK(FieldSpec::gfp(2).name() == "gf2");
  CHECK(FieldSpec::rationals().name() == "rational");
  CHECK(FieldSpec::from_name("gf7") == FieldSpec::gfp(7));
  CHECK(FieldSpec::from_name("rational") == FieldSpec::rationals());
  CHECK_THROWS_AS(FieldSpec::gfp(4), Error);
  CHECK_THROWS_AS(FieldSpec::gfp(1), Error);
  CHECK_THROWS_AS(FieldSpec::from_name("gf4"), Error);
  CHECK_THROWS_AS(FieldSpec::from_name("f2"), Error);
}

TEST_CASE("error codes distinguish failure kinds") {
  const FieldSpec f2 = FieldSpec::gfp(2);
  const FieldSpec f3 = FieldSpec::gfp(3);
  try {
    (void)(Scalar::one(f2) + Scalar::one(f3));
    FAIL("mixed-field addition must throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedFields);
  }
  try {
    (void)Scalar::zero(f2).inv();
    FAIL("inverse of zero must throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  try {
    (void)(Scalar::one(f2) / Scalar::zero(f2));
    FAIL("division by zero must throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}
