#include "doctest.h"
#include "manin/field.hpp"
#include "manin/params.hpp"

using namespace manin;

TEST_CASE("field axioms in F_p and Q") {
  for (Field f : {Field::default_fp(), Field::rationals()}) {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
      FieldElement a = rng.nonzero(f), b = rng.nonzero(f), c = rng.nonzero(f);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * (b * c) == (a * b) * c);
      CHECK(a * a.inv() == FieldElement::one(f));
      CHECK(a + (-a) == FieldElement::zero(f));
    }
  }
}

TEST_CASE("division by zero is reported") {
  Field f = Field::default_fp();
  CHECK_THROWS_AS(FieldElement::zero(f).inv(), MathError);
  CHECK_THROWS_AS(FieldElement::zero(Field::rationals()).inv(), MathError);
}

TEST_CASE("prime validation") {
  CHECK_THROWS_AS(Field::fp(4), MathError);          // too small and composite
  CHECK_THROWS_AS(Field::fp((1ull << 32) + 1), MathError);  // composite
  CHECK(Field::fp((1ull << 61) - 1).prime == Field::kMersenne61);
  CHECK(is_prime_u64(4611686018427387847ull));
}

TEST_CASE("mixed-field arithmetic is an error") {
  FieldElement a = FieldElement::one(Field::default_fp());
  FieldElement b = FieldElement::one(Field::rationals());
  CHECK_THROWS_AS(a + b, MathError);
}

TEST_CASE("rational rendering is exact") {
  Field q = Field::rationals();
  FieldElement x = FieldElement::from_ratio(2, 3, q);
  FieldElement y = FieldElement::from_ratio(1, 6, q);
  CHECK((x + y).to_string() == "5/6");
}

TEST_CASE("parameter assignment honors the constraints") {
  for (Mode mode : {Mode::generic, Mode::one_parameter, Mode::yangian}) {
    ParameterAssignment a =
        ParameterAssignment::make(3, 3, mode, 42, Field::default_fp());
    FieldElement one = FieldElement::one(a.field());
    for (int i = 1; i <= 3; ++i) {
      CHECK(a.lookup('q', i, i) == one);
      for (int j = 1; j <= 3; ++j) {
        CHECK(a.lookup('q', i, j) * a.lookup('q', j, i) == one);
        CHECK(a.lookup('p', i, j) * a.lookup('p', j, i) == one);
      }
    }
    if (mode == Mode::yangian) {
      FieldElement u2 = a.u() * a.u();
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
          CHECK(a.lookup('p', i, j) * a.lookup('q', i, j) == u2);
    }
  }
}

TEST_CASE("classical mode forces ones") {
  ParameterAssignment a =
      ParameterAssignment::make(2, 2, Mode::classical, 9, Field::default_fp());
  CHECK(a.lookup('p', 1, 2) == FieldElement::one(a.field()));
  CHECK(a.lookup('q', 2, 1) == FieldElement::one(a.field()));
  CHECK_THROWS_AS(a.broken(1), MathError);
}

TEST_CASE("assignments are deterministic in the seed") {
  auto a = ParameterAssignment::make(3, 2, Mode::generic, 11, Field::default_fp());
  auto b = ParameterAssignment::make(3, 2, Mode::generic, 11, Field::default_fp());
  auto c = ParameterAssignment::make(3, 2, Mode::generic, 12, Field::default_fp());
  CHECK(a.lookup('q', 1, 3) == b.lookup('q', 1, 3));
  CHECK(a.lookup('p', 1, 2) == b.lookup('p', 1, 2));
  CHECK_FALSE(a.lookup('q', 1, 2) == c.lookup('q', 1, 2));
}

TEST_CASE("broken assignment violates exactly the targeted constraint") {
  auto a = ParameterAssignment::make(2, 2, Mode::generic, 5, Field::default_fp());
  auto b = a.broken(5);
  FieldElement one = FieldElement::one(a.field());
  CHECK_FALSE(b.lookup('q', 1, 2) * b.lookup('q', 2, 1) == one);
  CHECK(b.lookup('p', 1, 2) * b.lookup('p', 2, 1) == one);
}

TEST_CASE("lookup rejects out-of-range indices") {
  auto a = ParameterAssignment::make(2, 3, Mode::generic, 4,
                                     Field::default_fp());
  CHECK_THROWS_AS(a.lookup('q', 0, 1), MathError);
  CHECK_THROWS_AS(a.lookup('q', 1, 3), MathError);  // q is 2x2
  CHECK_THROWS_AS(a.lookup('p', 4, 1), MathError);  // p is 3x3
  CHECK_THROWS_AS(a.lookup('z', 1, 1), MathError);
}

TEST_CASE("yangian sampling rejects u^2 = -1 and u = 0") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto a = ParameterAssignment::make(2, 2, Mode::yangian, seed,
                                       Field::default_fp());
    FieldElement u2 = a.u() * a.u();
    CHECK_FALSE(u2.is_zero());
    CHECK_FALSE(u2 == -FieldElement::one(a.field()));
  }
}
