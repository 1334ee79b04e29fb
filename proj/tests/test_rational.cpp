#include <doctest.h>

#include <random>

#include "homalg/rational.hpp"
#include "oracle.hpp"

using namespace homalg;

TEST_CASE("scalar arithmetic is exact and canonical") {
  CHECK(scalar_arith(make_rational(1, 2), make_rational(1, 3), ScalarOp::Add) ==
        make_rational(5, 6));
  CHECK(scalar_arith(make_rational(2, 4), make_rational(1, 1), ScalarOp::Mul) ==
        make_rational(1, 2));
  CHECK(scalar_arith(make_rational(7, 3), make_rational(1, 3), ScalarOp::Sub) == Rational(2));
  CHECK(scalar_arith(make_rational(1, 2), make_rational(3, 4), ScalarOp::Div) ==
        make_rational(2, 3));
  CHECK_THROWS_AS(scalar_arith(Rational(1), Rational(0), ScalarOp::Div), DivisionByZero);
  CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);

  // results stay in lowest terms with positive denominators
  const Rational q = scalar_arith(make_rational(1, 6), make_rational(1, 6), ScalarOp::Add);
  CHECK(q.get_num() == 1);
  CHECK(q.get_den() == 3);
  const Rational n = make_rational(3, -6);
  CHECK(n.get_den() > 0);
  CHECK(n == make_rational(-1, 2));
}

TEST_CASE("field axioms hold exactly on random triples") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Rational a = testing::random_rational(rng);
    const Rational b = testing::random_rational(rng);
    const Rational c = testing::random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("5/3") == make_rational(5, 3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("2/4") == make_rational(1, 2));
  CHECK(parse_rational("0") == 0);
  CHECK(format_rational(make_rational(-3, 9)) == "-1/3");
  CHECK(format_rational(Rational(4)) == "4");

  for (const char* bad : {"", "1/0", "abc", "1.5", "1/-2", "--1", "1/", "/2", "1 / 2"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);

  // format -> parse is the identity on random values
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Rational q = testing::random_rational(rng, 40);
    CHECK(parse_rational(format_rational(q)) == q);
  }
}
