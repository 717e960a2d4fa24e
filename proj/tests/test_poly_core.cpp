#include <doctest.h>

#include <hkit/laurent.hpp>
#include <hkit/polynomial.hpp>

#include <random>

#include "oracles.hpp"

using namespace hkit;

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(7);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_rational(mpq_class(1, 2)) == 4);
  for (long a = 1; a < 7; ++a) {
    CHECK(f.mul(f.from_int(a), f.inv(f.from_int(a))) == 1);
    CHECK(f.pow(f.from_int(a), 6) == 1);  // Fermat
  }
  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
  CHECK_THROWS(f.from_rational(mpq_class(1, 7)));
  CHECK(Field::rationals().characteristic() == 0);
  CHECK(f.name() == "GF(7)");
}

TEST_CASE("monomial orders are multiplicative total orders") {
  std::mt19937_64 rng(11);
  for (auto order : {MonomialOrder::DegRevLex, MonomialOrder::Lex}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto a = oracle::random_monomial(4, 4, rng), b = oracle::random_monomial(4, 4, rng),
           c = oracle::random_monomial(4, 4, rng);
      int ab = compare(a, b, order);
      CHECK(ab == -compare(b, a, order));
      CHECK((ab == 0) == (a == b));
      CHECK(compare(a * c, b * c, order) == ab);
      CHECK(compare(a, Monomial(4), order) > 0);
      if (ab < 0 && compare(b, c, order) < 0) CHECK(compare(a, c, order) < 0);
    }
  }
  // x y^2 z^0 versus x^2 z: degrevlex looks at the last variable first
  Monomial p{1, 2, 0}, q{2, 0, 1};
  CHECK(compare(p, q, MonomialOrder::DegRevLex) > 0);
  CHECK(compare(p, q, MonomialOrder::Lex) < 0);
}

TEST_CASE("monomial lcm, gcd and colon") {
  Monomial a{3, 1, 0}, b{1, 2, 2};
  CHECK(lcm(a, b) == Monomial{3, 2, 2});
  CHECK(gcd(a, b) == Monomial{1, 1, 0});
  CHECK(colon(a, b) == Monomial{2, 0, 0});
  CHECK(gcd(a, b) * lcm(a, b) == a * b);
  CHECK(Monomial{1, 0, 0}.coprime(Monomial{0, 4, 1}));
}

TEST_CASE("polynomial ring axioms on random elements") {
  for (auto field : {Field::rationals(), Field::prime(5)}) {
    Ring r = make_ring(field, 3);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      auto f = oracle::random_form(r, 2, 4, rng), g = oracle::random_form(r, 1, 3, rng),
           h = oracle::random_form(r, 3, 3, rng);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f - f).is_zero());
      CHECK((f * g).is_homogeneous());
      if (!f.is_zero() && !g.is_zero()) CHECK(*(f * g).homogeneity().degree == 3);
      CHECK(g.pow(3) == g * g * g);
    }
  }
}

TEST_CASE("polynomials from different rings do not mix") {
  Ring a = make_ring(Field::rationals(), 2), b = make_ring(Field::prime(3), 2);
  CHECK_THROWS_AS(Polynomial::variable(a, 0) + Polynomial::variable(b, 0), ContextMismatch);
  Ring c = make_ring(Field::rationals(), 2);
  CHECK_NOTHROW(Polynomial::variable(a, 0) * Polynomial::variable(c, 1));
}

TEST_CASE("non-homogeneous detection") {
  Ring r = make_ring(Field::rationals(), {"x", "y"});
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  CHECK_FALSE((x * x + y).is_homogeneous());
  CHECK(Polynomial(r).homogeneity().homogeneous);
  CHECK_FALSE(Polynomial(r).homogeneity().degree.has_value());
  CHECK((x * x - x * y).to_string() == "x^2 - x*y");
}

TEST_CASE("ring validation") {
  CHECK_THROWS(make_ring(Field::rationals(), std::vector<std::string>{}));
  CHECK_THROWS(make_ring(Field::rationals(), {"x", "x"}));
  CHECK_THROWS(make_ring(Field::rationals(), kMaxVariables + 1));
}

TEST_CASE("Laurent polynomials") {
  auto t = LaurentPoly::monomial(1);
  auto p = LaurentPoly::one() + t + t * t - t * t * t;
  CHECK(p.at_one() == 2);
  CHECK(p.inverted() == LaurentPoly(-3, {-1, 1, 1, 1}));
  CHECK(LaurentPoly::one_minus_t_pow(3) == LaurentPoly(0, {1, -3, 3, -1}));
  auto q = p * LaurentPoly::one_minus_t_pow(2);
  CHECK(q.divide_one_minus_t().divide_one_minus_t() == p);
  CHECK_THROWS(p.divide_one_minus_t());
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(3, -1) == 0);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
}
