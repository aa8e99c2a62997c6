#include "doctest.h"
#include "liecontract/polynomial.hpp"

using namespace liecontract;

TEST_CASE("parse and render") {
  Polynomial p = Polynomial::parse("e1^2-2e2e3", 4);
  CHECK(p.total_degree() == 2);
  CHECK(p.terms().size() == 2);
  CHECK(Polynomial::parse(p.str(), 4) == p);
  Polynomial q = Polynomial::parse("x1*x1 - 2*x2*x3", 4);
  CHECK(p == q);
  Bindings b = {{'a', CycloNumber(3, 5L)}};
  Polynomial r = Polynomial::parse("2e1e4^2-ae2", 4, b);
  CHECK(r.terms().at({1, 0, 0, 2}) == CycloNumber(3, 2L));
  CHECK(r.terms().at({0, 1, 0, 0}) == CycloNumber(3, -5L));
  CHECK(Polynomial::parse("(1-w)e1 + we2", 2) ==
        Polynomial::variable(2, 0, 3).scaled(CycloNumber::parse("1-w")) +
            Polynomial::variable(2, 1, 3).scaled(CycloNumber::root_power(3, 1)));
  CHECK_THROWS_AS(Polynomial::parse("e5", 4), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("be1", 4), BindingError);
  CHECK_THROWS_AS(Polynomial::parse("e1+", 4), ParseError);
}

TEST_CASE("arithmetic and derivatives") {
  Polynomial x = Polynomial::variable(2, 0, 3), y = Polynomial::variable(2, 1, 3);
  Polynomial p = x * x * y - y;
  CHECK(p.derivative(0) == (x * y).scaled(CycloNumber(3, 2L)));
  CHECK(p.derivative(1) == x * x - Polynomial::constant(2, CycloNumber(3, 1L)));
  CHECK((p - p).is_zero());
  CHECK((x + y).as_linear() == Vec{CycloNumber(3, 1L), CycloNumber(3, 1L)});
  CHECK_FALSE(p.as_linear().has_value());
}
