#include <doctest.h>

#include "contactalg/poly.hpp"

using namespace contactalg;

TEST_CASE("polynomial ring arithmetic") {
  const Poly z1 = Poly::variable(1);
  const Poly z2 = Poly::variable(2);

  const Poly sum_sq = (z1 + z2) * (z1 + z2);
  const Poly expanded =
      Poly::variable(1, 2) + z1 * z2 * Rational(2) + Poly::variable(2, 2);
  CHECK(sum_sq == expanded);

  CHECK((z1 - z1).is_zero());
  CHECK((z1 * Poly(0)).is_zero());
  CHECK(Poly(make_rational(2, 4)) == Poly(make_rational(1, 2)));
  CHECK((z1 * z2) * z1 == z1 * (z2 * z1));

  Poly p = z1;
  p += p;
  CHECK(p == z1 * Rational(2));
}

TEST_CASE("constants and degrees") {
  CHECK(Poly(3).is_constant());
  CHECK(Poly(3).constant_value() == 3);
  CHECK(Poly(0).is_zero());
  CHECK(Poly(0).total_degree() == -1);
  CHECK(Poly::variable(0).total_degree() == 1);
  CHECK((Poly::variable(0, 2) * Poly::variable(3)).total_degree() == 3);
  CHECK_THROWS_AS(Poly::variable(1).constant_value(), structural_error);
}

TEST_CASE("derivatives") {
  const Poly p = Poly::variable(1, 2) * Poly::variable(2);  // z1^2 z2
  CHECK(p.derivative(1) == Poly::variable(1) * Poly::variable(2) * Rational(2));
  CHECK(p.derivative(2) == Poly::variable(1, 2));
  CHECK(p.derivative(0).is_zero());
  CHECK(Poly(7).derivative(3).is_zero());

  // d/dz distributes over products (Leibniz) on a sample.
  const Poly a = Poly::variable(0) + Poly::variable(1, 2);
  const Poly b = Poly::variable(1) - Poly(2);
  CHECK((a * b).derivative(1) ==
        a.derivative(1) * b + a * b.derivative(1));
}

TEST_CASE("printing") {
  CHECK(to_string(Poly(0)) == "0");
  CHECK(to_string(Poly(make_rational(-3, 2))) == "(-3/2)");
  const Poly p = Poly::variable(1, 2) * Poly::variable(3) * make_rational(1, 2);
  CHECK(to_string(p) == "(1/2)*z1^2*z3");
}
