#include <doctest.h>

#include "contactalg/symplectic.hpp"
#include "contactalg/verify.hpp"

using namespace contactalg;

namespace {

Multivector e(int dim, std::initializer_list<int> idx) {
  return Multivector::monomial(dim, IndexSet::of(idx), 1);
}

}  // namespace

TEST_CASE("standard form and its dual bivector") {
  const SymplecticModel m2(2);
  CHECK(omega(m2) == parse_multivector("1*e*{1,2} + 1*e*{3,4}", 4, true));
  CHECK(dual_bivector(m2) == parse_multivector("1*e{1,2} + 1*e{3,4}", 4));

  for (int n = 1; n <= 4; ++n) {
    const SymplecticModel model(n);
    // Pairing of the form with its bivector gives the half-dimension.
    CHECK(lefschetz_lower(model, dual_bivector(model)) ==
          Multivector::scalar(2 * n, n));
    // The multiplicative flat map sends the bivector to the form.
    CHECK(flat(model, dual_bivector(model)) == omega(model));
  }
}

TEST_CASE("raising operator") {
  const SymplecticModel m2(2);
  CHECK(lefschetz_raise(m2, e(4, {1})) == e(4, {1, 3, 4}));

  const SymplecticModel m1(1);
  CHECK(lefschetz_raise(m1, Multivector::scalar(2, 1)) == dual_bivector(m1));
  CHECK(lefschetz_raise(m1, e(2, {1, 2})).is_zero());
}

TEST_CASE("lowering operator") {
  const SymplecticModel m2(2);
  CHECK(lefschetz_lower(m2, e(4, {1, 2})) == Multivector::scalar(4, 1));
  CHECK(lefschetz_lower(m2, e(4, {1, 3})).is_zero());
  CHECK(lefschetz_lower(m2, e(4, {1})).is_zero());
  CHECK(lefschetz_lower(m2, Multivector::scalar(4, 5)).is_zero());
}

TEST_CASE("primitivity") {
  const SymplecticModel m2(2);
  CHECK(is_primitive(m2, e(4, {1})));
  CHECK(!is_primitive(m2, dual_bivector(m2)));
  CHECK(is_primitive(
      m2, e(4, {1, 2}) - dual_bivector(m2).scaled(make_rational(1, 2))));
}

TEST_CASE("decomposition of a basis bivector") {
  const SymplecticModel m2(2);
  const LefschetzComponents parts = lefschetz_decompose(m2, e(4, {1, 2}));
  REQUIRE(parts.parts.size() == 2);
  CHECK(parts.parts[0].first == 0);
  CHECK(parts.parts[0].second ==
        e(4, {1, 2}) - dual_bivector(m2).scaled(make_rational(1, 2)));
  CHECK(parts.parts[1].first == 1);
  CHECK(parts.parts[1].second == Multivector::scalar(4, make_rational(1, 2)));
  CHECK(reassemble(m2, parts) == e(4, {1, 2}));
}

TEST_CASE("decomposition fixes primitive elements") {
  const SymplecticModel m2(2);
  const Multivector X = e(4, {1, 3});
  REQUIRE(is_primitive(m2, X));
  const LefschetzComponents parts = lefschetz_decompose(m2, X);
  REQUIRE(parts.parts.size() == 1);
  CHECK(parts.parts[0].first == 0);
  CHECK(parts.parts[0].second == X);
}

TEST_CASE("decomposition at the top of the range") {
  const SymplecticModel m1(1);
  const LefschetzComponents parts = lefschetz_decompose(m1, e(2, {1, 2}));
  REQUIRE(parts.parts.size() == 1);
  CHECK(parts.parts[0].first == 1);
  CHECK(parts.parts[0].second == Multivector::scalar(2, 1));
}

TEST_CASE("commutator identity on every basis vector") {
  const SuiteReport report = run_commutator_suite(3);
  CHECK(report.passed());
  CHECK(report.checks > 0);
}

TEST_CASE("iterated commutator and primitive power rules") {
  const SuiteReport report = run_s2eq3_suite(3, kDefaultSeed, 40);
  CHECK(report.passed());
}

TEST_CASE("decomposition agrees with the dense oracle") {
  const SuiteReport report = check_lefschetz_oracle(2);
  CHECK(report.passed());
}

TEST_CASE("musical maps on basis directions") {
  const SymplecticModel m1(1);
  CHECK(flat(m1, e(2, {1})) == Multivector::monomial(2, IndexSet::of({2}), 1, true));
  CHECK(flat(m1, e(2, {2})) == Multivector::monomial(2, IndexSet::of({1}), -1, true));
  CHECK(flat(m1, e(2, {1, 2})) ==
        Multivector::monomial(2, IndexSet::of({1, 2}), 1, true));
}

TEST_CASE("flat and sharp invert each other on every basis monomial") {
  for (int n = 1; n <= 3; ++n) {
    const SymplecticModel model(n);
    for (int k = 0; k <= 2 * n; ++k) {
      for (IndexSet s : degree_basis(2 * n, k)) {
        const Multivector X = Multivector::monomial(2 * n, s, 1);
        const Multivector form = flat(model, X);
        CHECK(form.degree() == k);
        CHECK(form.is_dual());
        CHECK(sharp(model, form) == X);
        const Multivector covector = Multivector::monomial(2 * n, s, 1, true);
        CHECK(flat(model, sharp(model, covector)) == covector);
      }
    }
  }
}
