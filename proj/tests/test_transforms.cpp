#include <doctest.h>

#include "contactalg/transforms.hpp"
#include "contactalg/verify.hpp"

using namespace contactalg;

namespace {

Multivector e(int dim, std::initializer_list<int> idx) {
  return Multivector::monomial(dim, IndexSet::of(idx), 1);
}

}  // namespace

TEST_CASE("coefficient values") {
  CHECK(coefficient(CoefficientFamily::defaults(2, 2), 0) == 1);
  CHECK(coefficient(CoefficientFamily::defaults(2, 2), 1) == make_rational(1, 2));

  const CoefficientFamily twisted{FamilyKind::kTwisted, 2, 3, -4};
  CHECK(coefficient(twisted, 0) == 1);
  CHECK(coefficient(twisted, 1) == -1);  // 1/((3-4) * 1!)

  const CoefficientFamily half{FamilyKind::kHalfTwisted, 1, 1, -1};
  CHECK(coefficient(half, 0) == 1);

  const CoefficientFamily prime{FamilyKind::kTwistedPrime, 2, 3, -4};
  CHECK(coefficient(prime, 0) == -1);               // 1/(k+m)
  CHECK(coefficient(prime, 1) == make_rational(1, 2));  // 1/((-1)(-2) 1!)
}

TEST_CASE("well-definedness") {
  CHECK(is_well_defined({FamilyKind::kTwisted, 2, 3, -4}));
  CHECK(!is_well_defined({FamilyKind::kTwisted, 2, 4, -3}));
  CHECK(!is_well_defined({FamilyKind::kTwisted, 2, 2, -2}));  // k+m = 0
  CHECK(is_well_defined({FamilyKind::kTwisted, 2, 2, -1}));
  for (long m = -9; m <= 9; m += 2)
    for (int k = 1; k <= 6; ++k) {
      CHECK(is_well_defined({FamilyKind::kHalfTwisted, 2, k, m}));
      CHECK(is_well_defined({FamilyKind::kHalfTwistedPrime, 2, k, m}));
    }
  CHECK(is_well_defined({FamilyKind::kHalfTwisted, 2, 3, -4}));   // k+m/2 = 1
  CHECK(!is_well_defined({FamilyKind::kHalfTwisted, 2, 3, -6}));  // k+m/2 = 0
  CHECK_THROWS_AS(coefficient({FamilyKind::kTwisted, 2, 4, -3}, 1),
                  structural_error);
  CHECK_THROWS_AS(coefficient(CoefficientFamily::defaults(2, 2), 2),
                  structural_error);
}

TEST_CASE("transformation on explicit elements") {
  const SymplecticModel m2(2);
  const Multivector w0 = dual_bivector(m2);
  CHECK(apply_transform(CoefficientFamily::defaults(2, 2), m2, w0) ==
        w0.scaled(2));

  // Families with unit leading coefficient fix primitive elements.
  CHECK(apply_transform(CoefficientFamily::defaults(2, 1), m2, e(4, {1})) ==
        e(4, {1}));
  const Multivector primitive =
      e(4, {1, 2}) - w0.scaled(make_rational(1, 2));
  CHECK(apply_transform(CoefficientFamily::defaults(2, 2), m2, primitive) ==
        primitive);

  const CoefficientFamily twisted{FamilyKind::kTwisted, 2, 2, -1};
  CHECK(apply_transform(twisted, m2, w0) == w0.scaled(3));
}

TEST_CASE("eigenvalue tables") {
  const EigenvalueTable table =
      eigenvalue_table(CoefficientFamily::defaults(2, 2));
  CHECK(table.r_min == 0);
  CHECK(table.r_max() == 1);
  CHECK(table.at(0) == 1);
  CHECK(table.at(1) == 2);

  const CoefficientFamily twisted{FamilyKind::kTwisted, 2, 2, -1};
  const EigenvalueTable twisted_table = eigenvalue_table(twisted);
  CHECK(twisted_table.at(0) == 1);
  CHECK(twisted_table.at(1) == 3);
  CHECK(closed_form_eigenvalue(2, 2, 1, Rational(-1)) == 3);

  // r = 0 entry is always the leading coefficient.
  const CoefficientFamily prime{FamilyKind::kTwistedPrime, 3, 3, -5};
  CHECK(eigenvalue_table(prime).at(0) == coefficient(prime, 0));
}

TEST_CASE("invertibility criterion") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 2 * n; ++k)
      CHECK(is_invertible(CoefficientFamily::defaults(n, k)));

  // c1 = -1/(n-k+2) forces the r = 1 eigenvalue to vanish when k = 2 <= n.
  const int n = 3, k = 2;
  const std::vector<Rational> cs{1, Rational(-1) / Rational(n - k + 2)};
  CHECK(!is_invertible(n, k, cs));

  CHECK(is_invertible({FamilyKind::kTwisted, 2, 2, -6}));   // row 1 regime
  CHECK(is_invertible({FamilyKind::kTwisted, 2, 2, -3}));   // row 2 regime
  CHECK(is_invertible({FamilyKind::kTwisted, 2, 2, -1}));   // row 3 regime
}

TEST_CASE("inverse transformation") {
  const SymplecticModel m2(2);
  const Multivector w0 = dual_bivector(m2);
  const CoefficientFamily family = CoefficientFamily::defaults(2, 2);
  CHECK(invert_transform(family, m2, w0.scaled(2)) == w0);
  CHECK(invert_transform(family, m2, e(4, {1, 3})) == e(4, {1, 3}));

  SplitMix64 rng(77);
  for (int n = 1; n <= 3; ++n) {
    const SymplecticModel model(n);
    for (int k = 0; k <= 2 * n; ++k) {
      const CoefficientFamily fam = CoefficientFamily::defaults(n, k);
      for (int trial = 0; trial < 10; ++trial) {
        const Multivector X = random_multivector(rng, 2 * n, k);
        CHECK(invert_transform(fam, model, apply_transform(fam, model, X)) == X);
        CHECK(apply_transform(fam, model, invert_transform(fam, model, X)) == X);
      }
    }
  }

  const std::vector<Rational> degenerate{1, Rational(-1) / Rational(3)};
  CHECK_THROWS_AS(invert_transform(m2, degenerate, w0), structural_error);
}

TEST_CASE("invertibility matches dense nonsingularity") {
  const SuiteReport report = run_prop22_suite(2, kDefaultSeed, 15, 5);
  CHECK(report.passed());
  CHECK(report.checks > 0);
}

TEST_CASE("weighted flat map on explicit elements") {
  const SymplecticModel m1(1);
  CHECK(flat_transform(CoefficientFamily::defaults(1, 1), m1, e(2, {1})) ==
        Multivector::monomial(2, IndexSet::of({2}), 1, true));

  const SymplecticModel m2(2);
  CHECK(flat_transform(CoefficientFamily::defaults(2, 2), m2,
                       dual_bivector(m2)) == omega(m2).scaled(2));
}

TEST_CASE("weighted flat map against the wedge-power route") {
  // Independent route: contract by the i-th wedge power of the form, wedge
  // with the i-th power of the bivector, then flat once at the end.
  for (int n = 1; n <= 3; ++n) {
    const SymplecticModel model(n);
    const Multivector om = omega(model);
    const Multivector w0 = dual_bivector(model);
    for (int k = 1; k <= 2 * n; ++k) {
      const CoefficientFamily family = CoefficientFamily::defaults(n, k);
      std::vector<Multivector> om_powers{Multivector::scalar(2 * n, 1, true)};
      std::vector<Multivector> w0_powers{Multivector::scalar(2 * n, 1)};
      for (int i = 1; i <= k / 2; ++i) {
        om_powers.push_back(wedge(om_powers.back(), om));
        w0_powers.push_back(wedge(w0_powers.back(), w0));
      }
      for (IndexSet s : degree_basis(2 * n, k)) {
        const Multivector X = Multivector::monomial(2 * n, s, 1);
        Multivector inner(2 * n, k, false);
        for (int i = 0; i <= k / 2; ++i) {
          const Multivector lowered =
              i == 0 ? X : contract(om_powers[static_cast<std::size_t>(i)], X);
          inner += wedge(lowered, w0_powers[static_cast<std::size_t>(i)])
                       .scaled(coefficient(family, i));
        }
        CHECK(flat(model, inner) == flat_transform(family, model, X));
      }
    }
  }
}
