#include <doctest.h>

#include "contactalg/contact.hpp"
#include "contactalg/verify.hpp"

using namespace contactalg;

namespace {

Multivector e(int dim, std::initializer_list<int> idx) {
  return Multivector::monomial(dim, IndexSet::of(idx), 1);
}

}  // namespace

TEST_CASE("contraction by the contact covector") {
  const ContactSpace space(1);  // W has dimension 3, R is index 3
  const Multivector R = Multivector::basis_element(3, 3);

  CHECK(gamma_contract(space, wedge(R, e(3, {1}))) == e(2, {1}));
  CHECK(gamma_contract(space, e(3, {1, 2})).is_zero());
  CHECK(gamma_contract(space, wedge(e(3, {1}), R)) == -e(2, {1}));
  CHECK_THROWS_AS(gamma_contract(space, Multivector::scalar(3, 1)),
                  structural_error);
}

TEST_CASE("lift is a right inverse of the contraction") {
  const ContactSpace space(1);
  CHECK(lift(space, e(2, {1})) == e(3, {1, 3}).scaled(-1));  // R ^ e1 = -e{1,3}
  CHECK(gamma_contract(space, lift(space, e(2, {1}))) == e(2, {1}));
  CHECK(lift(space, Multivector::scalar(2, 1)) ==
        Multivector::basis_element(3, 3));

  SplitMix64 rng(91);
  for (int n = 1; n <= 3; ++n) {
    const ContactSpace sp(n);
    for (int k = 0; k <= 2 * n; ++k) {
      for (int trial = 0; trial < 10; ++trial) {
        const Multivector s = random_multivector(rng, 2 * n, k);
        CHECK(gamma_contract(sp, lift(sp, s)) == s);
      }
    }
  }

  CHECK_THROWS_AS(lift(space, e(3, {3})), structural_error);
  CHECK_THROWS_AS(lift(space, e(4, {1})), structural_error);
}

TEST_CASE("kernel is exactly the monomials omitting the distinguished index") {
  for (int n = 1; n <= 4; ++n) {
    const ContactSpace space(n);
    for (int k = 1; k <= space.dim(); ++k) {
      for (IndexSet s : degree_basis(space.dim(), k)) {
        const bool killed =
            gamma_contract(space, Multivector::monomial(space.dim(), s, 1))
                .is_zero();
        CHECK(killed == !s.contains(space.reeb_index()));
      }
    }
  }
}

TEST_CASE("repeated contraction by the covector vanishes") {
  SplitMix64 rng(17);
  for (int n = 1; n <= 3; ++n) {
    const ContactSpace space(n);
    for (int trial = 0; trial < 10; ++trial) {
      const int k = static_cast<int>(rng.range(2, space.dim()));
      const Multivector X = random_multivector(rng, space.dim(), k);
      CHECK(contract_index(space.reeb_index(),
                           contract_index(space.reeb_index(), X))
                .is_zero());
    }
  }
}

TEST_CASE("exact-sequence dimensions") {
  const ContactSpace s1(1);
  ExactnessDims d = exactness_dims(s1, 1);
  CHECK(d.kernel == 2);
  CHECK(d.total == 3);
  CHECK(d.image == 1);

  const ContactSpace s2(2);
  d = exactness_dims(s2, 3);
  CHECK(d.kernel == 4);
  CHECK(d.total == 10);
  CHECK(d.image == 6);

  d = exactness_dims(s2, 0);
  CHECK(d.kernel == 1);
  CHECK(d.total == 1);
  CHECK(d.image == 0);
}

TEST_CASE("ranks match the stated dimensions") {
  const SuiteReport report = check_exactness_ranks(3);
  CHECK(report.passed());
  CHECK(report.checks > 0);
}
