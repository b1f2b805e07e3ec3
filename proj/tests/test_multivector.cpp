#include <doctest.h>

#include "contactalg/multivector.hpp"
#include "contactalg/verify.hpp"

using namespace contactalg;

namespace {

Multivector e(int dim, std::initializer_list<int> idx) {
  return Multivector::monomial(dim, IndexSet::of(idx), 1);
}

Multivector estar(int dim, std::initializer_list<int> idx) {
  return Multivector::monomial(dim, IndexSet::of(idx), 1, true);
}

}  // namespace

TEST_CASE("wedge on basis monomials") {
  CHECK(wedge(e(4, {1}), e(4, {2})) == e(4, {1, 2}));
  CHECK(wedge(e(4, {2}), e(4, {1})) == -e(4, {1, 2}));
  CHECK(wedge(e(4, {1}), e(4, {1})).is_zero());
  CHECK(wedge(e(4, {1, 3}), e(4, {2, 4})) == -e(4, {1, 2, 3, 4}));
}

TEST_CASE("wedge is bilinear and graded-anticommutative") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = static_cast<int>(rng.range(2, 6));
    const int p = static_cast<int>(rng.range(0, dim));
    const int q = static_cast<int>(rng.range(0, dim));
    const Multivector a = random_multivector(rng, dim, p);
    const Multivector b = random_multivector(rng, dim, q);
    const Multivector ab = wedge(a, b);
    Multivector ba = wedge(b, a);
    if ((p * q) % 2 == 1) ba = -ba;
    CHECK(ab == ba);

    const Multivector c = random_multivector(rng, dim, q);
    CHECK(wedge(a, b + c) == wedge(a, b) + wedge(a, c));
  }
}

TEST_CASE("wedge is associative on all basis monomial triples") {
  const int dim = 6;
  std::vector<IndexSet> all;
  for (std::uint64_t m = 0; m < (1ull << dim); ++m) all.emplace_back(m);
  for (IndexSet sa : all) {
    const Multivector a = Multivector::monomial(dim, sa, 1);
    for (IndexSet sb : all) {
      const Multivector b = Multivector::monomial(dim, sb, 1);
      const Multivector ab = wedge(a, b);
      for (IndexSet sc : all) {
        const Multivector c = Multivector::monomial(dim, sc, 1);
        CHECK(wedge(ab, c) == wedge(a, wedge(b, c)));
      }
    }
  }
}

TEST_CASE("contraction by a basis covector") {
  CHECK(contract(estar(4, {1}), e(4, {1, 2})) == e(4, {2}));
  CHECK(contract(estar(4, {1}), wedge(e(4, {2}), e(4, {1}))) == -e(4, {2}));
  CHECK(contract(estar(4, {3}), e(4, {1, 2})).is_zero());
}

TEST_CASE("contracting twice by the same one-form vanishes") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = static_cast<int>(rng.range(2, 6));
    const int k = static_cast<int>(rng.range(2, dim));
    const Multivector X = random_multivector(rng, dim, k);
    Multivector theta(dim, 1, true);
    for (int i = 1; i <= dim; ++i)
      if (rng.below(2) == 0) theta.add_term(IndexSet::of({i}), random_rational(rng));
    CHECK(contract(theta, contract(theta, X)).is_zero());
  }
}

TEST_CASE("contraction by a form composes the one-form contractions") {
  CHECK(contract(estar(4, {1, 2}), e(4, {1, 2})) ==
        Multivector::scalar(4, 1));
  CHECK(contract(estar(4, {1, 2}), e(4, {1, 3, 4})).is_zero());

  // Low-index covector acts first.
  const int dim = 8;
  SplitMix64 rng(37);
  for (int trial = 0; trial < 6; ++trial) {
    Multivector theta1(dim, 1, true);
    Multivector theta2(dim, 1, true);
    for (int i = 1; i <= dim; ++i) {
      if (rng.below(2) == 0) theta1.add_term(IndexSet::of({i}), random_rational(rng));
      if (rng.below(2) == 0) theta2.add_term(IndexSet::of({i}), random_rational(rng));
    }
    const Multivector phi = wedge(theta1, theta2);
    for (std::uint64_t m = 0; m < (1ull << dim); ++m) {
      if (std::popcount(m) < 2) continue;
      const Multivector X = Multivector::monomial(dim, IndexSet(m), 1);
      CHECK(contract(phi, X) == contract(theta2, contract(theta1, X)));
    }
  }
}

TEST_CASE("full contraction is the canonical pairing") {
  const int dim = 6;
  for (int k = 0; k <= dim; ++k) {
    for (IndexSet s : degree_basis(dim, k)) {
      for (IndexSet t : degree_basis(dim, k)) {
        const Multivector value = contract(
            Multivector::monomial(dim, s, 1, true),
            Multivector::monomial(dim, t, 1));
        if (s == t) {
          CHECK(value == Multivector::scalar(dim, 1));
        } else {
          CHECK(value.is_zero());
        }
      }
    }
  }
}

TEST_CASE("single-index agreement between the two contraction paths") {
  const int dim = 8;
  for (int idx = 1; idx <= dim; ++idx) {
    for (std::uint64_t m = 1; m < (1ull << dim); ++m) {
      const Multivector X = Multivector::monomial(dim, IndexSet(m), 1);
      CHECK(contract(estar(dim, {idx}), X) == contract_index(idx, X));
    }
  }
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(wedge(e(4, {1}), e(5, {1})), structural_error);
  CHECK_THROWS_AS(wedge(e(4, {1}), estar(4, {1})), structural_error);
  CHECK_THROWS_AS(contract(estar(4, {1, 2}), e(4, {1})), structural_error);
  CHECK_THROWS_AS(contract(e(4, {1}), e(4, {1, 2})), structural_error);
  CHECK_THROWS_AS(e(4, {1}) + e(4, {1, 2}), structural_error);
  CHECK_THROWS_AS(Multivector::monomial(3, IndexSet::of({4}), 1),
                  structural_error);
}

TEST_CASE("serialization round-trips exactly") {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = static_cast<int>(rng.range(1, 6));
    const int k = static_cast<int>(rng.range(0, dim));
    const bool dual = rng.below(2) == 0;
    Multivector X(dim, k, dual);
    for (IndexSet s : degree_basis(dim, k))
      if (rng.below(2) == 0) X.add_term(s, random_rational(rng));
    const Multivector back = parse_multivector(to_string(X), dim, dual, k);
    CHECK(back == X);
  }
}

TEST_CASE("serialization fixed points") {
  CHECK(to_string(e(4, {1, 2}) - e(4, {3, 4}).scaled(make_rational(1, 2))) ==
        "1*e{1,2} - 1/2*e{3,4}");
  CHECK(to_string(Multivector(4, 2)) == "0");
  CHECK(to_string(Multivector::scalar(4, make_rational(-3, 2))) == "-3/2");
  CHECK(to_string(estar(4, {1, 3})) == "1*e*{1,3}");

  CHECK(parse_multivector("e{1,2}", 4) == e(4, {1, 2}));
  CHECK(parse_multivector("-1/2*e{1,2} + e{1,3}", 4) ==
        e(4, {1, 3}) - e(4, {1, 2}).scaled(make_rational(1, 2)));
  CHECK(parse_multivector("0", 4, false, 2) == Multivector(4, 2));
  CHECK(parse_multivector("7/3", 4) ==
        Multivector::scalar(4, make_rational(7, 3)));
  CHECK_THROWS_AS(parse_multivector("1*e{1,2} + 1*e{3}", 4), structural_error);
  CHECK_THROWS_AS(parse_multivector("1*e{9}", 4), structural_error);
  CHECK_THROWS_AS(parse_multivector("1*e*{1}", 4, false), structural_error);
  CHECK_THROWS_AS(parse_multivector("garbage", 4), structural_error);
}
