#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "contactalg/rational.hpp"

namespace contactalg {

// Sparse multivariate polynomial over Rational in variables z0, z1, ...
// Monomial keys are exponent vectors with trailing zeros stripped, so the
// representation of every value is canonical and equality is exact.
class Poly {
 public:
  using Monomial = std::vector<unsigned>;

  Poly() = default;
  Poly(const Rational& constant) {  // NOLINT: implicit by design
    if (!contactalg::is_zero(constant)) terms_.emplace(Monomial{}, constant);
  }
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT

  static Poly variable(int index, unsigned exponent = 1) {
    if (index < 0) throw structural_error("negative variable index");
    if (exponent == 0) return Poly(1);
    Monomial m(static_cast<std::size_t>(index) + 1, 0);
    m.back() = exponent;
    Poly p;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rational constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw structural_error("polynomial is not constant");
    return terms_.begin()->second;
  }

  long total_degree() const {  // -1 for the zero polynomial
    long best = -1;
    for (const auto& [m, c] : terms_) {
      long d = 0;
      for (unsigned e : m) d += e;
      best = std::max(best, d);
    }
    return best;
  }

  void add_term(Monomial m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& s) { return a * Poly(s); }
  friend Poly operator*(const Rational& s, const Poly& a) { return a * Poly(s); }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  Poly derivative(int variable) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

// `(p/q)*z0^a*z3` with factors in variable order; `(p/q)` alone for constant
// terms; terms joined by ` + `; `0` for the zero polynomial.
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace contactalg
