#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace contactalg {

// Exact rational scalar. GMP keeps values in lowest terms with positive
// denominator under arithmetic; the helpers below canonicalize on entry.
using Rational = mpq_class;
using Integer = mpz_class;

// Violated structural precondition: mismatched dimensions or flags,
// out-of-range indices, malformed input text.
class structural_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw structural_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p" or "p/q" in base 10.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  try {
    q = Rational(text);
  } catch (const std::invalid_argument&) {
    throw structural_error("malformed rational: '" + text + "'");
  }
  if (sgn(q.get_den()) == 0)
    throw structural_error("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return f;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

// start*(start-1)*...*(start-count+1); empty product for count <= 0.
inline Rational falling_product(const Rational& start, int count) {
  Rational p = 1;
  Rational factor = start;
  for (int j = 0; j < count; ++j) {
    p *= factor;
    factor -= 1;
  }
  return p;
}

// start*(start+1)*...*(start+count-1); empty product for count <= 0.
inline Rational rising_product(const Rational& start, int count) {
  Rational p = 1;
  Rational factor = start;
  for (int j = 0; j < count; ++j) {
    p *= factor;
    factor += 1;
  }
  return p;
}

}  // namespace contactalg
