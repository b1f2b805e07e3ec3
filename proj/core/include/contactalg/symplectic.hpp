#pragma once

#include <utility>
#include <vector>

#include "contactalg/multivector.hpp"

namespace contactalg {

// The standard symplectic space of dimension 2n: the 2-form
// omega = e1* ^ e2* + ... + e_{2n-1}* ^ e_{2n} * and the 2-vector
// w0 = e1 ^ e2 + ... + e_{2n-1} ^ e_{2n} dual to it.
struct SymplecticModel {
  int n;

  explicit SymplecticModel(int half_dim) : n(half_dim) {
    if (n < 1) throw structural_error("symplectic model needs n >= 1");
  }
  int dim() const { return 2 * n; }
};

Multivector omega(const SymplecticModel& model);
Multivector dual_bivector(const SymplecticModel& model);  // w0

// Raising operator: X ^ w0 (degree k -> k+2).
Multivector lefschetz_raise(const SymplecticModel& model, const Multivector& X);

// Lowering operator: contraction of X by omega (degree k -> k-2);
// degrees 0 and 1 map to the zero element of degree 0.
Multivector lefschetz_lower(const SymplecticModel& model, const Multivector& X);

bool is_primitive(const SymplecticModel& model, const Multivector& X);

// X = sum_r raise^r(component r) with every component primitive;
// r runs over max(0, k-n) .. floor(k/2).
struct LefschetzComponents {
  int degree = 0;
  std::vector<std::pair<int, Multivector>> parts;  // (r, X_r), ascending r
};

LefschetzComponents lefschetz_decompose(const SymplecticModel& model,
                                        const Multivector& X);
Multivector reassemble(const SymplecticModel& model,
                       const LefschetzComponents& parts);

// r! * (n-k+r+1)(n-k+r+2)...(n-k+2r): the factor by which lower^r followed by
// raise^r scales a primitive element of degree k-2r. Nonzero over the
// component range of degree k.
Rational extraction_constant(int n, int k, int r);

// Musical isomorphisms for the standard form: flat maps e_{2i-1} to e_{2i}*
// and e_{2i} to -e_{2i-1}*, extended multiplicatively over monomial factors;
// sharp is its inverse. flat(w0) = omega.
Multivector flat(const SymplecticModel& model, const Multivector& X);
Multivector sharp(const SymplecticModel& model, const Multivector& form);

}  // namespace contactalg
