#pragma once

#include "contactalg/multivector.hpp"

namespace contactalg {

// W = V + <R> of dimension 2n+1: indices 1..2n span the kernel of the contact
// covector, index 2n+1 is the distinguished direction R with gamma(R) = 1.
struct ContactSpace {
  int n;

  explicit ContactSpace(int half_dim) : n(half_dim) {
    if (n < 1) throw structural_error("contact space needs n >= 1");
  }
  int dim() const { return 2 * n + 1; }
  int reeb_index() const { return 2 * n + 1; }
};

// Contraction of a k-vector on W by the contact covector (the alternating
// one-form rule with gamma(R) = 1 and gamma = 0 on V). The kernel is exactly
// the monomials omitting R; the image fills degree k-1 over V.
Multivector gamma_contract(const ContactSpace& space, const Multivector& X);

// R ^ s; a right inverse of gamma_contract. Accepts s over V (dimension 2n)
// or over W with no term touching the distinguished index.
Multivector lift(const ContactSpace& space, const Multivector& s);

struct ExactnessDims {
  long kernel = 0;
  long total = 0;
  long image = 0;
};

// (C(2n,k), C(2n+1,k), C(2n,k-1)); kernel + image = total.
ExactnessDims exactness_dims(const ContactSpace& space, int k);

}  // namespace contactalg
