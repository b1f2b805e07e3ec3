#include "contactalg/contact.hpp"

namespace contactalg {

Multivector gamma_contract(const ContactSpace& space, const Multivector& X) {
  if (X.dim() != space.dim() || X.is_dual())
    throw structural_error("expected a vector-side element of the full space");
  if (X.degree() < 1 || X.degree() > space.dim())
    throw structural_error("degree outside 1..2n+1");
  return contract_index(space.reeb_index(), X).with_dim(2 * space.n);
}

Multivector lift(const ContactSpace& space, const Multivector& s) {
  if (s.is_dual()) throw structural_error("expected a vector-side element");
  Multivector embedded(space.dim(), s.degree(), false);
  if (s.dim() == 2 * space.n) {
    embedded = s.with_dim(space.dim());
  } else if (s.dim() == space.dim()) {
    for (const auto& [t, c] : s.terms())
      if (t.contains(space.reeb_index()))
        throw structural_error("section touches the distinguished direction");
    embedded = s;
  } else {
    throw structural_error("section dimension does not match the space");
  }
  return wedge(Multivector::basis_element(space.dim(), space.reeb_index()),
               embedded);
}

ExactnessDims exactness_dims(const ContactSpace& space, int k) {
  if (k < 0 || k > space.dim()) throw structural_error("degree outside 0..2n+1");
  ExactnessDims dims;
  dims.kernel = binomial(2 * space.n, k).get_si();
  dims.total = binomial(2 * space.n + 1, k).get_si();
  dims.image = binomial(2 * space.n, k - 1).get_si();
  return dims;
}

}  // namespace contactalg
