#include "contactalg/symplectic.hpp"

#include <algorithm>
#include <stdexcept>

namespace contactalg {

namespace {

void require_model_space(const SymplecticModel& model, const Multivector& X) {
  if (X.dim() != model.dim())
    throw structural_error("element dimension does not match the model");
  if (X.is_dual()) throw structural_error("expected a vector-side element");
}

}  // namespace

Multivector omega(const SymplecticModel& model) {
  Multivector out(model.dim(), 2, true);
  for (int i = 1; i <= model.n; ++i)
    out.add_term(IndexSet::of({2 * i - 1, 2 * i}), 1);
  return out;
}

Multivector dual_bivector(const SymplecticModel& model) {
  Multivector out(model.dim(), 2, false);
  for (int i = 1; i <= model.n; ++i)
    out.add_term(IndexSet::of({2 * i - 1, 2 * i}), 1);
  return out;
}

Multivector lefschetz_raise(const SymplecticModel& model,
                            const Multivector& X) {
  require_model_space(model, X);
  return wedge(X, dual_bivector(model));
}

Multivector lefschetz_lower(const SymplecticModel& model,
                            const Multivector& X) {
  require_model_space(model, X);
  if (X.degree() < 2) return Multivector(X.dim(), 0, false);
  return contract(omega(model), X);
}

bool is_primitive(const SymplecticModel& model, const Multivector& X) {
  return lefschetz_lower(model, X).is_zero();
}

Rational extraction_constant(int n, int k, int r) {
  Rational c(factorial(r));
  return c * rising_product(Rational(n - k + r + 1), r);
}

LefschetzComponents lefschetz_decompose(const SymplecticModel& model,
                                        const Multivector& X) {
  require_model_space(model, X);
  const int k = X.degree();
  if (k > model.dim()) throw structural_error("degree exceeds the dimension");
  const int r_min = std::max(0, k - model.n);
  const int r_max = k / 2;

  LefschetzComponents out;
  out.degree = k;
  Multivector rest = X;
  std::vector<std::pair<int, Multivector>> reversed;
  for (int r = r_max; r >= r_min; --r) {
    Multivector lowered = rest;
    for (int s = 0; s < r; ++s) lowered = lefschetz_lower(model, lowered);
    Rational c = extraction_constant(model.n, k, r);
    Multivector part = lowered.scaled(1 / c);
    if (part.is_zero()) continue;
    Multivector image = part;
    for (int s = 0; s < r; ++s) image = lefschetz_raise(model, image);
    rest -= image;
    reversed.emplace_back(r, std::move(part));
  }
  if (!rest.is_zero())
    throw std::logic_error("lefschetz_decompose: nonzero remainder");
  out.parts.assign(reversed.rbegin(), reversed.rend());
  return out;
}

Multivector reassemble(const SymplecticModel& model,
                       const LefschetzComponents& parts) {
  Multivector out(model.dim(), parts.degree, false);
  for (const auto& [r, part] : parts.parts) {
    Multivector image = part;
    for (int s = 0; s < r; ++s) image = lefschetz_raise(model, image);
    out += image;
  }
  return out;
}

Multivector flat(const SymplecticModel& model, const Multivector& X) {
  require_model_space(model, X);
  return apply_factorwise(
      X, model.dim(), true, [](int i) -> std::optional<std::pair<int, Rational>> {
        if (i % 2 == 1) return std::make_pair(i + 1, Rational(1));
        return std::make_pair(i - 1, Rational(-1));
      });
}

Multivector sharp(const SymplecticModel& model, const Multivector& form) {
  if (form.dim() != model.dim())
    throw structural_error("element dimension does not match the model");
  if (!form.is_dual()) throw structural_error("expected a form-side element");
  return apply_factorwise(
      form, model.dim(), false,
      [](int i) -> std::optional<std::pair<int, Rational>> {
        if (i % 2 == 0) return std::make_pair(i - 1, Rational(1));
        return std::make_pair(i + 1, Rational(-1));
      });
}

}  // namespace contactalg
