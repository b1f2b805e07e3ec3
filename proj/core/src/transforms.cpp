#include "contactalg/transforms.hpp"

#include <algorithm>

namespace contactalg {

namespace {

bool twisted_kind(FamilyKind kind) {
  return kind == FamilyKind::kTwisted || kind == FamilyKind::kTwistedPrime;
}
bool half_kind(FamilyKind kind) {
  return kind == FamilyKind::kHalfTwisted ||
         kind == FamilyKind::kHalfTwistedPrime;
}
bool primed_kind(FamilyKind kind) {
  return kind == FamilyKind::kTwistedPrime ||
         kind == FamilyKind::kHalfTwistedPrime;
}

void require_well_defined(const CoefficientFamily& family) {
  if (!is_well_defined(family))
    throw structural_error("coefficient family is not well-defined at (k=" +
                           std::to_string(family.k) +
                           ", m=" + std::to_string(family.m) + ")");
}

}  // namespace

Rational twist_of(const CoefficientFamily& family) {
  if (twisted_kind(family.kind)) return Rational(family.m);
  if (half_kind(family.kind)) return make_rational(family.m, 2);
  return 0;
}

int coefficient_count(const CoefficientFamily& family) {
  if (family.k < 0) throw structural_error("negative degree");
  return (primed_kind(family.kind) ? (family.k - 1) / 2 : family.k / 2) + 1;
}

bool is_well_defined(const CoefficientFamily& family) {
  const int k = family.k;
  const long m = family.m;
  switch (family.kind) {
    case FamilyKind::kDefault:
      return true;
    case FamilyKind::kTwisted:
    case FamilyKind::kTwistedPrime:
      return m <= -static_cast<long>(k) - 1 || m >= -static_cast<long>(k / 2);
    case FamilyKind::kHalfTwisted:
    case FamilyKind::kHalfTwistedPrime: {
      if (m % 2 != 0) return true;  // half-integer factors never vanish
      const Rational t = twist_of(family);
      // Denominator factors are k + m/2 - j for j = 0..floor(k/2)-1,
      // or j = 0..floor((k-1)/2) for the primed variant.
      const int last = primed_kind(family.kind) ? (k - 1) / 2 : k / 2 - 1;
      for (int j = 0; j <= last; ++j)
        if (is_zero(Rational(k) + t - j)) return false;
      return true;
    }
  }
  return false;
}

Rational coefficient(const CoefficientFamily& family, int i) {
  require_well_defined(family);
  if (i < 0 || i >= coefficient_count(family))
    throw structural_error("coefficient index out of range");
  const int k = family.k;
  switch (family.kind) {
    case FamilyKind::kDefault:
      return Rational(factorial(k - i)) / Rational(factorial(k) * factorial(i));
    case FamilyKind::kTwisted:
    case FamilyKind::kHalfTwisted: {
      if (i == 0) return 1;
      Rational den = falling_product(Rational(k) + twist_of(family), i) *
                     Rational(factorial(i));
      return 1 / den;
    }
    case FamilyKind::kTwistedPrime:
    case FamilyKind::kHalfTwistedPrime: {
      Rational den = falling_product(Rational(k) + twist_of(family), i + 1) *
                     Rational(factorial(i));
      return 1 / den;
    }
  }
  throw std::logic_error("unknown family kind");
}

std::vector<Rational> coefficients(const CoefficientFamily& family) {
  std::vector<Rational> out;
  const int count = coefficient_count(family);
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(coefficient(family, i));
  return out;
}

const Rational& EigenvalueTable::at(int r) const {
  if (r < r_min || r > r_max())
    throw structural_error("eigenvalue index outside the component range");
  return values[static_cast<std::size_t>(r - r_min)];
}

bool EigenvalueTable::all_nonzero() const {
  return std::none_of(values.begin(), values.end(),
                      [](const Rational& v) { return is_zero(v); });
}

EigenvalueTable eigenvalue_table(int n, int k,
                                 std::span<const Rational> coeffs) {
  EigenvalueTable table;
  table.r_min = std::max(0, k - n);
  const int r_max = k / 2;
  for (int r = table.r_min; r <= r_max; ++r) {
    Rational value = 0;
    for (int s = 0; s <= r && s < static_cast<int>(coeffs.size()); ++s) {
      value += coeffs[static_cast<std::size_t>(s)] *
               falling_product(Rational(r), s) *
               rising_product(Rational(n - k + r + 1), s);
    }
    table.values.push_back(value);
  }
  return table;
}

EigenvalueTable eigenvalue_table(const CoefficientFamily& family) {
  require_well_defined(family);
  auto cs = coefficients(family);
  return eigenvalue_table(family.n, family.k, cs);
}

Rational closed_form_eigenvalue(int n, int k, int r, const Rational& twist) {
  if (r == 0) return 1;
  Rational den = falling_product(twist + k, r);
  if (is_zero(den))
    throw structural_error("closed-form eigenvalue has a vanishing denominator");
  return rising_product(twist + n + 2, r) / den;
}

Multivector apply_transform(const SymplecticModel& model,
                            std::span<const Rational> coeffs,
                            const Multivector& X) {
  if (X.dim() != model.dim() || X.is_dual())
    throw structural_error("expected a vector-side element of the model");
  const int k = X.degree();
  Multivector out(X.dim(), k, false);
  if (coeffs.empty()) return out;
  out += X.scaled(coeffs[0]);
  Multivector lowered = X;
  for (int i = 1; i < static_cast<int>(coeffs.size()) && k - 2 * i >= 0; ++i) {
    lowered = lefschetz_lower(model, lowered);
    if (lowered.is_zero()) break;
    Multivector image = lowered;
    for (int j = 0; j < i; ++j) image = lefschetz_raise(model, image);
    out += image.scaled(coeffs[static_cast<std::size_t>(i)]);
  }
  return out;
}

Multivector apply_transform(const CoefficientFamily& family,
                            const SymplecticModel& model,
                            const Multivector& X) {
  require_well_defined(family);
  if (X.degree() != family.k)
    throw structural_error("element degree does not match the family degree");
  auto cs = coefficients(family);
  return apply_transform(model, cs, X);
}

bool is_invertible(int n, int k, std::span<const Rational> coeffs) {
  return eigenvalue_table(n, k, coeffs).all_nonzero();
}

bool is_invertible(const CoefficientFamily& family) {
  return eigenvalue_table(family).all_nonzero();
}

Multivector invert_transform(const SymplecticModel& model,
                             std::span<const Rational> coeffs,
                             const Multivector& Y) {
  const EigenvalueTable table = eigenvalue_table(model.n, Y.degree(), coeffs);
  LefschetzComponents parts = lefschetz_decompose(model, Y);
  for (auto& [r, part] : parts.parts) {
    const Rational& value = table.at(r);
    if (is_zero(value))
      throw structural_error("transformation is not invertible in this degree");
    part = part.scaled(1 / value);
  }
  return reassemble(model, parts);
}

Multivector invert_transform(const CoefficientFamily& family,
                             const SymplecticModel& model,
                             const Multivector& Y) {
  require_well_defined(family);
  if (Y.degree() != family.k)
    throw structural_error("element degree does not match the family degree");
  auto cs = coefficients(family);
  return invert_transform(model, cs, Y);
}

Multivector flat_transform(const CoefficientFamily& family,
                           const SymplecticModel& model, const Multivector& X) {
  return flat(model, apply_transform(family, model, X));
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kDefault: return "default";
    case FamilyKind::kTwisted: return "twisted";
    case FamilyKind::kTwistedPrime: return "twisted-prime";
    case FamilyKind::kHalfTwisted: return "half-twisted";
    case FamilyKind::kHalfTwistedPrime: return "half-twisted-prime";
  }
  return "?";
}

}  // namespace contactalg
