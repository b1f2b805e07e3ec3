#pragma once

#include <span>
#include <string>
#include <vector>

#include "contactalg/symplectic.hpp"

namespace contactalg {

// The five named coefficient sequences weighting raise^i lower^i in the
// degree-k transformation. Default is (k-i)!/(k! i!); the twisted families
// are 1/[(k+m)(k+m-1)...(k+m-i+1) i!] and the primed variants carry one more
// falling factor; the half-twisted families substitute m/2 for m.
enum class FamilyKind {
  kDefault,
  kTwisted,
  kTwistedPrime,
  kHalfTwisted,
  kHalfTwistedPrime,
};

struct CoefficientFamily {
  FamilyKind kind = FamilyKind::kDefault;
  int n = 1;   // half-dimension of the model
  int k = 1;   // degree acted on
  long m = 0;  // twist, unused for kDefault

  static CoefficientFamily defaults(int n, int k) {
    return {FamilyKind::kDefault, n, k, 0};
  }
};

// m for the twisted families, m/2 for the half-twisted ones, 0 for default.
Rational twist_of(const CoefficientFamily& family);

// Number of coefficients: floor(k/2)+1, or floor((k-1)/2)+1 for the primed
// families.
int coefficient_count(const CoefficientFamily& family);

// Whether every denominator factor of the family is nonzero. For the twisted
// families this is the regime m <= -k-1 or m >= -floor(k/2); for the
// half-twisted ones it is automatic at odd m and checked factorwise at even m.
bool is_well_defined(const CoefficientFamily& family);

Rational coefficient(const CoefficientFamily& family, int i);
std::vector<Rational> coefficients(const CoefficientFamily& family);

// Eigenvalues of the transformation on the Lefschetz components of degree k:
// entry r is sum_{s<=r} c_s * r!/(r-s)! * (n-k+r+1)...(n-k+r+s), with r over
// the components that occur in degree k, i.e. max(0, k-n) .. floor(k/2).
struct EigenvalueTable {
  int r_min = 0;
  std::vector<Rational> values;  // values[r - r_min]

  int r_max() const { return r_min + static_cast<int>(values.size()) - 1; }
  const Rational& at(int r) const;
  bool all_nonzero() const;
};

EigenvalueTable eigenvalue_table(int n, int k, std::span<const Rational> coeffs);
EigenvalueTable eigenvalue_table(const CoefficientFamily& family);

// Closed form for the twisted eigenvalues at r >= 1 and k >= 2:
// (t+n+r+1)...(t+n+2) / [(t+k)...(t+k-r+1)] where t is the twist (m or m/2).
Rational closed_form_eigenvalue(int n, int k, int r, const Rational& twist);

// sum_i c_i raise^i(lower^i(X)) on a degree-k element.
Multivector apply_transform(const SymplecticModel& model,
                            std::span<const Rational> coeffs,
                            const Multivector& X);
Multivector apply_transform(const CoefficientFamily& family,
                            const SymplecticModel& model, const Multivector& X);

// The transformation is invertible exactly when no eigenvalue over the
// existing component range vanishes. (For k > n only components
// r >= k-n occur, so lower r impose no condition.)
bool is_invertible(int n, int k, std::span<const Rational> coeffs);
bool is_invertible(const CoefficientFamily& family);

// Solves apply_transform(family, model, X) = Y by rescaling each Lefschetz
// component of Y by its eigenvalue.
Multivector invert_transform(const SymplecticModel& model,
                             std::span<const Rational> coeffs,
                             const Multivector& Y);
Multivector invert_transform(const CoefficientFamily& family,
                             const SymplecticModel& model,
                             const Multivector& Y);

// Pointwise model of the weighted musical map on the distribution:
// flat of the transformed element. Invertible iff the transformation is.
Multivector flat_transform(const CoefficientFamily& family,
                           const SymplecticModel& model, const Multivector& X);

std::string to_string(FamilyKind kind);

}  // namespace contactalg
