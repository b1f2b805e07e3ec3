#pragma once

#include <string>
#include <utility>

#include "contactalg/multivector.hpp"
#include "contactalg/poly.hpp"
#include "contactalg/transforms.hpp"

namespace contactalg {

using PolyMultivector = MultivectorT<Poly>;

// Flat-connection model on affine coordinates z0..z_{2n} with the standard
// contact form
//
//   gamma0 = dz0 + sum_{i=1..n} (z_{2i-1} dz_{2i} - z_{2i} dz_{2i-1}),
//   dgamma0 = 2 sum_i dz_{2i-1} ^ dz_{2i}.
//
// Coordinate objects live over indices 1..2n+1 (index j <-> coordinate j-1):
// vector side d0..d_{2n}, form side dz0..dz_{2n}. The distribution
// Ker gamma0 carries the frame
//
//   X_{2i-1} = d_{2i-1} + z_{2i} d0,   X_{2i} = d_{2i} - z_{2i-1} d0,
//
// dual to the coframe theta_j = dz_j|_D; frame objects live over indices
// 1..2n, restricted forms over theta_1..theta_{2n}.
struct DarbouxModel {
  int n;

  explicit DarbouxModel(int half_dim) : n(half_dim) {
    if (n < 1) throw structural_error("darboux model needs n >= 1");
  }
  int dim() const { return 2 * n + 1; }
};

PolyMultivector gamma0(const DarbouxModel& model);
PolyMultivector dgamma0(const DarbouxModel& model);
PolyMultivector dgamma0_power(const DarbouxModel& model, int i);
PolyMultivector reeb(const DarbouxModel& model);             // d0
PolyMultivector frame_vector(const DarbouxModel& model, int j);

// Rewrites an element given over the frame X_1..X_{2n} in coordinates.
PolyMultivector frame_expand(const DarbouxModel& model,
                             const PolyMultivector& frame_element);

// Plain exterior derivative of a coordinate form.
PolyMultivector exterior_d(const DarbouxModel& model,
                           const PolyMultivector& form);

// v -> interior product of dgamma0 by v, on each monomial factor:
// d0 dies, d_{2i-1} -> 2 dz_{2i}, d_{2i} -> -2 dz_{2i-1}.
PolyMultivector coordinate_flat(const DarbouxModel& model,
                                const PolyMultivector& X);

// sum_i (k-i)!/(k! i!) * flat(dgamma0^i . X) ^ dgamma0^i on a k-vector:
// the coefficient-weighted multiplicative flat map.
PolyMultivector weighted_flat(const DarbouxModel& model, int k,
                              const PolyMultivector& X);

// sum_i (k-1-i)!/(k! i!) * d(flat(dgamma0^i . s)) ^ dgamma0^i on a
// (k-1)-vector: the exterior-derivative correction term of the splitting
// equation.
PolyMultivector correction_form(const DarbouxModel& model, int k,
                                const PolyMultivector& s);

// Restriction of a coordinate form to the distribution: substitutes
// dz0 -> -sum_i (z_{2i-1} theta_{2i} - z_{2i} theta_{2i-1}) and
// dz_j -> theta_j, discarding the gamma0 component.
PolyMultivector restrict_to_distribution(const DarbouxModel& model,
                                         const PolyMultivector& form);

// Solves weighted_flat(h)|_D = rhs for h over the frame. The restricted
// two-form has constant frame coefficients, so the inverse is a constant
// map applied coefficientwise: sharp, the inverse default transformation,
// and a 2^-k scale.
PolyMultivector solve_distribution_flat(const DarbouxModel& model, int k,
                                        const PolyMultivector& rhs);

// The constructive splitting: given a frame section s of degree k-1, returns
// the coordinate k-vector X = reeb ^ s - h with gamma0 . X = s and
// {weighted_flat(X) + correction_form(s)}|_D = 0, both exact.
PolyMultivector splitting_section(const DarbouxModel& model, int k,
                                  const PolyMultivector& s_frame);

struct SplittingResiduals {
  PolyMultivector lift;      // gamma0 . X - s, degree k-1 over coordinates
  PolyMultivector equation;  // {weighted_flat(X) + correction_form(s)}|_D
};

SplittingResiduals splitting_residuals(const DarbouxModel& model, int k,
                                       const PolyMultivector& s_frame,
                                       const PolyMultivector& X);

// Text form: terms `(p/q)*z1^2*z3*<basis factors>`, with basis factors
// `d0`/`dz0` for coordinate objects and `X1`/`th1` for frame objects,
// joined by ` + `. Round-trips exactly through parse_darboux.
std::string to_string_darboux(const DarbouxModel& model,
                              const PolyMultivector& X);

// Parses the format above; the element must match `dim`/`dual` (basis tokens
// d/dz address coordinate objects, X/th frame objects; a bare polynomial is a
// degree-0 element of the requested space).
PolyMultivector parse_darboux(const DarbouxModel& model,
                              const std::string& text, int dim, bool dual,
                              int degree_if_zero = 0);

}  // namespace contactalg
