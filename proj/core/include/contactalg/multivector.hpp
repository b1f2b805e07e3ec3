#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "contactalg/rational.hpp"

namespace contactalg {

inline constexpr int kMaxDim = 64;

// Label of a canonical basis monomial e_{i1} ^ ... ^ e_{ik} with
// i1 < ... < ik, indices 1-based, packed as a bitmask (bit i-1 <-> index i).
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t mask) : mask_(mask) {}

  static IndexSet of(std::initializer_list<int> indices) {
    std::uint64_t m = 0;
    for (int i : indices) {
      if (i < 1 || i > kMaxDim) throw structural_error("basis index out of range");
      std::uint64_t bit = 1ull << (i - 1);
      if (m & bit) throw structural_error("repeated basis index");
      m |= bit;
    }
    return IndexSet(m);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int index) const {
    return (mask_ >> (index - 1)) & 1u;
  }
  // Largest member, 0 when empty.
  constexpr int max_index() const {
    return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_);
  }
  constexpr bool intersects(IndexSet other) const {
    return (mask_ & other.mask_) != 0;
  }
  constexpr IndexSet united(IndexSet other) const {
    return IndexSet(mask_ | other.mask_);
  }
  constexpr IndexSet without(int index) const {
    return IndexSet(mask_ & ~(1ull << (index - 1)));
  }
  // Members below `index`.
  constexpr int count_below(int index) const {
    return std::popcount(mask_ & ((1ull << (index - 1)) - 1));
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    std::uint64_t rest = mask_;
    while (rest) {
      out.push_back(std::countr_zero(rest) + 1);
      rest &= rest - 1;
    }
    return out;
  }

  friend constexpr auto operator<=>(IndexSet a, IndexSet b) = default;

 private:
  std::uint64_t mask_ = 0;
};

// Sign of sorting the concatenation (a..., b...) of two disjoint sorted sets.
constexpr int merge_sign(IndexSet a, IndexSet b) {
  int inversions = 0;
  std::uint64_t rest = b.mask();
  while (rest) {
    int bit = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(a.mask() >> (bit + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

namespace detail {
// Namespace-scope trampoline so member functions named is_zero do not shadow
// the coefficient-ring overloads.
template <typename Ring>
bool coeff_is_zero(const Ring& value) {
  return is_zero(value);
}
}  // namespace detail

// All degree-k monomial labels over indices 1..dim, in mask order.
inline std::vector<IndexSet> degree_basis(int dim, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > dim) return out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  for (std::uint64_t m = 0; m < (1ull << dim); ++m)
    if (std::popcount(m) == k) out.emplace_back(m);
  return out;
}

// Homogeneous element of the degree-`degree` exterior power over a space of
// dimension `dim`, sparse over canonical monomials. `dual` distinguishes the
// form side from the vector side. Zero coefficients are never stored, so
// equality of the term maps is exact equality of values.
template <typename Ring>
class MultivectorT {
 public:
  MultivectorT(int dim, int degree, bool dual = false)
      : dim_(dim), degree_(degree), dual_(dual) {
    if (dim < 0 || dim > kMaxDim) throw structural_error("dimension out of range");
    if (degree < 0) throw structural_error("negative degree");
  }

  static MultivectorT monomial(int dim, IndexSet s, Ring coeff,
                               bool dual = false) {
    MultivectorT out(dim, s.size(), dual);
    out.add_term(s, std::move(coeff));
    return out;
  }

  static MultivectorT scalar(int dim, Ring value, bool dual = false) {
    MultivectorT out(dim, 0, dual);
    out.add_term(IndexSet(), std::move(value));
    return out;
  }

  static MultivectorT basis_element(int dim, int index, bool dual = false) {
    return monomial(dim, IndexSet::of({index}), Ring(1), dual);
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_dual() const { return dual_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexSet, Ring>& terms() const { return terms_; }

  Ring coefficient(IndexSet s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Ring(0) : it->second;
  }

  void add_term(IndexSet s, Ring coeff) {
    if (s.size() != degree_)
      throw structural_error("term degree does not match element degree");
    if (s.max_index() > dim_)
      throw structural_error("basis index exceeds dimension");
    if (detail::coeff_is_zero(coeff)) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      terms_.emplace(s, std::move(coeff));
    } else {
      it->second += coeff;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  MultivectorT& operator+=(const MultivectorT& other) {
    require_same_space(other);
    if (other.degree_ != degree_)
      throw structural_error("adding elements of different degree");
    if (this == &other) {
      for (auto& [s, c] : terms_) c += c;  // doubling never cancels in char 0
      return *this;
    }
    for (const auto& [s, c] : other.terms_) add_term(s, c);
    return *this;
  }

  MultivectorT& operator-=(const MultivectorT& other) {
    return *this += -other;
  }

  friend MultivectorT operator+(MultivectorT a, const MultivectorT& b) {
    a += b;
    return a;
  }
  friend MultivectorT operator-(MultivectorT a, const MultivectorT& b) {
    a -= b;
    return a;
  }
  MultivectorT operator-() const {
    MultivectorT out(dim_, degree_, dual_);
    for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
    return out;
  }

  MultivectorT scaled(const Ring& factor) const {
    MultivectorT out(dim_, degree_, dual_);
    if (detail::coeff_is_zero(factor)) return out;
    for (const auto& [s, c] : terms_) out.add_term(s, c * factor);
    return out;
  }

  // Same terms reinterpreted over a space of different dimension.
  MultivectorT with_dim(int new_dim) const {
    MultivectorT out(new_dim, degree_, dual_);
    for (const auto& [s, c] : terms_) out.add_term(s, c);
    return out;
  }

  friend bool operator==(const MultivectorT& a, const MultivectorT& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.dual_ == b.dual_ &&
           a.terms_ == b.terms_;
  }

  void require_same_space(const MultivectorT& other) const {
    if (other.dim_ != dim_ || other.dual_ != dual_)
      throw structural_error("elements live in different spaces");
  }

 private:
  int dim_;
  int degree_;
  bool dual_;
  std::map<IndexSet, Ring> terms_;
};

template <typename Ring>
MultivectorT<Ring> wedge(const MultivectorT<Ring>& a,
                         const MultivectorT<Ring>& b) {
  a.require_same_space(b);
  MultivectorT<Ring> out(a.dim(), a.degree() + b.degree(), a.is_dual());
  if (out.degree() > a.dim()) return out;  // identically zero above top degree
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      if (sa.intersects(sb)) continue;
      Ring c = ca * cb;
      out.add_term(sa.united(sb), merge_sign(sa, sb) < 0 ? -c : c);
    }
  }
  return out;
}

// Contraction of X by the basis covector with the given index:
// e_i* acts on monomials by the alternating rule, removing e_i with the
// sign of its position.
template <typename Ring>
MultivectorT<Ring> contract_index(int index, const MultivectorT<Ring>& X) {
  if (X.degree() < 1)
    throw structural_error("contracting an element of degree zero");
  MultivectorT<Ring> out(X.dim(), X.degree() - 1, X.is_dual());
  for (const auto& [s, c] : X.terms()) {
    if (!s.contains(index)) continue;
    out.add_term(s.without(index), (s.count_below(index) & 1) ? -c : c);
  }
  return out;
}

// Contraction of a k-vector X by an l-form (l <= k). A monomial form
// e_{j1}* ^ ... ^ e_{jl}* (j1 < ... < jl) acts as the composition of the
// single-index contractions applied in increasing index order; general forms
// act by linear extension over their monomials. Full contraction (l = k)
// lands in degree 0 and realizes the canonical pairing.
template <typename Ring>
MultivectorT<Ring> contract(const MultivectorT<Ring>& form,
                            const MultivectorT<Ring>& X) {
  if (form.dim() != X.dim())
    throw structural_error("contract: dimension mismatch");
  if (!form.is_dual() || X.is_dual())
    throw structural_error("contract: expected a form acting on a vector");
  if (form.degree() > X.degree())
    throw structural_error("contract: form degree exceeds argument degree");
  MultivectorT<Ring> out(X.dim(), X.degree() - form.degree(), false);
  for (const auto& [sphi, cphi] : form.terms()) {
    MultivectorT<Ring> cur = X;
    for (int j : sphi.indices()) cur = contract_index(j, cur);
    out += cur.scaled(cphi);
  }
  return out;
}

// Applies a map defined factorwise on basis directions: `f(i)` gives the
// image of direction i as (target index, rational scale), or nullopt when the
// direction is annihilated. Images of distinct directions must be distinct.
template <typename Ring, typename FactorMap>
MultivectorT<Ring> apply_factorwise(const MultivectorT<Ring>& X, int out_dim,
                                    bool out_dual, FactorMap&& f) {
  MultivectorT<Ring> out(out_dim, X.degree(), out_dual);
  for (const auto& [s, c] : X.terms()) {
    IndexSet image;
    Rational scale = 1;
    int sign = 1;
    bool dead = false;
    for (int idx : s.indices()) {
      std::optional<std::pair<int, Rational>> img = f(idx);
      if (!img) {
        dead = true;
        break;
      }
      auto [t, sc] = *img;
      if (image.contains(t))
        throw structural_error("factorwise map is not injective on directions");
      sign *= merge_sign(image, IndexSet::of({t}));
      image = image.united(IndexSet::of({t}));
      scale *= sc;
    }
    if (dead || is_zero(scale)) continue;
    out.add_term(image, c * Ring(sign < 0 ? -scale : scale));
  }
  return out;
}

using Multivector = MultivectorT<Rational>;

// Plain-text form: terms `coeff*e{i,j,...}` (dual side `coeff*e*{i,j,...}`)
// with rationals as `p/q`, joined by ` + ` / ` - `; a degree-0 element is a
// bare rational; the zero element is `0`. Round-trips exactly through
// parse_multivector given the element's dimension and side.
std::string to_string(const Multivector& X);
std::ostream& operator<<(std::ostream& os, const Multivector& X);

// Degree is inferred from the terms; `degree_if_zero` labels the zero element.
Multivector parse_multivector(const std::string& text, int dim,
                              bool dual = false, int degree_if_zero = 0);

}  // namespace contactalg
