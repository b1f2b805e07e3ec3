#include "contactalg/darboux.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "contactalg/symplectic.hpp"

namespace contactalg {

namespace {

void require_coordinate(const DarbouxModel& model, const PolyMultivector& X,
                        bool dual) {
  if (X.dim() != model.dim() || X.is_dual() != dual)
    throw structural_error(dual ? "expected a coordinate form"
                                : "expected a coordinate vector element");
}

void require_frame(const DarbouxModel& model, const PolyMultivector& X,
                   bool dual) {
  if (X.dim() != 2 * model.n || X.is_dual() != dual)
    throw structural_error(dual ? "expected a restricted form"
                                : "expected a frame element");
}

Rational default_coefficient(int k, int i) {
  return Rational(factorial(k - i)) / Rational(factorial(k) * factorial(i));
}

Rational correction_coefficient(int k, int i) {
  return Rational(factorial(k - 1 - i)) / Rational(factorial(k) * factorial(i));
}

// Pushes every monomial of X through a constant linear map given on basis
// monomials, keeping the polynomial coefficients.
PolyMultivector apply_monomial_map(
    const PolyMultivector& X, int out_dim, int out_degree, bool out_dual,
    const std::function<Multivector(IndexSet)>& monomial_image) {
  PolyMultivector out(out_dim, out_degree, out_dual);
  std::map<IndexSet, Multivector> cache;
  for (const auto& [s, p] : X.terms()) {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, monomial_image(s)).first;
    for (const auto& [t, c] : it->second.terms()) out.add_term(t, p * c);
  }
  return out;
}

}  // namespace

PolyMultivector gamma0(const DarbouxModel& model) {
  PolyMultivector out(model.dim(), 1, true);
  out.add_term(IndexSet::of({1}), Poly(1));  // dz0
  for (int i = 1; i <= model.n; ++i) {
    out.add_term(IndexSet::of({2 * i + 1}), Poly::variable(2 * i - 1));
    out.add_term(IndexSet::of({2 * i}), -Poly::variable(2 * i));
  }
  return out;
}

PolyMultivector dgamma0(const DarbouxModel& model) {
  PolyMultivector out(model.dim(), 2, true);
  for (int i = 1; i <= model.n; ++i)
    out.add_term(IndexSet::of({2 * i, 2 * i + 1}), Poly(2));
  return out;
}

PolyMultivector dgamma0_power(const DarbouxModel& model, int i) {
  if (i < 0) throw structural_error("negative power");
  PolyMultivector out = PolyMultivector::scalar(model.dim(), Poly(1), true);
  const PolyMultivector base = dgamma0(model);
  for (int j = 0; j < i; ++j) out = wedge(out, base);
  return out;
}

PolyMultivector reeb(const DarbouxModel& model) {
  return PolyMultivector::basis_element(model.dim(), 1);
}

PolyMultivector frame_vector(const DarbouxModel& model, int j) {
  if (j < 1 || j > 2 * model.n) throw structural_error("frame index out of range");
  PolyMultivector out(model.dim(), 1, false);
  out.add_term(IndexSet::of({j + 1}), Poly(1));
  if (j % 2 == 1) {
    out.add_term(IndexSet::of({1}), Poly::variable(j + 1));
  } else {
    out.add_term(IndexSet::of({1}), -Poly::variable(j - 1));
  }
  return out;
}

PolyMultivector frame_expand(const DarbouxModel& model,
                             const PolyMultivector& frame_element) {
  require_frame(model, frame_element, false);
  PolyMultivector out(model.dim(), frame_element.degree(), false);
  for (const auto& [s, p] : frame_element.terms()) {
    PolyMultivector product = PolyMultivector::scalar(model.dim(), Poly(1));
    for (int j : s.indices()) product = wedge(product, frame_vector(model, j));
    out += product.scaled(p);
  }
  return out;
}

PolyMultivector exterior_d(const DarbouxModel& model,
                           const PolyMultivector& form) {
  require_coordinate(model, form, true);
  PolyMultivector out(model.dim(), form.degree() + 1, true);
  if (out.degree() > model.dim()) return out;
  for (const auto& [s, p] : form.terms()) {
    for (int v = 0; v <= 2 * model.n; ++v) {
      if (s.contains(v + 1)) continue;
      Poly dp = p.derivative(v);
      if (dp.is_zero()) continue;
      const IndexSet dv = IndexSet::of({v + 1});
      const int sign = merge_sign(dv, s);
      out.add_term(dv.united(s), sign < 0 ? -dp : dp);
    }
  }
  return out;
}

PolyMultivector coordinate_flat(const DarbouxModel& model,
                                const PolyMultivector& X) {
  require_coordinate(model, X, false);
  return apply_factorwise(
      X, model.dim(), true,
      [](int i) -> std::optional<std::pair<int, Rational>> {
        const int c = i - 1;  // coordinate behind the internal index
        if (c == 0) return std::nullopt;
        if (c % 2 == 1) return std::make_pair(i + 1, Rational(2));
        return std::make_pair(i - 1, Rational(-2));
      });
}

PolyMultivector weighted_flat(const DarbouxModel& model, int k,
                              const PolyMultivector& X) {
  require_coordinate(model, X, false);
  if (X.degree() != k) throw structural_error("element degree does not match k");
  PolyMultivector out(model.dim(), k, true);
  for (int i = 0; i <= k / 2; ++i) {
    const PolyMultivector power = dgamma0_power(model, i);
    PolyMultivector inner = i == 0 ? X : contract(power, X);
    PolyMultivector part = coordinate_flat(model, inner);
    if (i > 0) part = wedge(part, power);
    out += part.scaled(Poly(default_coefficient(k, i)));
  }
  return out;
}

PolyMultivector correction_form(const DarbouxModel& model, int k,
                                const PolyMultivector& s) {
  require_coordinate(model, s, false);
  if (s.degree() != k - 1)
    throw structural_error("section degree does not match k-1");
  PolyMultivector out(model.dim(), k, true);
  for (int i = 0; i <= (k - 1) / 2; ++i) {
    const PolyMultivector power = dgamma0_power(model, i);
    PolyMultivector inner = i == 0 ? s : contract(power, s);
    PolyMultivector part = exterior_d(model, coordinate_flat(model, inner));
    if (i > 0) part = wedge(part, power);
    out += part.scaled(Poly(correction_coefficient(k, i)));
  }
  return out;
}

PolyMultivector restrict_to_distribution(const DarbouxModel& model,
                                         const PolyMultivector& form) {
  require_coordinate(model, form, true);
  const int frame_dim = 2 * model.n;
  PolyMultivector out(frame_dim, form.degree(), true);
  if (form.degree() > frame_dim) return out;

  // Image of dz0 after discarding gamma0.
  PolyMultivector dz0_image(frame_dim, 1, true);
  for (int i = 1; i <= model.n; ++i) {
    dz0_image.add_term(IndexSet::of({2 * i - 1}), Poly::variable(2 * i));
    dz0_image.add_term(IndexSet::of({2 * i}), -Poly::variable(2 * i - 1));
  }

  for (const auto& [s, p] : form.terms()) {
    if (s.contains(1)) {
      // dz0 is the lowest factor, so it splits off with sign +1.
      const IndexSet rest(s.without(1).mask() >> 1);
      PolyMultivector tail = PolyMultivector::monomial(frame_dim, rest, Poly(1), true);
      out += wedge(dz0_image, tail).scaled(p);
    } else {
      out.add_term(IndexSet(s.mask() >> 1), p);
    }
  }
  return out;
}

PolyMultivector solve_distribution_flat(const DarbouxModel& model, int k,
                                        const PolyMultivector& rhs) {
  require_frame(model, rhs, true);
  if (rhs.degree() != k) throw structural_error("form degree does not match k");
  const int frame_dim = 2 * model.n;
  const SymplecticModel sm(model.n);

  PolyMultivector sharped = apply_factorwise(
      rhs, frame_dim, false,
      [](int i) -> std::optional<std::pair<int, Rational>> {
        if (i % 2 == 0) return std::make_pair(i - 1, Rational(1));
        return std::make_pair(i + 1, Rational(-1));
      });

  const CoefficientFamily family = CoefficientFamily::defaults(model.n, k);
  PolyMultivector inverted = apply_monomial_map(
      sharped, frame_dim, k, false, [&](IndexSet s) {
        return invert_transform(family, sm,
                                Multivector::monomial(frame_dim, s, 1));
      });
  return inverted.scaled(Poly(make_rational(1, 1L << k)));
}

PolyMultivector splitting_section(const DarbouxModel& model, int k,
                                  const PolyMultivector& s_frame) {
  require_frame(model, s_frame, false);
  if (k < 1 || k > model.dim()) throw structural_error("degree outside 1..2n+1");
  if (s_frame.degree() != k - 1)
    throw structural_error("section degree does not match k-1");

  const PolyMultivector s_coord = frame_expand(model, s_frame);
  const PolyMultivector Y = wedge(reeb(model), s_coord);
  const PolyMultivector equation = restrict_to_distribution(
      model, weighted_flat(model, k, Y) + correction_form(model, k, s_coord));
  const PolyMultivector h = frame_expand(
      model, solve_distribution_flat(model, k, equation));
  return Y - h;
}

SplittingResiduals splitting_residuals(const DarbouxModel& model, int k,
                                       const PolyMultivector& s_frame,
                                       const PolyMultivector& X) {
  require_frame(model, s_frame, false);
  require_coordinate(model, X, false);
  const PolyMultivector s_coord = frame_expand(model, s_frame);
  SplittingResiduals out{
      contract(gamma0(model), X) - s_coord,
      restrict_to_distribution(
          model, weighted_flat(model, k, X) + correction_form(model, k, s_coord)),
  };
  return out;
}

std::string to_string_darboux(const DarbouxModel& model,
                              const PolyMultivector& X) {
  const bool coordinate = X.dim() == model.dim();
  if (!coordinate && X.dim() != 2 * model.n)
    throw structural_error("element does not belong to the model");
  const char* label = coordinate ? (X.is_dual() ? "dz" : "d")
                                 : (X.is_dual() ? "th" : "X");
  if (X.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [s, p] : X.terms()) {
    for (const auto& [mono, c] : p.terms()) {
      if (!first_term) os << " + ";
      os << '(' << c.get_str() << ')';
      for (std::size_t v = 0; v < mono.size(); ++v) {
        if (mono[v] == 0) continue;
        os << "*z" << v;
        if (mono[v] > 1) os << '^' << mono[v];
      }
      for (int i : s.indices()) os << '*' << label << (coordinate ? i - 1 : i);
      first_term = false;
    }
  }
  return os.str();
}

namespace {

class DarbouxScanner {
 public:
  DarbouxScanner(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool consume(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool consume(const std::string& s) {
    skip_space();
    if (text_.compare(pos_, s.size(), s) == 0) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw structural_error("parse error at position " + std::to_string(pos_) +
                           ": " + what + " in '" + text_ + "'");
  }
  long integer() {
    skip_space();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) fail("expected an integer");
    return std::stol(text_.substr(start, pos_ - start));
  }
  Rational rational() {
    Rational num(integer());
    if (consume('/')) {
      long den = integer();
      if (den == 0) fail("zero denominator");
      num /= Rational(den);
    }
    return num;
  }
  bool looks_like_number() {
    skip_space();
    return std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-' ||
           peek() == '+';
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyMultivector parse_darboux(const DarbouxModel& model,
                              const std::string& text, int dim, bool dual,
                              int degree_if_zero) {
  const bool coordinate = dim == model.dim();
  if (!coordinate && dim != 2 * model.n)
    throw structural_error("dimension does not belong to the model");
  const std::string label = coordinate ? (dual ? "dz" : "d") : (dual ? "th" : "X");

  DarbouxScanner sc(text);
  PolyMultivector total(dim, degree_if_zero, dual);
  bool first = true;
  bool have_degree = false;
  bool negate = sc.consume('-');
  while (first || !sc.done()) {
    if (!first) {
      if (sc.consume('+')) {
        negate = false;
      } else if (sc.consume('-')) {
        negate = true;
      } else {
        sc.fail("expected '+' or '-' between terms");
      }
    }
    Rational coeff = negate ? Rational(-1) : Rational(1);
    bool saw_factor = false;
    if (sc.consume('(')) {
      coeff *= sc.rational();
      if (!sc.consume(')')) sc.fail("expected ')'");
      saw_factor = true;
    } else if (sc.looks_like_number()) {
      coeff *= sc.rational();
      saw_factor = true;
    }
    Poly poly_part(coeff);
    PolyMultivector term = PolyMultivector::scalar(dim, Poly(1), dual);
    while (true) {
      if (saw_factor && !sc.consume('*')) break;
      if (sc.consume('z')) {
        long v = sc.integer();
        if (v < 0 || v > 2 * model.n) sc.fail("coordinate out of range");
        unsigned exp = 1;
        if (sc.consume('^')) {
          long e = sc.integer();
          if (e < 1) sc.fail("exponent must be positive");
          exp = static_cast<unsigned>(e);
        }
        poly_part *= Poly::variable(static_cast<int>(v), exp);
      } else if (sc.consume(label)) {
        long raw = sc.integer();
        long index = coordinate ? raw + 1 : raw;
        if (index < 1 || index > dim) sc.fail("basis index out of range");
        term = wedge(term, PolyMultivector::monomial(
                               dim, IndexSet::of({static_cast<int>(index)}),
                               Poly(1), dual));
      } else if (!saw_factor) {
        sc.fail("expected a term");
      } else {
        break;
      }
      saw_factor = true;
    }
    PolyMultivector scaled = term.scaled(poly_part);
    if (!have_degree && !scaled.is_zero()) {
      total = PolyMultivector(dim, scaled.degree(), dual);
      have_degree = true;
    }
    if (!scaled.is_zero()) {
      if (scaled.degree() != total.degree())
        throw structural_error("terms of mixed degree in '" + text + "'");
      total += scaled;
    }
    first = false;
    negate = false;
  }
  return total;
}

}  // namespace contactalg
