#include "contactalg/poly.hpp"

#include <sstream>

namespace contactalg {

namespace {

void strip_trailing_zeros(Poly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

void Poly::add_term(Monomial m, const Rational& c) {
  if (contactalg::is_zero(c)) return;
  strip_trailing_zeros(m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (contactalg::is_zero(it->second)) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  if (this == &other) {
    for (auto& [m, c] : terms_) c += c;
    return *this;
  }
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (this == &other) {
    terms_.clear();
    return *this;
  }
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

Poly Poly::derivative(int variable) const {
  if (variable < 0) throw structural_error("negative variable index");
  const auto v = static_cast<std::size_t>(variable);
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (v >= m.size() || m[v] == 0) continue;
    Monomial d = m;
    const Rational factor(static_cast<long>(d[v]));
    --d[v];
    out.add_term(std::move(d), c * factor);
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first_term) os << " + ";
    os << '(' << c.get_str() << ')';
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      os << "*z" << v;
      if (m[v] > 1) os << '^' << m[v];
    }
    first_term = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << to_string(p);
}

}  // namespace contactalg
