#include "contactalg/multivector.hpp"

#include <cctype>
#include <sstream>

namespace contactalg {

namespace {

std::string basis_label(IndexSet s, bool dual) {
  std::string out = dual ? "e*{" : "e{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
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
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
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

std::string to_string(const Multivector& X) {
  if (X.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : X.terms()) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    os << a.get_str();
    if (X.degree() > 0) os << '*' << basis_label(s, X.is_dual());
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Multivector& X) {
  return os << to_string(X);
}

Multivector parse_multivector(const std::string& text, int dim, bool dual,
                              int degree_if_zero) {
  Scanner sc(text);
  struct Parsed {
    IndexSet s;
    Rational coeff;
  };
  std::vector<Parsed> parsed;
  bool negate = sc.consume('-');
  while (true) {
    Rational coeff = negate ? Rational(-1) : Rational(1);
    bool saw_number = false;
    if (sc.looks_like_number()) {
      coeff *= sc.rational();
      saw_number = true;
    }
    IndexSet s;
    bool saw_basis = false;
    if (!saw_number || sc.consume('*')) {
      bool star_dual = false;
      if (sc.consume("e*{")) {
        star_dual = true;
        saw_basis = true;
      } else if (sc.consume("e{")) {
        saw_basis = true;
      } else if (!saw_number) {
        sc.fail("expected a term");
      }
      if (saw_basis) {
        if (star_dual != dual) sc.fail("term on the wrong side (vector vs form)");
        std::uint64_t mask = 0;
        if (!sc.consume('}')) {
          while (true) {
            long idx = sc.integer();
            if (idx < 1 || idx > dim) sc.fail("basis index out of range");
            std::uint64_t bit = 1ull << (idx - 1);
            if (mask & bit) sc.fail("repeated basis index");
            mask |= bit;
            if (sc.consume('}')) break;
            if (!sc.consume(',')) sc.fail("expected ',' or '}'");
          }
        }
        s = IndexSet(mask);
      }
    }
    parsed.push_back({s, coeff});
    if (sc.done()) break;
    if (sc.consume('+')) {
      negate = false;
    } else if (sc.consume('-')) {
      negate = true;
    } else {
      sc.fail("expected '+' or '-' between terms");
    }
  }

  if (parsed.size() == 1 && is_zero(parsed[0].coeff) && parsed[0].s.empty())
    return Multivector(dim, degree_if_zero, dual);

  int degree = parsed.front().s.size();
  Multivector out(dim, degree, dual);
  for (const auto& p : parsed) {
    if (p.s.size() != degree)
      throw structural_error("terms of mixed degree in '" + text + "'");
    out.add_term(p.s, p.coeff);
  }
  return out;  // cancellation keeps the inferred degree
}

}  // namespace contactalg
