#pragma once

// Canonical text form of polynomials, e.g. "d_0_1^4-4*d_0_1^2*t_2^2".
//
//   poly   := "0" | ["-"] term (("+" | "-") term)*
//   term   := digits | [digits "*"] factor ("*" factor)*
//   factor := var ["^" digits]
//   var    := "d_" digits "_" digits | "t_" digits
//
// No whitespace. Terms are written largest monomial first.

#include "cayley/polynomial.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace cayley {

inline void write_canonical(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) {
    os << '0';
    return;
  }
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coefficient < 0;
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    const Integer magnitude = negative ? Integer(-t.coefficient) : t.coefficient;
    if (t.monomial.is_unit()) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude << '*';
    bool first_factor = true;
    for (const auto& f : t.monomial.factors()) {
      if (!first_factor) os << '*';
      first_factor = false;
      os << f.var.name();
      if (f.exponent != 1) os << '^' << f.exponent;
    }
  }
}

inline std::string canonical_string(const Polynomial& p) {
  std::ostringstream os;
  write_canonical(os, p);
  return os.str();
}

namespace detail {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    if (text_ == "0") return {};
    if (text_.empty()) fail("empty input");
    std::vector<Polynomial::Term> terms;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    terms.push_back(term(negative));
    while (pos_ < text_.size()) {
      const char c = text_[pos_++];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, what + " at offset " + std::to_string(pos_));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned small_number() {
    const std::string d = digits();
    if (d.size() > 9) fail("number too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  Polynomial::Term term(bool negative) {
    Integer coefficient = 1;
    std::vector<Monomial::Factor> factors;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = Integer(digits());
      if (peek() != '*') return {Monomial{}, negative ? Integer(-coefficient) : coefficient};
      ++pos_;
    }
    factors.push_back(factor());
    while (peek() == '*') {
      ++pos_;
      factors.push_back(factor());
    }
    return {Monomial::from_factors(std::move(factors)), negative ? Integer(-coefficient) : coefficient};
  }

  Monomial::Factor factor() {
    const char kind = peek();
    if ((kind != 'd' && kind != 't') || pos_ + 1 >= text_.size() || text_[pos_ + 1] != '_') {
      fail("expected variable");
    }
    pos_ += 2;
    VarId var = VarId::tau(2);
    try {
      if (kind == 'd') {
        const unsigned i = small_number();
        if (peek() != '_') fail("expected '_'");
        ++pos_;
        var = VarId::dist(i, small_number());
      } else {
        var = VarId::tau(small_number());
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kParseError) throw;
      fail(e.what());
    }
    unsigned exponent = 1;
    if (peek() == '^') {
      ++pos_;
      exponent = small_number();
      if (exponent == 0) fail("zero exponent");
    }
    return {var, exponent};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the canonical text form; the inverse of canonical_string.
inline Polynomial parse_polynomial(std::string_view text) { return detail::PolynomialParser(text).parse(); }

}  // namespace cayley
