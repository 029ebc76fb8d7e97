#pragma once

// Exact scalar types shared by the polynomial ring and the geometry layer.

#include <boost/multiprecision/cpp_int.hpp>

#include "cayley/errors.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace cayley {

// Expression templates are off so that `auto` and `?:` always yield plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Reduced fraction with positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

inline Integer pow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline std::string to_string(const Integer& v) { return v.str(); }

/// "p/q", or just "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  const Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

inline int sign(const Rational& r) { return r.sign(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Exact parse of an integer ("-12"), a decimal ("1.25") or a fraction ("3/4").
inline Rational parse_rational(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Rational { throw Error(ErrorCode::kParseError, "not a rational number: '" + original + "'"); };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
    const Integer d(std::string{den});
    if (d == 0) return fail();
    value = Rational(Integer(std::string{num}), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (!detail::all_digits(whole) || !detail::all_digits(frac)) return fail();
    value = Rational(Integer(std::string{whole}) * pow(Integer(10), static_cast<unsigned>(frac.size())) +
                         Integer(std::string{frac}),
                     pow(Integer(10), static_cast<unsigned>(frac.size())));
  } else {
    if (!detail::all_digits(text)) return fail();
    value = Rational(Integer(std::string{text}));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace cayley
