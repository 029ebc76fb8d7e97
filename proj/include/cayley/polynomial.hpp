#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer coefficients.

#include "cayley/errors.hpp"
#include "cayley/integer.hpp"
#include "cayley/monomial.hpp"
#include "cayley/variable.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cayley {

/// Degree of a polynomial; the zero polynomial has degree minus infinity.
class Degree {
 public:
  explicit constexpr Degree(long value) : value_(value), minus_infinity_(false) {}

  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const noexcept { return minus_infinity_; }

  /// Requires a finite degree.
  constexpr long value() const {
    if (minus_infinity_) throw Error(ErrorCode::kInvalidArgument, "degree is minus infinity");
    return value_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.minus_infinity_ || b.minus_infinity_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    if (a.minus_infinity_ || b.minus_infinity_) return a.minus_infinity_ == b.minus_infinity_;
    return a.value_ == b.value_;
  }

  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.minus_infinity_ || b.minus_infinity_) {
      return b.minus_infinity_ <=> a.minus_infinity_;
    }
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Degree() : value_(0), minus_infinity_(true) {}

  long value_;
  bool minus_infinity_;
};

class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Integer coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;

  explicit Polynomial(const Integer& constant) {
    if (constant != 0) terms_.push_back({Monomial{}, constant});
  }

  explicit Polynomial(long long constant) : Polynomial(Integer(constant)) {}

  static Polynomial variable(VarId var, unsigned exponent = 1) {
    return monomial(Monomial::of(var, exponent), Integer(1));
  }

  static Polynomial monomial(Monomial m, Integer coefficient) {
    Polynomial p;
    if (coefficient != 0) p.terms_.push_back({std::move(m), std::move(coefficient)});
    return p;
  }

  /// Builds the canonical form from arbitrary terms (any order, duplicates, zeros).
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return Monomial::compare(a.monomial, b.monomial) > 0;
    });
    Polynomial p;
    for (Term& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
        if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
      } else if (t.coefficient != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Terms in canonical order: lexicographically largest monomial first.
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_unit());
  }

  /// Coefficient of the unit monomial.
  Integer constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_unit()) return terms_.back().coefficient;
    return 0;
  }

  const Term& leading_term() const { return terms_.front(); }

  Integer coefficient_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return Monomial::compare(t.monomial, key) > 0;
    });
    if (it != terms_.end() && it->monomial == m) return it->coefficient;
    return 0;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.times_term(a.terms_.front());
    if (b.terms_.size() == 1) return a.times_term(b.terms_.front());
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(small.size() * large.size());
    for (const Term& s : small.terms_) {
      for (const Term& l : large.terms_) {
        acc[s.monomial * l.monomial] += s.coefficient * l.coefficient;
      }
    }
    return from_accumulator(std::move(acc));
  }

  friend Polynomial operator*(const Integer& c, const Polynomial& p) {
    if (c == 0) return {};
    Polynomial r = p;
    for (Term& t : r.terms_) t.coefficient *= c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& p, const Integer& c) { return c * p; }

  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  /// Product with a single term. Multiplying by a monomial preserves the term order.
  Polynomial times_term(const Term& term) const {
    Polynomial r;
    if (term.coefficient == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      r.terms_.push_back({t.monomial * term.monomial, t.coefficient * term.coefficient});
    }
    return r;
  }

  static Polynomial from_accumulator(std::unordered_map<Monomial, Integer, MonomialHash>&& acc) {
    Polynomial r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (c != 0) r.terms_.push_back({m, std::move(c)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) {
      return Monomial::compare(x.monomial, y.monomial) > 0;
    });
    return r;
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) {
        cmp = -1;
      } else if (j == b.terms_.size()) {
        cmp = 1;
      } else {
        cmp = Monomial::compare(a.terms_[i].monomial, b.terms_[j].monomial);
      }
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coefficient = -t.coefficient;
        r.terms_.push_back(std::move(t));
      } else {
        Integer c = subtract ? a.terms_[i].coefficient - b.terms_[j].coefficient
                             : a.terms_[i].coefficient + b.terms_[j].coefficient;
        if (c != 0) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

/// Exact division failed; carries the remainder of lexicographic division.
class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& message, Polynomial remainder)
      : Error(ErrorCode::kNotDivisible, message), remainder_(std::move(remainder)) {}

  const Polynomial& remainder() const noexcept { return remainder_; }

 private:
  Polynomial remainder_;
};

using Substitution = std::map<VarId, Polynomial>;
using Assignment = std::map<VarId, Rational>;

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  Polynomial b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// Variables occurring in `p`, in VarId order.
inline VarSet variables(const Polynomial& p) {
  VarSet vars;
  for (const auto& t : p.terms()) {
    for (const auto& f : t.monomial.factors()) vars.insert(f.var);
  }
  return vars;
}

/// Simultaneous substitution: right-hand sides are never substituted again.
inline Polynomial substitute(const Polynomial& p, const Substitution& map) {
  if (map.empty()) return p;
  std::map<std::pair<VarId, unsigned>, Polynomial> powers;
  auto power_of = [&](VarId var, unsigned e, const Polynomial& image) -> const Polynomial& {
    auto [it, inserted] = powers.try_emplace({var, e});
    if (inserted) it->second = pow(image, e);
    return it->second;
  };

  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  for (const auto& term : p.terms()) {
    Polynomial image = Polynomial::monomial(Monomial{}, term.coefficient);
    std::vector<Monomial::Factor> kept;
    for (const auto& f : term.monomial.factors()) {
      auto it = map.find(f.var);
      if (it == map.end()) {
        kept.push_back(f);
      } else {
        image *= power_of(f.var, f.exponent, it->second);
        if (image.is_zero()) break;
      }
    }
    if (image.is_zero()) continue;
    const Monomial fixed = Monomial::from_factors(std::move(kept));
    for (const auto& t : image.terms()) acc[t.monomial * fixed] += t.coefficient;
  }
  return Polynomial::from_accumulator(std::move(acc));
}

/// Exact rational value of `p` under `values`; every variable of `p` must be assigned.
inline Rational evaluate(const Polynomial& p, const Assignment& values) {
  std::map<std::pair<VarId, unsigned>, Rational> powers;
  Rational sum = 0;
  for (const auto& term : p.terms()) {
    Rational product = Rational(term.coefficient);
    for (const auto& f : term.monomial.factors()) {
      auto it = values.find(f.var);
      if (it == values.end()) {
        throw Error(ErrorCode::kMissingVariable, "no value for " + f.var.name());
      }
      auto [pw, inserted] = powers.try_emplace({f.var, f.exponent});
      if (inserted) pw->second = pow(it->second, f.exponent);
      product *= pw->second;
    }
    sum += product;
  }
  return sum;
}

/// gcd of the absolute values of the coefficients; content(0) = 0.
inline Integer content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    g = gcd(g, t.coefficient);
    if (g == 1) break;
  }
  return abs(g);
}

inline Degree total_degree(const Polynomial& p) {
  if (p.is_zero()) return Degree::minus_infinity();
  unsigned d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.monomial.total_degree());
  return Degree(d);
}

inline Degree partial_degree(const Polynomial& p, const VarSet& vars) {
  if (p.is_zero()) return Degree::minus_infinity();
  unsigned d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.monomial.group_degree(vars));
  return Degree(d);
}

struct Homogeneity {
  bool homogeneous;
  /// Common degree; empty for the zero polynomial and for non-homogeneous input.
  std::optional<unsigned> degree;
};

inline Homogeneity is_group_homogeneous(const Polynomial& p, const VarSet& vars) {
  if (p.is_zero()) return {true, std::nullopt};
  const unsigned d = p.terms().front().monomial.group_degree(vars);
  for (const auto& t : p.terms()) {
    if (t.monomial.group_degree(vars) != d) return {false, std::nullopt};
  }
  return {true, d};
}

inline Homogeneity is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return {true, std::nullopt};
  const unsigned d = p.terms().front().monomial.total_degree();
  for (const auto& t : p.terms()) {
    if (t.monomial.total_degree() != d) return {false, std::nullopt};
  }
  return {true, d};
}

/// Quotient and remainder of division by `divisor` with respect to the lexicographic term order.
/// A term of the running dividend is reduced when the leading monomial of `divisor` divides it
/// and the coefficient division is exact; otherwise it moves to the remainder.
inline std::pair<Polynomial, Polynomial> divide_with_remainder(const Polynomial& dividend,
                                                               const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  const auto& lead = divisor.leading_term();

  std::map<Monomial, Integer, MonomialDescending> work;
  for (const auto& t : dividend.terms()) work.emplace_hint(work.end(), t.monomial, t.coefficient);

  std::vector<Polynomial::Term> quotient;
  std::vector<Polynomial::Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    if (!lead.monomial.divides(top->first) || top->second % lead.coefficient != 0) {
      remainder.push_back({top->first, top->second});
      work.erase(top);
      continue;
    }
    const Monomial qm = Monomial::quotient(top->first, lead.monomial);
    const Integer qc = top->second / lead.coefficient;
    work.erase(top);
    auto d = divisor.terms().begin();
    for (++d; d != divisor.terms().end(); ++d) {
      Monomial m = d->monomial * qm;
      auto [it, inserted] = work.try_emplace(std::move(m), 0);
      it->second -= d->coefficient * qc;
      if (it->second == 0) work.erase(it);
    }
    quotient.push_back({qm, qc});
  }
  // Both lists were produced in descending order already.
  return {Polynomial::from_terms(std::move(quotient)), Polynomial::from_terms(std::move(remainder))};
}

inline std::string canonical_string(const Polynomial& p);

/// Returns r with divisor * r == dividend; throws NotDivisible carrying the remainder otherwise.
inline Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor) {
  auto [q, r] = divide_with_remainder(dividend, divisor);
  if (!r.is_zero()) {
    throw NotDivisible("remainder " + canonical_string(r), std::move(r));
  }
  return q;
}

/// Multiplies each term of group degree g by h^(target - g).
inline Polynomial homogenize_group(const Polynomial& p, const VarSet& vars, unsigned target, VarId h) {
  if (vars.contains(h)) {
    throw Error(ErrorCode::kInvalidArgument, "homogenizing variable " + h.name() + " is in the group");
  }
  std::vector<Polynomial::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (t.monomial.contains(h)) {
      throw Error(ErrorCode::kInvalidArgument, "homogenizing variable " + h.name() + " occurs in p");
    }
    const unsigned g = t.monomial.group_degree(vars);
    if (g > target) {
      throw Error(ErrorCode::kTargetTooSmall, "group degree " + std::to_string(g) + " exceeds target " +
                                                  std::to_string(target));
    }
    out.push_back({t.monomial * Monomial::of(h, target - g), t.coefficient});
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace cayley

#include "cayley/polynomial_io.hpp"
