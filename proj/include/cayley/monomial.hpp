#pragma once

#include "cayley/variable.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cayley {

/// Power product of variables. Factors are kept sorted by variable with no zero exponents;
/// the empty product is the unit monomial.
class Monomial {
 public:
  struct Factor {
    VarId var;
    unsigned exponent;

    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;

  static Monomial of(VarId var, unsigned exponent = 1) {
    Monomial m;
    if (exponent != 0) m.factors_.push_back({var, exponent});
    return m;
  }

  /// Accepts factors in any order, with repeats and zero exponents.
  static Monomial from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.var < b.var; });
    Monomial m;
    for (const Factor& f : factors) {
      if (f.exponent == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().var == f.var) {
        m.factors_.back().exponent += f.exponent;
      } else {
        m.factors_.push_back(f);
      }
    }
    return m;
  }

  std::span<const Factor> factors() const noexcept { return factors_; }
  bool is_unit() const noexcept { return factors_.empty(); }

  unsigned total_degree() const noexcept {
    unsigned d = 0;
    for (const Factor& f : factors_) d += f.exponent;
    return d;
  }

  unsigned degree_in(VarId var) const noexcept {
    for (const Factor& f : factors_) {
      if (f.var == var) return f.exponent;
      if (var < f.var) break;
    }
    return 0;
  }

  unsigned group_degree(const VarSet& vars) const {
    unsigned d = 0;
    for (const Factor& f : factors_) {
      if (vars.contains(f.var)) d += f.exponent;
    }
    return d;
  }

  bool contains(VarId var) const noexcept { return degree_in(var) != 0; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept {
    std::size_t j = 0;
    for (const Factor& f : factors_) {
      while (j < other.factors_.size() && other.factors_[j].var < f.var) ++j;
      if (j == other.factors_.size() || other.factors_[j].var != f.var ||
          other.factors_[j].exponent < f.exponent) {
        return false;
      }
    }
    return true;
  }

  /// `numerator / denominator`; requires `denominator.divides(numerator)`.
  static Monomial quotient(const Monomial& numerator, const Monomial& denominator) {
    Monomial q;
    std::size_t j = 0;
    for (const Factor& f : numerator.factors_) {
      unsigned e = f.exponent;
      if (j < denominator.factors_.size() && denominator.factors_[j].var == f.var) {
        e -= denominator.factors_[j].exponent;
        ++j;
      }
      if (e != 0) q.factors_.push_back({f.var, e});
    }
    return q;
  }

  /// Drops every factor whose variable satisfies `pred`.
  template <class Pred>
  Monomial without(Pred pred) const {
    Monomial m;
    for (const Factor& f : factors_) {
      if (!pred(f.var)) m.factors_.push_back(f);
    }
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
      if (a.factors_[i].var < b.factors_[j].var) {
        m.factors_.push_back(a.factors_[i++]);
      } else if (b.factors_[j].var < a.factors_[i].var) {
        m.factors_.push_back(b.factors_[j++]);
      } else {
        m.factors_.push_back({a.factors_[i].var, a.factors_[i].exponent + b.factors_[j].exponent});
        ++i;
        ++j;
      }
    }
    for (; i < a.factors_.size(); ++i) m.factors_.push_back(a.factors_[i]);
    for (; j < b.factors_.size(); ++j) m.factors_.push_back(b.factors_[j]);
    return m;
  }

  /// Lexicographic comparison of exponent vectors under the VarId order:
  /// positive when `a` is the larger monomial.
  static int compare(const Monomial& a, const Monomial& b) noexcept {
    const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
    for (std::size_t k = 0; k < n; ++k) {
      const Factor& fa = a.factors_[k];
      const Factor& fb = b.factors_[k];
      // The side holding the earlier variable has a positive exponent where the other has zero.
      if (fa.var < fb.var) return 1;
      if (fb.var < fa.var) return -1;
      if (fa.exponent != fb.exponent) return fa.exponent > fb.exponent ? 1 : -1;
    }
    if (a.factors_.size() != b.factors_.size()) return a.factors_.size() > b.factors_.size() ? 1 : -1;
    return 0;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const Factor& f : factors_) {
      h ^= (static_cast<std::size_t>(f.var.code()) << 8) ^ f.exponent;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  std::vector<Factor> factors_;
};

/// Strict weak order placing larger monomials first (canonical term order).
struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return Monomial::compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace cayley
