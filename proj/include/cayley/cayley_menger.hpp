#pragma once

// Symbolic Cayley-Menger matrices and their determinants.

#include "cayley/determinant.hpp"
#include "cayley/matrix.hpp"
#include "cayley/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace cayley {

namespace detail {

inline void require_order(int n, int min, const char* what) {
  if (n < min) {
    throw Error(ErrorCode::kInvalidDimension,
                std::string(what) + " needs n >= " + std::to_string(min) + ", got " + std::to_string(n));
  }
}

inline Polynomial squared_distance(unsigned a, unsigned b) {
  return Polynomial::variable(VarId::dist_unordered(a, b), 2);
}

}  // namespace detail

/// Bordered matrix of order n+2: row and column 0 are (0, 1, ..., 1), entry (i+1, j+1) is d_ij^2.
inline SymbolicMatrix cm_matrix(int n) {
  detail::require_order(n, 1, "cm_matrix");
  const std::size_t m = static_cast<std::size_t>(n) + 2;
  SymbolicMatrix cm(m);
  for (std::size_t k = 1; k < m; ++k) {
    cm.at(0, k) = Polynomial(1);
    cm.at(k, 0) = Polynomial(1);
  }
  for (unsigned i = 0; i + 1 < m; ++i) {
    for (unsigned j = i + 1; j + 1 < m; ++j) {
      cm.at(i + 1, j + 1) = detail::squared_distance(i, j);
      cm.at(j + 1, i + 1) = cm.at(i + 1, j + 1);
    }
  }
  return cm;
}

/// The (1,1)-minor of cm_matrix(n): order n+1, entry (i, j) = d_ij^2 off the diagonal.
inline SymbolicMatrix delta_matrix(int n) {
  detail::require_order(n, 1, "delta_matrix");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  SymbolicMatrix dm(m);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) {
      dm.at(i, j) = detail::squared_distance(i, j);
      dm.at(j, i) = dm.at(i, j);
    }
  }
  return dm;
}

/// General symmetric matrix of order n with zero diagonal. Its 1-based entries x_ij reuse the
/// distance variables, so x_12 prints as d_1_2.
inline SymbolicMatrix x_matrix(int n) {
  detail::require_order(n, 1, "x_matrix");
  const auto m = static_cast<std::size_t>(n);
  SymbolicMatrix x(m);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) {
      x.at(i, j) = Polynomial::variable(VarId::dist(i + 1, j + 1));
      x.at(j, i) = x.at(i, j);
    }
  }
  return x;
}

/// x_matrix(n) with the lower triangle negated.
inline SymbolicMatrix antisymmetric_matrix(int n) {
  SymbolicMatrix a = x_matrix(n);
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < i; ++j) a.at(i, j) = -a.at(i, j);
  }
  return a;
}

/// Substitution d_{i l} -> t_l for p+1 <= l <= n, 0 <= i < l.
inline Substitution tower_substitution(int n, int p) {
  Substitution map;
  for (int l = p + 1; l <= n; ++l) {
    const Polynomial t = Polynomial::variable(VarId::tau(static_cast<unsigned>(l)));
    for (int i = 0; i < l; ++i) map.emplace(VarId::dist(static_cast<unsigned>(i), static_cast<unsigned>(l)), t);
  }
  return map;
}

/// Evaluates a polynomial whose exponents are all even, given the values of the squared
/// variables. Lets Cayley-Menger polynomials be evaluated at irrational distances with
/// rational squares, such as the diagonal of a unit square.
inline Rational evaluate_squared(const Polynomial& p, const Assignment& squares) {
  std::vector<Polynomial::Term> halved;
  halved.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> factors;
    for (const auto& f : t.monomial.factors()) {
      if (f.exponent % 2 != 0) {
        throw Error(ErrorCode::kInvalidArgument, "odd power of " + f.var.name() + " in evaluate_squared");
      }
      factors.push_back({f.var, f.exponent / 2});
    }
    halved.push_back({Monomial::from_factors(std::move(factors)), t.coefficient});
  }
  return evaluate(Polynomial::from_terms(std::move(halved)), squares);
}

/// Caches Gamma_n, Delta_n, Lambda_{n,p} and det(X_n) up to a configurable size.
///
/// The cap bounds matrix orders rather than n alone: gamma and lambda accept n <= cap
/// (order n+2), delta accepts n <= cap+1 and det(X_n) accepts n <= cap+2, so every
/// symbolic determinant has order at most cap+2. Results are shared immutable values and
/// the cache is safe to use from several threads.
class CayleyMengerEngine {
 public:
  static constexpr int kDefaultCap = 6;

  explicit CayleyMengerEngine(int cap = kDefaultCap) : cap_(cap) {
    if (cap < 1) throw Error(ErrorCode::kInvalidArgument, "symbolic cap must be >= 1");
  }

  int cap() const noexcept { return cap_; }

  /// Gamma_n = det(cm_matrix(n)).
  const Polynomial& gamma(int n) {
    detail::require_order(n, 1, "gamma");
    check_cap(n, cap_, "gamma");
    return cached(gamma_, n, [n] { return det_laplace(cm_matrix(n)); });
  }

  /// Delta_n = det(delta_matrix(n)).
  const Polynomial& delta(int n) {
    detail::require_order(n, 1, "delta");
    check_cap(n, cap_ + 1, "delta");
    return cached(delta_, n, [n] { return det_laplace(delta_matrix(n)); });
  }

  /// Lambda_{n,p}: gamma(n) with d_{i l} -> t_l for every l > p.
  const Polynomial& lambda(int n, int p) {
    detail::require_order(p, 1, "lambda (p)");
    if (p > n) {
      throw Error(ErrorCode::kInvalidDimension,
                  "lambda needs 1 <= p <= n, got n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
    const Polynomial& g = gamma(n);
    return cached(lambda_, std::pair{n, p}, [&g, n, p] { return substitute(g, tower_substitution(n, p)); });
  }

  /// det(X_n).
  const Polynomial& x_determinant(int n) {
    detail::require_order(n, 1, "x_determinant");
    check_cap(n, cap_ + 2, "x_determinant");
    return cached(xdet_, n, [n] { return det_laplace(x_matrix(n)); });
  }

  /// I_n: Gamma_n, halved for odd n.
  Polynomial normalized_gamma(int n) { return halve_if(gamma(n), n % 2 == 1); }

  /// J_n: Delta_n, halved for even n.
  Polynomial normalized_delta(int n) { return halve_if(delta(n), n % 2 == 0); }

  /// K_n: det(X_n), halved for odd n.
  Polynomial normalized_x(int n) { return halve_if(x_determinant(n), n % 2 == 1); }

 private:
  template <class Key>
  using Cache = std::map<Key, std::shared_ptr<const Polynomial>>;

  static void check_cap(int n, int limit, const char* what) {
    if (n > limit) {
      throw Error(ErrorCode::kCapExceeded, std::string(what) + "(" + std::to_string(n) +
                                               ") exceeds the symbolic cap (limit " + std::to_string(limit) + ")");
    }
  }

  static Polynomial halve_if(const Polynomial& p, bool halve) {
    return halve ? exact_divide(p, Polynomial(2)) : p;
  }

  // Computes outside the lock; when two threads race on the same key, the first insert wins.
  template <class Key, class Compute>
  const Polynomial& cached(Cache<Key>& cache, const Key& key, Compute compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto value = std::make_shared<const Polynomial>(compute());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = cache.try_emplace(key, std::move(value));
    return *it->second;
  }

  int cap_;
  std::mutex mutex_;
  Cache<int> gamma_;
  Cache<int> delta_;
  Cache<std::pair<int, int>> lambda_;
  Cache<int> xdet_;
};

/// Process-wide engine with the default cap.
inline CayleyMengerEngine& default_engine() {
  static CayleyMengerEngine engine;
  return engine;
}

inline const Polynomial& gamma(int n) { return default_engine().gamma(n); }
inline const Polynomial& delta(int n) { return default_engine().delta(n); }
inline const Polynomial& lambda(int n, int p) { return default_engine().lambda(n, p); }

}  // namespace cayley
