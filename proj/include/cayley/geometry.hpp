#pragma once

// Exact distance-geometry predicates from numerically evaluated Cayley-Menger determinants.
// Determinants are taken over the integers: squared distances are scaled by the lcm L of their
// denominators, and the homogeneity of Gamma (degree n in squares) and Delta (degree n+1)
// restores the rational value.

#include "cayley/determinant.hpp"
#include "cayley/integer.hpp"
#include "cayley/matrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

/// Pairwise distances of m labeled points; only the upper triangle is stored, row-major
/// (0,1), (0,2), ..., (m-2,m-1). Every distance is strictly positive.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t points, std::vector<Rational> upper) : points_(points), upper_(std::move(upper)) {
    if (upper_.size() != points_ * (points_ - (points_ > 0 ? 1 : 0)) / 2) {
      throw Error(ErrorCode::kInvalidDistance, std::to_string(points_) + " points need " +
                                                   std::to_string(points_ * (points_ - 1) / 2) + " distances, got " +
                                                   std::to_string(upper_.size()));
    }
    for (const Rational& d : upper_) {
      if (d <= 0) throw Error(ErrorCode::kInvalidDistance, "distance " + to_string(d) + " is not positive");
    }
  }

  /// All pairwise distances equal to `side`.
  static DistanceMatrix regular(std::size_t points, const Rational& side) {
    return DistanceMatrix(points, std::vector<Rational>(points * (points - 1) / 2, side));
  }

  template <class F>
  static DistanceMatrix from_function(std::size_t points, F distance) {
    std::vector<Rational> upper;
    for (std::size_t i = 0; i < points; ++i) {
      for (std::size_t j = i + 1; j < points; ++j) upper.push_back(distance(i, j));
    }
    return DistanceMatrix(points, std::move(upper));
  }

  std::size_t points() const noexcept { return points_; }
  std::span<const Rational> upper() const noexcept { return upper_; }

  /// Distance between distinct points i and j, in either order.
  const Rational& distance(std::size_t i, std::size_t j) const {
    if (i == j || i >= points_ || j >= points_) {
      throw Error(ErrorCode::kInvalidArgument, "no distance between " + std::to_string(i) + " and " + std::to_string(j));
    }
    if (i > j) std::swap(i, j);
    return upper_[i * (2 * points_ - i - 1) / 2 + (j - i - 1)];
  }

  /// Squared distance, zero on the diagonal.
  Rational squared(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    const Rational& d = distance(i, j);
    return d * d;
  }

  /// Point k of the result is point perm[k] of this matrix.
  DistanceMatrix relabeled(std::span<const std::size_t> perm) const {
    return from_function(points_, [&](std::size_t i, std::size_t j) { return distance(perm[i], perm[j]); });
  }

  DistanceMatrix scaled(const Rational& factor) const {
    std::vector<Rational> upper;
    for (const Rational& d : upper_) upper.push_back(d * factor);
    return DistanceMatrix(points_, std::move(upper));
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t points_;
  std::vector<Rational> upper_;
};

/// The exact determinant values that decided a result.
struct Certificate {
  std::optional<Rational> gamma;
  std::optional<Rational> delta;
};

template <class T>
struct GeometryResult {
  T value;
  Certificate certificate;
};

namespace detail {

inline void require_points(const DistanceMatrix& dm, std::size_t min, const char* what) {
  if (dm.points() < min) {
    throw Error(ErrorCode::kTooFewPoints, std::string(what) + " needs at least " + std::to_string(min) +
                                              " points, got " + std::to_string(dm.points()));
  }
}

/// L * squared distances as an integer matrix (zero diagonal), and L.
inline std::pair<IntegerMatrix, Integer> scaled_squares(const DistanceMatrix& dm) {
  Integer scale = 1;
  for (const Rational& d : dm.upper()) scale = lcm(scale, denominator_of(d * d));
  IntegerMatrix m(dm.points());
  for (std::size_t i = 0; i < dm.points(); ++i) {
    for (std::size_t j = 0; j < dm.points(); ++j) {
      if (i == j) continue;
      const Rational v = dm.squared(i, j) * Rational(scale);
      m.at(i, j) = numerator_of(v);
    }
  }
  return {std::move(m), scale};
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

/// 2^n (n!)^2
inline Integer volume_normalizer(unsigned n) {
  const Integer f = factorial(n);
  return pow(Integer(2), n) * f * f;
}

}  // namespace detail

/// Gamma_n at the given distances (m = n+1 points), by fraction-free elimination on the
/// evaluated bordered matrix.
inline Rational gamma_value(const DistanceMatrix& dm) {
  detail::require_points(dm, 2, "gamma_value");
  auto [squares, scale] = detail::scaled_squares(dm);
  const std::size_t m = dm.points();
  IntegerMatrix cm(m + 1);
  for (std::size_t k = 1; k <= m; ++k) {
    cm.at(0, k) = 1;
    cm.at(k, 0) = 1;
    for (std::size_t l = 1; l <= m; ++l) cm.at(k, l) = squares.at(k - 1, l - 1);
  }
  return Rational(det_bareiss(std::move(cm))) / Rational(pow(scale, static_cast<unsigned>(m - 1)));
}

/// Delta_{m-1}: determinant of the squared-distance matrix of all m points.
inline Rational delta_value(const DistanceMatrix& dm) {
  detail::require_points(dm, 2, "delta_value");
  auto [squares, scale] = detail::scaled_squares(dm);
  const auto m = static_cast<unsigned>(dm.points());
  return Rational(det_bareiss(std::move(squares))) / Rational(pow(scale, m));
}

/// Vol_n^2 = (-1)^{n+1} Gamma_n / (2^n (n!)^2). Negative values mean the distances are not Euclidean.
inline GeometryResult<Rational> volume_squared(const DistanceMatrix& dm) {
  detail::require_points(dm, 2, "volume_squared");
  const auto n = static_cast<unsigned>(dm.points() - 1);
  const Rational g = gamma_value(dm);
  Rational v = g / Rational(detail::volume_normalizer(n));
  if (n % 2 == 0) v = -v;
  return {v, {g, std::nullopt}};
}

/// The points lie in a proper affine subspace iff Gamma_n vanishes.
inline GeometryResult<bool> is_degenerate(const DistanceMatrix& dm) {
  detail::require_points(dm, 2, "is_degenerate");
  const Rational g = gamma_value(dm);
  return {g == 0, {g, std::nullopt}};
}

/// Single-determinant sign test (-1)^{n+1} Gamma_n > 0.
///
/// This is exactly the Cayley-Menger sign condition on the full point set. It does not look at
/// subsets, so from 4 points on it can accept tables that violate a triangle inequality on a
/// face; gram_oracle performs the full positive-definiteness test.
inline GeometryResult<bool> is_realizable(const DistanceMatrix& dm) {
  detail::require_points(dm, 2, "is_realizable");
  const auto n = dm.points() - 1;
  const Rational g = gamma_value(dm);
  const int s = n % 2 == 1 ? sign(g) : -sign(g);
  return {s > 0, {g, std::nullopt}};
}

/// rho^2 = -Delta_n / (2 Gamma_n) for a nondegenerate simplex.
inline GeometryResult<Rational> circumradius_squared(const DistanceMatrix& dm) {
  detail::require_points(dm, 2, "circumradius_squared");
  const Rational g = gamma_value(dm);
  if (g == 0) throw Error(ErrorCode::kDegenerateSimplex, "points lie in a proper affine subspace (Gamma = 0)");
  const Rational d = delta_value(dm);
  return {-d / (2 * g), {g, d}};
}

/// n+2 points lie on a common sphere or hyperplane iff Delta_{n+1} vanishes.
inline GeometryResult<bool> is_cospherical(const DistanceMatrix& dm) {
  detail::require_points(dm, 3, "is_cospherical");
  const Rational d = delta_value(dm);
  return {d == 0, {std::nullopt, d}};
}

namespace detail {

inline void require_taus(const DistanceMatrix& base, std::span<const Rational> taus) {
  require_points(base, 2, "isosceles_volume_squared (base)");
  for (const Rational& t : taus) {
    if (t <= 0) throw Error(ErrorCode::kNonPositiveTau, "tau " + to_string(t) + " is not positive");
  }
}

}  // namespace detail

/// Base points 0..p followed by vertices p+1..n, vertex l at distance taus[l-p-1] from every earlier vertex.
inline DistanceMatrix tower_distance_matrix(const DistanceMatrix& base, std::span<const Rational> taus) {
  detail::require_taus(base, taus);
  const std::size_t p1 = base.points();
  return DistanceMatrix::from_function(p1 + taus.size(), [&](std::size_t i, std::size_t j) {
    return j < p1 ? base.distance(i, j) : taus[j - p1];
  });
}

/// Squared volume of the isosceles tower over `base`: (-1)^{n+1} Lambda_{n,p} / (2^n (n!)^2),
/// with Lambda_{n,p} evaluated as Gamma_n of the tower distances.
inline GeometryResult<Rational> isosceles_volume_squared(const DistanceMatrix& base, std::span<const Rational> taus) {
  return volume_squared(tower_distance_matrix(base, taus));
}

/// Audit route for isosceles_volume_squared: Lambda_{n,p} from the base values Gamma_p and
/// Delta_p alone, through
///   Lambda_{p,p}   = Gamma_p
///   Lambda_{p+1,p} = -2 Gamma_p t_{p+1}^2 - Delta_p
///   Lambda_{k,p}   = -2 Lambda_{k-1,p} t_k^2 - Lambda_{k-2,p} t_{k-1}^4   (k >= p+2)
inline GeometryResult<Rational> isosceles_volume_squared_by_recurrence(const DistanceMatrix& base,
                                                                      std::span<const Rational> taus) {
  detail::require_taus(base, taus);
  const Rational gamma_p = gamma_value(base);
  Rational before = gamma_p;  // Lambda_{k-2,p}
  Rational current = gamma_p; // Lambda_{k-1,p}
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const Rational t2 = taus[k] * taus[k];
    Rational next;
    if (k == 0) {
      next = -2 * gamma_p * t2 - delta_value(base);
    } else {
      const Rational prev_t2 = taus[k - 1] * taus[k - 1];
      next = -2 * current * t2 - before * prev_t2 * prev_t2;
    }
    before = current;
    current = next;
  }
  const auto n = static_cast<unsigned>(base.points() - 1 + taus.size());
  Rational v = current / Rational(detail::volume_normalizer(n));
  if (n % 2 == 0) v = -v;
  return {v, {current, std::nullopt}};
}

struct GramResult {
  bool realizable;
  /// det(G) / (n!)^2; present only when realizable.
  std::optional<Rational> volume_squared;
};

/// Independent check through the Gram matrix G_ij = (d_0i^2 + d_0j^2 - d_ij^2) / 2, 1 <= i, j <= n:
/// realizable iff G is positive definite (all leading principal minors positive), and then
/// Vol^2 = det(G) / (n!)^2.
inline GramResult gram_oracle(const DistanceMatrix& dm) {
  detail::require_points(dm, 2, "gram_oracle");
  const std::size_t n = dm.points() - 1;
  Integer scale = 1;
  for (const Rational& d : dm.upper()) scale = lcm(scale, denominator_of(d * d));
  // 2 L G is integral.
  IntegerMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational entry = (dm.squared(0, i + 1) + dm.squared(0, j + 1) - dm.squared(i + 1, j + 1)) * Rational(scale);
      g.at(i, j) = numerator_of(entry);
    }
  }
  const std::vector<Integer> minors = leading_principal_minors(g);
  bool positive = minors.size() == n;
  for (const Integer& minor : minors) positive = positive && minor > 0;
  if (!positive) return {false, std::nullopt};
  const Rational det_g = Rational(minors.back()) / Rational(pow(2 * scale, static_cast<unsigned>(n)));
  const Integer f = detail::factorial(static_cast<unsigned>(n));
  return {true, det_g / Rational(f * f)};
}

}  // namespace cayley
