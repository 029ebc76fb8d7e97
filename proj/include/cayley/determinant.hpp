#pragma once

// Exact determinants over an integral domain by two independent routes:
// memoized cofactor expansion and fraction-free (Bareiss) elimination.

#include "cayley/matrix.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace cayley {

/// Cofactor expansion along rows, top-down, memoized on the set of remaining columns.
/// The number of consumed rows equals the number of deleted columns, so the column
/// mask alone identifies a subproblem: at most 2^m of them, each summing m products.
template <class T>
T det_laplace(const Matrix<T>& a) {
  using R = RingTraits<T>;
  const std::size_t m = a.order();
  if (m == 0) return R::one();
  if (m > 26) throw Error(ErrorCode::kInvalidDimension, "matrix order too large for cofactor expansion");

  std::vector<std::optional<T>> memo(std::size_t{1} << m);
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);

  auto solve = [&](auto&& self, std::uint32_t mask) -> const T& {
    std::optional<T>& slot = memo[mask];
    if (slot) return *slot;
    if (mask == 0) return slot.emplace(R::one());
    const std::size_t row = m - static_cast<std::size_t>(std::popcount(mask));
    T sum = R::zero();
    bool negative = false;
    for (std::size_t col = 0; col < m; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if ((mask & bit) == 0) continue;
      const T& entry = a.at(row, col);
      if (!R::is_zero(entry)) {
        const T& sub = self(self, mask & ~bit);
        if (!R::is_zero(sub)) {
          if (negative) {
            sum -= entry * sub;
          } else {
            sum += entry * sub;
          }
        }
      }
      negative = !negative;
    }
    return slot.emplace(std::move(sum));
  };
  return solve(solve, full);
}

/// Fraction-free Gaussian elimination. Pivot: first nonzero entry of the column at or below
/// the diagonal; a column without one means the determinant is zero. Every division is exact
/// in an integral domain, so a NotDivisible from the ring is a bug, not a data condition.
template <class T>
T det_bareiss(Matrix<T> a) {
  using R = RingTraits<T>;
  const std::size_t m = a.order();
  if (m == 0) return R::one();
  bool negate = false;
  T previous = R::one();
  for (std::size_t k = 0; k + 1 < m; ++k) {
    std::size_t pivot = k;
    while (pivot < m && R::is_zero(a.at(pivot, k))) ++pivot;
    if (pivot == m) return R::zero();
    if (pivot != k) {
      a.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        T numerator = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = R::exact_divide(numerator, previous);
      }
      a.at(i, k) = R::zero();
    }
    previous = a.at(k, k);
  }
  T result = a.at(m - 1, m - 1);
  if (negate) result = R::zero() - result;
  return result;
}

/// Leading principal minors det(A[0..k, 0..k]) for k = 0, 1, ... via Bareiss without pivoting.
/// Stops after the first zero minor, since later ones are not reachable without pivoting.
template <class T>
std::vector<T> leading_principal_minors(Matrix<T> a) {
  using R = RingTraits<T>;
  const std::size_t m = a.order();
  std::vector<T> minors;
  T previous = R::one();
  for (std::size_t k = 0; k < m; ++k) {
    minors.push_back(a.at(k, k));
    if (R::is_zero(a.at(k, k))) break;
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        T numerator = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = R::exact_divide(numerator, previous);
      }
    }
    previous = a.at(k, k);
  }
  return minors;
}

}  // namespace cayley
