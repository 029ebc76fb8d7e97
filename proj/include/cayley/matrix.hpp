#pragma once

#include "cayley/errors.hpp"
#include "cayley/integer.hpp"
#include "cayley/polynomial.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

/// Dense square matrix over a commutative ring T, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;

  explicit Matrix(std::size_t order) : order_(order), entries_(order * order) {}

  std::size_t order() const noexcept { return order_; }

  T& at(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
  const T& at(std::size_t row, std::size_t col) const { return entries_[row * order_ + col]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < order_; ++c) std::swap(at(a, c), at(b, c));
  }

  /// Matrix with row `row` and column `col` deleted.
  Matrix minor(std::size_t row, std::size_t col) const {
    Matrix m(order_ - 1);
    for (std::size_t r = 0, mr = 0; r < order_; ++r) {
      if (r == row) continue;
      for (std::size_t c = 0, mc = 0; c < order_; ++c) {
        if (c == col) continue;
        m.at(mr, mc++) = at(r, c);
      }
      ++mr;
    }
    return m;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(order_);
    for (std::size_t r = 0; r < order_; ++r) {
      for (std::size_t c = 0; c < order_; ++c) out.at(r, c) = f(at(r, c));
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> entries_;
};

using SymbolicMatrix = Matrix<Polynomial>;
using IntegerMatrix = Matrix<Integer>;

/// Ring operations the determinant algorithms need beyond + - *.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Polynomial> {
  static Polynomial zero() { return {}; }
  static Polynomial one() { return Polynomial(1); }
  static bool is_zero(const Polynomial& p) { return p.is_zero(); }
  static Polynomial exact_divide(const Polynomial& a, const Polynomial& b) { return cayley::exact_divide(a, b); }
};

template <>
struct RingTraits<Integer> {
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static bool is_zero(const Integer& v) { return v == 0; }
  static Integer exact_divide(const Integer& a, const Integer& b) {
    if (b == 0) throw Error(ErrorCode::kInvalidArgument, "integer division by zero");
    Integer q;
    Integer r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw Error(ErrorCode::kNotDivisible, a.str() + " / " + b.str());
    return q;
  }
};

}  // namespace cayley
