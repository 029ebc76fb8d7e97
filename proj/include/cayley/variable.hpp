#pragma once

#include "cayley/errors.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>

namespace cayley {

/// Variable of the polynomial ring: a distance d_{ij} (i < j) or a tower variable t_k (k >= 2).
///
/// The total order puts every distance before every tower variable, distances
/// lexicographically by (i, j) and tower variables by k. The packed code is
/// chosen so that comparing codes realizes exactly that order.
class VarId {
 public:
  enum class Kind : std::uint8_t { kDist, kTau };

  static constexpr unsigned kMaxIndex = (1U << 15) - 1;

  static VarId dist(unsigned i, unsigned j) {
    if (!(i < j) || j > kMaxIndex) {
      throw Error(ErrorCode::kInvalidArgument,
                  "distance variable needs 0 <= i < j, got d_" + std::to_string(i) + "_" +
                      std::to_string(j));
    }
    return VarId((static_cast<std::uint32_t>(i) << 15) | j);
  }

  /// d_{ij} with the indices given in either order.
  static VarId dist_unordered(unsigned a, unsigned b) { return a < b ? dist(a, b) : dist(b, a); }

  static VarId tau(unsigned k) {
    if (k < 2 || k > kMaxIndex) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tower variable needs k >= 2, got t_" + std::to_string(k));
    }
    return VarId(kTauBit | k);
  }

  Kind kind() const noexcept { return (code_ & kTauBit) != 0 ? Kind::kTau : Kind::kDist; }
  bool is_dist() const noexcept { return kind() == Kind::kDist; }
  bool is_tau() const noexcept { return kind() == Kind::kTau; }

  unsigned i() const noexcept { return (code_ >> 15) & kMaxIndex; }
  unsigned j() const noexcept { return code_ & kMaxIndex; }
  unsigned k() const noexcept { return code_ & kMaxIndex; }

  std::uint32_t code() const noexcept { return code_; }

  std::string name() const {
    if (is_tau()) return "t_" + std::to_string(k());
    return "d_" + std::to_string(i()) + "_" + std::to_string(j());
  }

  friend auto operator<=>(const VarId&, const VarId&) = default;

 private:
  static constexpr std::uint32_t kTauBit = 1U << 31;

  explicit VarId(std::uint32_t code) : code_(code) {}

  std::uint32_t code_;
};

using VarSet = std::set<VarId>;

}  // namespace cayley

template <>
struct std::hash<cayley::VarId> {
  std::size_t operator()(const cayley::VarId& v) const noexcept {
    return std::hash<std::uint32_t>{}(v.code());
  }
};
