// Exact integer arithmetic in the Cayley-Dickson algebra A_n.
//
// A vector of A_n has 2^n integer coordinates indexed by bit pattern; the
// first half is the component a and the second half the component b of the
// pair (a, b). Multiplication follows the doubling rule
//   (a, b)(c, d) = (ac - d*b, da + bc*)
// literally, so this module serves as an independent check on the sign
// recursion in element.hpp. Overflow raises std::overflow_error.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdloops/element.hpp"

namespace cdloops::oracle {

// Vectors are limited to this level to keep 2^n coordinates reasonable.
inline constexpr int kMaxOracleLevel = 16;

class AlgebraVector {
 public:
  // Zero vector of A_level.
  explicit AlgebraVector(int level);
  AlgebraVector(int level, std::vector<std::int64_t> coords);

  int level() const { return level_; }
  std::span<const std::int64_t> coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;

  friend bool operator==(const AlgebraVector&, const AlgebraVector&) = default;

 private:
  int level_;
  std::vector<std::int64_t> coords_;
};

AlgebraVector algebra_mul(const AlgebraVector& u, const AlgebraVector& v);
AlgebraVector algebra_add(const AlgebraVector& u, const AlgebraVector& v);
AlgebraVector algebra_sub(const AlgebraVector& u, const AlgebraVector& v);
AlgebraVector algebra_neg(const AlgebraVector& u);
AlgebraVector algebra_conj(const AlgebraVector& u);

// The real coordinate of u u*, which is the sum of squared coordinates.
std::int64_t norm_sq(const AlgebraVector& u);

// The vector with a single +-1 coordinate at a.bits().
AlgebraVector basis(const LoopElement& a);

}  // namespace cdloops::oracle
