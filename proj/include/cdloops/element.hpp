// Elements of the Cayley-Dickson loop Q_n.
//
// An element is stored as a sign bit plus an n-bit pattern. Bit j-1 of the
// pattern stands for the canonical generator i_j, so the positive element
// with pattern v is the basis unit e_v of the n-fold doubled algebra, which
// is also the left-to-right product of its generators in increasing order.
// The highest bit is the coordinate added by the last doubling step.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cdloops {

using Bits = std::uint64_t;

inline constexpr int kMaxLevel = 63;
// Levels up to this bound use a precomputed twist table.
inline constexpr int kMaxTableLevel = 6;

class LoopElement {
 public:
  // The identity of Q_0.
  constexpr LoopElement() = default;

  // Throws std::invalid_argument if level is out of range or bits do not fit.
  LoopElement(int level, bool negative, Bits bits);

  static LoopElement identity(int level);
  static LoopElement minus_one(int level);
  // i_index, 1 <= index <= level.
  static LoopElement generator(int level, int index);
  // Inverse of index(): bit 0 is the sign, the rest is the pattern.
  static LoopElement from_index(int level, std::size_t index);

  constexpr int level() const { return level_; }
  constexpr bool negative() const { return negative_; }
  constexpr Bits bits() const { return bits_; }

  // True for 1 and -1.
  constexpr bool is_real() const { return bits_ == 0; }
  constexpr bool top_bit() const {
    return level_ > 0 && ((bits_ >> (level_ - 1)) & 1U) != 0;
  }

  // Position in canonical order: (bits, sign).
  std::size_t index() const {
    return (static_cast<std::size_t>(bits_) << 1) | (negative_ ? 1U : 0U);
  }

  LoopElement operator-() const;

  // 1, 2 or 4.
  int order() const;

  friend constexpr bool operator==(const LoopElement&,
                                   const LoopElement&) = default;

  // Canonical order: level, then bits, then sign (+ before -).
  friend constexpr std::strong_ordering operator<=>(const LoopElement& a,
                                                    const LoopElement& b) {
    if (auto c = a.level_ <=> b.level_; c != 0) return c;
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.negative_ <=> b.negative_;
  }

 private:
  int level_ = 0;
  bool negative_ = false;
  Bits bits_ = 0;
};

// Number of elements of Q_n, 2^(n+1). Requires level < 63.
std::size_t loop_size(int level);

// Sign of e_v * e_w relative to e_(v xor w), as +1 or -1. Evaluated by
// peeling off the top coordinate:
//   (v',0)(w',0) -> s(v',w')
//   (v',0)(w',1) -> s(w',v')
//   (v',1)(w',0) -> s(v',w') c(w')
//   (v',1)(w',1) -> -s(w',v') c(w')
// where c(u) is -1 unless u = 0.
int twist(Bits v, Bits w, int level);

// Same value read from a lazily built per-level table (level <= 6).
int twist_cached(Bits v, Bits w, int level);

// All of Q_n in canonical order (1, -1, i1, -i1, i2, ...).
std::vector<LoopElement> loop_elements(int level);

LoopElement mul(const LoopElement& a, const LoopElement& b);
LoopElement conj(const LoopElement& a);
LoopElement inv(const LoopElement& a);
LoopElement neg(const LoopElement& a);
int order(const LoopElement& a);

// Zero-pads the pattern to a higher level.
LoopElement embed(const LoopElement& a, int level);

// (x, top) in Q_(n+1): the pattern of x with bit n set to `top`.
LoopElement lift(const LoopElement& x, int top);

// Grammar: element := ["-"] ("1" | gen ("*" gen)*), gen := "i" DIGITS,
// generator indices strictly increasing and at most `level`.
LoopElement parse_element(std::string_view text, int level);
std::string format_element(const LoopElement& a);

inline LoopElement operator*(const LoopElement& a, const LoopElement& b) {
  return mul(a, b);
}

}  // namespace cdloops
