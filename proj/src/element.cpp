#include "cdloops/element.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdloops {

namespace {

void check_level(int level) {
  if (level < 0 || level > kMaxLevel) {
    throw std::invalid_argument("level " + std::to_string(level) +
                                " outside [0, 63]");
  }
}

constexpr Bits low_mask(int level) {
  return level == 0 ? Bits{0} : (~Bits{0} >> (64 - level));
}

struct TwistTable {
  int level = 0;
  std::vector<std::int8_t> signs;  // row-major, 2^level x 2^level

  explicit TwistTable(int n) : level(n) {
    const std::size_t dim = std::size_t{1} << n;
    signs.resize(dim * dim);
    for (Bits v = 0; v < dim; ++v) {
      for (Bits w = 0; w < dim; ++w) {
        signs[v * dim + w] = static_cast<std::int8_t>(twist(v, w, n));
      }
    }
  }

  int at(Bits v, Bits w) const { return signs[(v << level) | w]; }
};

const TwistTable& table_for(int level) {
  static std::array<std::once_flag, kMaxTableLevel + 1> once;
  static std::array<std::unique_ptr<TwistTable>, kMaxTableLevel + 1> tables;
  std::call_once(once[level], [level] {
    tables[level] = std::make_unique<TwistTable>(level);
  });
  return *tables[level];
}

}  // namespace

LoopElement::LoopElement(int level, bool negative, Bits bits)
    : level_(level), negative_(negative), bits_(bits) {
  check_level(level);
  if ((bits & ~low_mask(level)) != 0) {
    throw std::invalid_argument("bit pattern does not fit level " +
                                std::to_string(level));
  }
}

LoopElement LoopElement::identity(int level) { return {level, false, 0}; }

LoopElement LoopElement::minus_one(int level) { return {level, true, 0}; }

LoopElement LoopElement::generator(int level, int index) {
  check_level(level);
  if (index < 1 || index > level) {
    throw std::out_of_range("generator index i" + std::to_string(index) +
                            " outside level " + std::to_string(level));
  }
  return {level, false, Bits{1} << (index - 1)};
}

LoopElement LoopElement::from_index(int level, std::size_t index) {
  return {level, (index & 1U) != 0, static_cast<Bits>(index >> 1)};
}

LoopElement LoopElement::operator-() const {
  LoopElement r = *this;
  r.negative_ = !r.negative_;
  return r;
}

int LoopElement::order() const {
  if (bits_ != 0) return 4;
  return negative_ ? 2 : 1;
}

std::size_t loop_size(int level) {
  if (level < 0 || level >= 63) {
    throw std::invalid_argument("loop size overflows at level " +
                                std::to_string(level));
  }
  return std::size_t{1} << (level + 1);
}

std::vector<LoopElement> loop_elements(int level) {
  const std::size_t size = loop_size(level);
  std::vector<LoopElement> out;
  out.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    out.push_back(LoopElement::from_index(level, k));
  }
  return out;
}

int twist(Bits v, Bits w, int level) {
  if (level == 0) return 1;
  const Bits rest = low_mask(level - 1);
  const bool v_top = ((v >> (level - 1)) & 1U) != 0;
  const bool w_top = ((w >> (level - 1)) & 1U) != 0;
  const Bits vl = v & rest;
  const Bits wl = w & rest;
  const int c = wl == 0 ? 1 : -1;
  if (!v_top && !w_top) return twist(vl, wl, level - 1);
  if (!v_top) return twist(wl, vl, level - 1);
  if (!w_top) return twist(vl, wl, level - 1) * c;
  return -twist(wl, vl, level - 1) * c;
}

int twist_cached(Bits v, Bits w, int level) {
  if (level > kMaxTableLevel) return twist(v, w, level);
  return table_for(level).at(v, w);
}

LoopElement mul(const LoopElement& a, const LoopElement& b) {
  if (a.level() != b.level()) {
    throw std::invalid_argument("level mismatch: " + std::to_string(a.level()) +
                                " vs " + std::to_string(b.level()));
  }
  const int s = twist_cached(a.bits(), b.bits(), a.level());
  const bool negative = (a.negative() != b.negative()) != (s < 0);
  return {a.level(), negative, a.bits() ^ b.bits()};
}

LoopElement conj(const LoopElement& a) { return a.is_real() ? a : -a; }

LoopElement inv(const LoopElement& a) { return conj(a); }

LoopElement neg(const LoopElement& a) { return -a; }

int order(const LoopElement& a) { return a.order(); }

LoopElement embed(const LoopElement& a, int level) {
  if (level < a.level()) {
    throw std::invalid_argument("cannot embed level " +
                                std::to_string(a.level()) + " into level " +
                                std::to_string(level));
  }
  return {level, a.negative(), a.bits()};
}

LoopElement lift(const LoopElement& x, int top) {
  const int m = x.level();
  return {m + 1, x.negative(), x.bits() | (static_cast<Bits>(top & 1) << m)};
}

LoopElement parse_element(std::string_view text, int level) {
  check_level(level);
  const std::string original(text);
  auto fail = [&](const std::string& why) -> LoopElement {
    throw std::invalid_argument("malformed element '" + original + "': " + why);
  };

  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) return fail("empty");
  if (text == "1") return {level, negative, 0};

  Bits bits = 0;
  int last = 0;
  while (true) {
    if (text.empty() || text.front() != 'i') return fail("expected 'i<j>'");
    text.remove_prefix(1);
    int index = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), index);
    if (ec != std::errc{} || ptr == text.data()) return fail("missing index");
    text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    if (index < 1) return fail("generator index must be positive");
    if (index > level) {
      throw std::out_of_range("generator i" + std::to_string(index) +
                              " exceeds level " + std::to_string(level));
    }
    if (index <= last) return fail("generators must be strictly increasing");
    last = index;
    bits |= Bits{1} << (index - 1);
    if (text.empty()) break;
    if (text.front() != '*') return fail("expected '*'");
    text.remove_prefix(1);
  }
  return {level, negative, bits};
}

std::string format_element(const LoopElement& a) {
  std::string out = a.negative() ? "-" : "";
  if (a.bits() == 0) return out + "1";
  bool first = true;
  for (int j = 0; j < a.level(); ++j) {
    if (((a.bits() >> j) & 1U) == 0) continue;
    if (!first) out += '*';
    out += 'i';
    out += std::to_string(j + 1);
    first = false;
  }
  return out;
}

}  // namespace cdloops
