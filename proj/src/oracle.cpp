#include "cdloops/oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cdloops::oracle {

namespace {

using Coords = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("algebra coordinate overflow in addition");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("algebra coordinate overflow in subtraction");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("algebra coordinate overflow in product");
  }
  return r;
}

Coords conj_rec(std::span<const std::int64_t> u) {
  if (u.size() == 1) return {u[0]};
  const std::size_t h = u.size() / 2;
  Coords out = conj_rec(u.first(h));
  out.reserve(u.size());
  for (std::int64_t b : u.subspan(h)) out.push_back(checked_sub(0, b));
  return out;
}

Coords mul_rec(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  if (u.size() == 1) return {checked_mul(u[0], v[0])};
  const std::size_t h = u.size() / 2;
  const auto a = u.first(h), b = u.subspan(h);
  const auto c = v.first(h), d = v.subspan(h);
  const Coords c_star = conj_rec(c);
  const Coords d_star = conj_rec(d);

  const Coords ac = mul_rec(a, c);
  const Coords dsb = mul_rec(d_star, b);
  const Coords da = mul_rec(d, a);
  const Coords bcs = mul_rec(b, c_star);

  Coords out(u.size());
  for (std::size_t k = 0; k < h; ++k) {
    out[k] = checked_sub(ac[k], dsb[k]);
    out[h + k] = checked_add(da[k], bcs[k]);
  }
  return out;
}

void require_same_level(const AlgebraVector& u, const AlgebraVector& v) {
  if (u.level() != v.level()) {
    throw std::invalid_argument("algebra level mismatch: " +
                                std::to_string(u.level()) + " vs " +
                                std::to_string(v.level()));
  }
}

}  // namespace

AlgebraVector::AlgebraVector(int level) : level_(level) {
  if (level < 0 || level > kMaxOracleLevel) {
    throw std::invalid_argument("oracle level " + std::to_string(level) +
                                " out of range");
  }
  coords_.assign(std::size_t{1} << level, 0);
}

AlgebraVector::AlgebraVector(int level, std::vector<std::int64_t> coords)
    : AlgebraVector(level) {
  if (coords.size() != coords_.size()) {
    throw std::invalid_argument("expected " + std::to_string(coords_.size()) +
                                " coordinates, got " +
                                std::to_string(coords.size()));
  }
  coords_ = std::move(coords);
}

bool AlgebraVector::is_zero() const {
  for (std::int64_t c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

AlgebraVector algebra_mul(const AlgebraVector& u, const AlgebraVector& v) {
  require_same_level(u, v);
  return {u.level(), mul_rec(u.coords(), v.coords())};
}

AlgebraVector algebra_add(const AlgebraVector& u, const AlgebraVector& v) {
  require_same_level(u, v);
  AlgebraVector out(u.level());
  for (std::size_t k = 0; k < u.coords().size(); ++k) {
    out[k] = checked_add(u[k], v[k]);
  }
  return out;
}

AlgebraVector algebra_sub(const AlgebraVector& u, const AlgebraVector& v) {
  require_same_level(u, v);
  AlgebraVector out(u.level());
  for (std::size_t k = 0; k < u.coords().size(); ++k) {
    out[k] = checked_sub(u[k], v[k]);
  }
  return out;
}

AlgebraVector algebra_neg(const AlgebraVector& u) {
  return algebra_sub(AlgebraVector(u.level()), u);
}

AlgebraVector algebra_conj(const AlgebraVector& u) {
  return {u.level(), conj_rec(u.coords())};
}

std::int64_t norm_sq(const AlgebraVector& u) {
  return algebra_mul(u, algebra_conj(u))[0];
}

AlgebraVector basis(const LoopElement& a) {
  AlgebraVector out(a.level());
  out[static_cast<std::size_t>(a.bits())] = a.negative() ? -1 : 1;
  return out;
}

}  // namespace cdloops::oracle
