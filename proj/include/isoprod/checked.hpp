#pragma once

#include <cstdint>
#include <numeric>
#include <tuple>

#include "isoprod/error.hpp"

// 64-bit integer helpers that throw instead of wrapping.
namespace isoprod::checked {

[[noreturn]] inline void overflow(const char* op) {
  throw Error(ErrorCode::kArithmeticOverflow,
              std::string("integer overflow in ") + op);
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

/// a*x + b*y
inline std::int64_t fma2(std::int64_t a, std::int64_t x, std::int64_t b,
                         std::int64_t y) {
  return add(mul(a, x), mul(b, y));
}

/// Least nonnegative residue; n > 0.
inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// Floor division; b != 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) overflow("gcd");
  return std::gcd(a, b);
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = gcd(a, b);
  std::int64_t r = mul(a / g, b);
  return r < 0 ? -r : r;
}

/// Returns (d, x, y) with d = gcd(a, b) >= 0 and d = a*x + b*y.
/// |x| <= |b|/d and |y| <= |a|/d when both are nonzero.
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(
    std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, sub(old_r, mul(q, r)));
    std::tie(old_s, s) = std::make_tuple(s, sub(old_s, mul(q, s)));
    std::tie(old_t, t) = std::make_tuple(t, sub(old_t, mul(q, t)));
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace isoprod::checked
