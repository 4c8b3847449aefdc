#pragma once

#include <cstdint>

#include "polarlib/error.hpp"

namespace polar::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throwInput("overflow", "integer overflow in formula evaluation");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throwInput("overflow", "integer overflow in formula evaluation");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throwInput("overflow", "integer overflow in formula evaluation");
  return r;
}

inline std::int64_t pow(std::int64_t a, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

}  // namespace polar::checked
