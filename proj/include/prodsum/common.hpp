#pragma once

// Shared error types and overflow-checked 64-bit arithmetic.
// All arithmetic in this library is unsigned 64-bit; operations that could
// wrap report overflow instead (either via std::nullopt or std::overflow_error).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace prodsum {

using u64 = std::uint64_t;

struct invalid_arity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct invalid_min_part : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct not_prime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct inadmissible_spec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct unknown_sequence : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct checkpoint_corrupt : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::optional<u64> checked_add(u64 a, u64 b) noexcept {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<u64> checked_mul(u64 a, u64 b) noexcept {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

// a * b^e, nullopt on overflow
inline std::optional<u64> checked_mul_pow(u64 a, u64 b, u64 e) noexcept {
  u64 r = a;
  for (u64 i = 0; i < e; ++i) {
    auto m = checked_mul(r, b);
    if (!m) return std::nullopt;
    r = *m;
  }
  return r;
}

inline u64 add_or_throw(u64 a, u64 b) {
  auto r = checked_add(a, b);
  if (!r) throw std::overflow_error("integer overflow in addition");
  return *r;
}

inline u64 mul_or_throw(u64 a, u64 b) {
  auto r = checked_mul(a, b);
  if (!r) throw std::overflow_error("integer overflow in multiplication");
  return *r;
}

}  // namespace prodsum
