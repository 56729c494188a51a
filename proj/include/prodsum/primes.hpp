#pragma once

// Primality, on-demand prime indexing, and the two arithmetic-progression
// families whose prime members are guaranteed representable:
//   form3: (2t+1)m + (t+2)  -> p      = F_3(2, t, m)
//   form4: (4t+1)m + (t+3)  -> p + 1  = F_4(2, 2, t, m)

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <vector>

#include "prodsum/common.hpp"
#include "prodsum/forms.hpp"

namespace prodsum {

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) noexcept {
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline bool strong_probable_prime(u64 n, u64 a) noexcept {
  a %= n;
  if (a == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

// Deterministic over the whole 64-bit range: trial division by the primes
// below 40, then Miller-Rabin with a base set exhaustively verified for
// every n < 2^64.
inline bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
    if (!detail::strong_probable_prime(n, a)) return false;
  return true;
}

// Grow-only prime list backed by a segmented sieve. Growth doubles the
// sieved range until the request is covered and is serialized behind a
// mutex; readers always observe a fully built prefix.
class PrimeTable {
 public:
  // 1-based: nth(1) == 2.
  u64 nth(u64 n) {
    if (n == 0) throw std::invalid_argument("prime index starts at 1");
    std::lock_guard<std::mutex> lock(mu_);
    ensure_count(n);
    return primes_[n - 1];
  }

  std::vector<u64> primes_up_to(u64 limit) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_limit(limit);
    auto end = std::upper_bound(primes_.begin(), primes_.end(), limit);
    return std::vector<u64>(primes_.begin(), end);
  }

  u64 count_up_to(u64 limit) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_limit(limit);
    auto end = std::upper_bound(primes_.begin(), primes_.end(), limit);
    return static_cast<u64>(end - primes_.begin());
  }

 private:
  static u64 isqrt(u64 x) noexcept {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r > x / r) --r;
    while ((r + 1) <= x / (r + 1)) ++r;
    return r;
  }

  void ensure_limit(u64 limit) {
    if (limit <= sieved_to_) return;
    u64 root = isqrt(limit);
    if (root > sieved_to_) ensure_limit(root);
    constexpr u64 kSegment = 1 << 16;
    std::vector<char> composite(kSegment);
    u64 low = sieved_to_ + 1;
    while (low <= limit) {
      u64 span = std::min<u64>(kSegment - 1, limit - low);
      u64 high = low + span;
      std::fill(composite.begin(), composite.begin() + span + 1, 0);
      for (u64 p : primes_) {
        if (p > high / p) break;  // p * p > high
        u64 m = p * p;
        if (m < low) {
          u64 offset = (p - low % p) % p;
          if (offset > span) continue;  // next multiple falls past the segment
          m = low + offset;
        }
        while (true) {
          composite[m - low] = 1;
          if (m > high - p) break;
          m += p;
        }
      }
      for (u64 v = std::max<u64>(low, 2); v <= high; ++v)
        if (!composite[v - low]) primes_.push_back(v);
      if (high == limit) break;
      low = high + 1;
    }
    sieved_to_ = limit;
  }

  void ensure_count(u64 n) {
    if (primes_.size() >= n) return;
    u64 target = upper_bound_for_nth(n);
    while (true) {
      ensure_limit(target);
      if (primes_.size() >= n) return;
      target = mul_or_throw(target, 2);
    }
  }

  // p_n <= n(ln n + ln ln n) for n >= 6
  static u64 upper_bound_for_nth(u64 n) {
    if (n < 6) return 13;
    double dn = static_cast<double>(n);
    double bound = dn * (std::log(dn) + std::log(std::log(dn)));
    if (bound >= 1.8e19) throw std::overflow_error("nth prime exceeds 64-bit range");
    return static_cast<u64>(bound) + 1;
  }

  std::mutex mu_;
  std::vector<u64> primes_;
  u64 sieved_to_ = 1;
};

inline PrimeTable& shared_prime_table() {
  static PrimeTable table;
  return table;
}

inline u64 nth_prime(u64 n) { return shared_prime_table().nth(n); }

enum class ProgressionFamily { form3, form4 };

struct ProgressionSpec {
  ProgressionFamily family;
  u64 t;
};

// form3 needs t != 1 (mod 3): otherwise 3 | 2t+1 and 3 | t+2, so every term
// is divisible by 3. form4 likewise excludes t == 8 (mod 11), the normalized
// residue of t == -3 (mod 11).
inline bool progression_admissible(const ProgressionSpec& spec) noexcept {
  if (spec.t < 2) return false;
  if (spec.family == ProgressionFamily::form3) return spec.t % 3 != 1;
  return spec.t % 11 != 8;
}

inline void validate_progression(const ProgressionSpec& spec) {
  if (!progression_admissible(spec))
    throw inadmissible_spec("progression parameters fail the admissibility condition");
}

inline u64 progression_term(const ProgressionSpec& spec, u64 m) {
  validate_progression(spec);
  if (m < 2) throw std::invalid_argument("progression index m must be >= 2");
  if (spec.family == ProgressionFamily::form3)
    return add_or_throw(mul_or_throw(mul_or_throw(2, spec.t) + 1, m), spec.t + 2);
  return add_or_throw(mul_or_throw(mul_or_throw(4, spec.t) + 1, m), spec.t + 3);
}

// The sorted tuple witnessing the term's representability: form3 gives
// eval_form == term at arity 3, form4 gives eval_form == term + 1 at arity 4.
inline Representation progression_witness(const ProgressionSpec& spec, u64 m) {
  validate_progression(spec);
  if (m < 2) throw std::invalid_argument("progression index m must be >= 2");
  std::vector<u64> parts;
  if (spec.family == ProgressionFamily::form3)
    parts = {2, spec.t, m};
  else
    parts = {2, 2, spec.t, m};
  std::sort(parts.begin(), parts.end());
  return Representation(std::move(parts));
}

// Primes p <= limit with nu_3(p) == 0.
inline std::vector<u64> nu3_zero_primes(u64 limit) {
  std::vector<u64> out;
  for (u64 p : shared_prime_table().primes_up_to(limit))
    if (count_representations(p, 3) == 0) out.push_back(p);
  return out;
}

// Primes p <= limit with nu_4(p + 1) == 0.
inline std::vector<u64> nu4_zero_primes(u64 limit) {
  std::vector<u64> out;
  for (u64 p : shared_prime_table().primes_up_to(limit))
    if (count_representations(add_or_throw(p, 1), 4) == 0) out.push_back(p);
  return out;
}

}  // namespace prodsum
