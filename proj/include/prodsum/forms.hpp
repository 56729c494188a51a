#pragma once

// Core machinery for the form  x1*...*xk + x1+...+xk  over nondecreasing
// positive integers: evaluation, enumeration and counting of the
// representations of a given n at a given arity k.

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "prodsum/common.hpp"

namespace prodsum {

// A nondecreasing tuple (x1,...,xk), every part >= 1, k >= 2.
// k == 2 is the degenerate two-variable case ij+i+j; the general form
// starts at k == 3 but shares all the machinery.
struct Representation {
  std::vector<u64> parts;

  Representation() = default;
  explicit Representation(std::vector<u64> p) : parts(std::move(p)) {}

  unsigned arity() const noexcept { return static_cast<unsigned>(parts.size()); }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.parts == b.parts;
  }
  friend bool operator<(const Representation& a, const Representation& b) {
    return a.parts < b.parts;
  }
};

inline void validate_representation(std::span<const u64> parts) {
  if (parts.size() < 2) throw invalid_arity("representation needs at least 2 parts");
  u64 prev = 1;
  for (u64 x : parts) {
    if (x < 1) throw std::invalid_argument("representation parts must be >= 1");
    if (x < prev) throw std::invalid_argument("representation parts must be nondecreasing");
    prev = x;
  }
}

// Product of all parts plus the sum of all parts. Overflow raises
// std::overflow_error instead of wrapping.
inline u64 eval_form(std::span<const u64> parts) {
  validate_representation(parts);
  u64 prod = 1, sum = 0;
  for (u64 x : parts) {
    prod = mul_or_throw(prod, x);
    sum = add_or_throw(sum, x);
  }
  return add_or_throw(prod, sum);
}

inline u64 eval_form(const Representation& rep) { return eval_form(std::span<const u64>(rep.parts)); }

namespace detail {

// Depth-first search over nondecreasing prefixes. A candidate value v at a
// position with r parts still open is viable only if completing with all v's
// stays <= n (the completion value is strictly increasing in v, so the first
// failure ends the loop). The last part is not searched: it is the solution
// of  prefix_product*x + x = n - prefix_sum,  kept only when that divides
// exactly and respects the ordering.
template <typename Visit>
bool search_representations(u64 n, unsigned k, u64 min_part, std::vector<u64>& prefix,
                            u64 prod, u64 sum, Visit& visit) {
  unsigned depth = static_cast<unsigned>(prefix.size());
  if (depth == k - 1) {
    u64 lo = prefix.empty() ? min_part : prefix.back();
    if (n <= sum) return true;
    u64 rhs = n - sum;
    u64 div = prod + 1;  // prod <= n < 2^64 so no overflow
    if (rhs % div == 0) {
      u64 x = rhs / div;
      if (x >= lo) {
        prefix.push_back(x);
        bool keep_going = visit(std::span<const u64>(prefix));
        prefix.pop_back();
        if (!keep_going) return false;
      }
    }
    return true;
  }
  u64 rem = k - depth;
  for (u64 v = prefix.empty() ? min_part : prefix.back();; ++v) {
    auto min_prod = checked_mul_pow(prod, v, rem);
    if (!min_prod) break;
    auto min_tail = checked_mul(rem, v);
    if (!min_tail) break;
    auto min_total = checked_add(*min_prod, checked_add(sum, *min_tail).value_or(~u64{0}));
    if (!min_total || *min_total > n) break;
    prefix.push_back(v);
    bool keep_going = search_representations(n, k, min_part, prefix, prod * v, sum + v, visit);
    prefix.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

// Visits every representation of n at arity k with all parts >= min_part,
// in lexicographic order. The visitor returns false to stop early.
template <typename Visit>
void for_each_representation(u64 n, unsigned k, u64 min_part, Visit visit) {
  if (k < 2) throw invalid_arity("arity must be >= 2");
  if (min_part != 1 && min_part != 2) throw invalid_min_part("min_part must be 1 or 2");
  std::vector<u64> prefix;
  prefix.reserve(k);
  detail::search_representations(n, k, min_part, prefix, 1, 0, visit);
}

inline std::vector<Representation> enumerate_representations(u64 n, unsigned k, u64 min_part = 1) {
  std::vector<Representation> out;
  for_each_representation(n, k, min_part, [&](std::span<const u64> parts) {
    out.emplace_back(std::vector<u64>(parts.begin(), parts.end()));
    return true;
  });
  return out;
}

// nu_k(n): the number of representations, counted without materializing them.
inline u64 count_representations(u64 n, unsigned k) {
  u64 count = 0;
  for_each_representation(n, k, 1, [&](std::span<const u64>) {
    ++count;
    return true;
  });
  return count;
}

// True iff n has no two-variable representation ij+i+j, 0 < i <= j.
// Equivalent to n+1 being prime.
inline bool nu2_is_zero(u64 n) {
  bool any = false;
  for_each_representation(n, 2, 1, [&](std::span<const u64>) {
    any = true;
    return false;
  });
  return !any;
}

// Prepends ones until the arity reaches k2; the value of the form grows by
// exactly k2 - k1.
inline Representation lift_representation(const Representation& rep, unsigned k2) {
  validate_representation(rep.parts);
  if (k2 <= rep.arity()) throw invalid_arity("lift target arity must exceed the current arity");
  std::vector<u64> parts(k2 - rep.arity(), 1);
  parts.insert(parts.end(), rep.parts.begin(), rep.parts.end());
  return Representation(std::move(parts));
}

}  // namespace prodsum
