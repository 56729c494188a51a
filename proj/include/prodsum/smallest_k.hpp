#pragma once

// s(p) for a prime p: the smallest arity k >= 3 at which p + k - 3 is
// representable, or 0 when no k qualifies. Termination rests on the bound
// 2^k + k + 3 <= p, which every all->=2 representation forces; the search
// may therefore restrict itself to parts >= 2 (a representation containing
// ones strips down to a shorter all->=2 one, so it can never be first).
//
// Two independent solvers are provided and must agree: a direct search of
// the representations of p + k - 3, and an enumeration of multiplicity
// profiles tested against their B-value.

#include <cstdint>
#include <utility>
#include <vector>

#include "prodsum/common.hpp"
#include "prodsum/forms.hpp"
#include "prodsum/parallel.hpp"
#include "prodsum/primes.hpp"
#include "prodsum/profiles.hpp"

namespace prodsum {

// Largest k with 2^k + k + 3 <= p; 2 when even k = 3 fails, making the
// search range [3, kmax] empty. Always <= floor(log2 p).
inline unsigned kmax_bound(u64 p) {
  unsigned best = 2;
  for (unsigned k = 3; k < 64; ++k) {
    u64 value = (u64{1} << k) + k + 3;  // k < 64 and p < 2^64 keep this exact
    if (value > p) break;
    best = k;
  }
  return best;
}

struct SmallestKResult {
  unsigned k = 0;  // 0 = no representable arity in [3, kmax_bound(p)]
  MultiplicityProfile witness;

  bool found() const noexcept { return k != 0; }

  friend bool operator==(const SmallestKResult& a, const SmallestKResult& b) {
    return a.k == b.k && a.witness == b.witness;
  }
};

namespace detail {

inline void require_prime(u64 p) {
  if (!is_prime(p)) throw not_prime("argument must be prime");
}

}  // namespace detail

// Ascends k = 3, 4, ... and searches the representations of p + k - 3 with
// all parts >= 2; the first arity with a hit wins. Among equal-arity
// witnesses the canonical (profile_less) minimum is reported.
inline SmallestKResult smallest_k_direct(u64 p) {
  detail::require_prime(p);
  unsigned kmax = kmax_bound(p);
  for (unsigned k = 3; k <= kmax; ++k) {
    u64 n = add_or_throw(p, k - 3u);
    MultiplicityProfile best;
    bool hit = false;
    for_each_representation(n, k, 2, [&](std::span<const u64> parts) {
      auto profile = MultiplicityProfile::from_parts(parts);
      if (!hit || profile_less(profile, best)) {
        best = std::move(profile);
        hit = true;
      }
      return true;
    });
    if (hit) return SmallestKResult{k, std::move(best)};
  }
  return SmallestKResult{};
}

namespace detail {

// Enumerates profiles of the given arity whose product term stays within
// budget (= p - 3; any completion past that exceeds p), testing each
// complete profile's B-value against p.
template <typename Hit>
void search_profiles(u64 p, u64 budget, u64 value_min, u64 slots, u64 prod, u64 weighted,
                     std::vector<MultiplicityProfile::Entry>& groups, Hit& hit) {
  if (slots == 0) {
    auto b = checked_add(prod, checked_add(weighted, 3).value_or(~u64{0}));
    if (b && *b == p) hit(groups);
    return;
  }
  for (u64 v = value_min;; ++v) {
    auto min_fill = checked_mul_pow(prod, v, slots);
    if (!min_fill || *min_fill > budget) break;
    u64 partial = prod;
    for (u64 t = 1; t <= slots; ++t) {
      partial *= v;  // stays <= min_fill <= budget
      auto w = checked_add(weighted, checked_mul(v - 1, t).value_or(~u64{0}));
      if (!w) break;  // B-value already past any 64-bit prime
      groups.emplace_back(v, t);
      search_profiles(p, budget, v + 1, slots - t, partial, *w, groups, hit);
      groups.pop_back();
    }
  }
}

}  // namespace detail

// Same answer as smallest_k_direct by a different route: enumerate
// multiplicity profiles per arity and compare B-values with p.
inline SmallestKResult smallest_k_profiles(u64 p) {
  detail::require_prime(p);
  unsigned kmax = kmax_bound(p);
  for (unsigned k = 3; k <= kmax; ++k) {
    u64 budget = p - 3;  // kmax >= 3 implies p >= 14
    MultiplicityProfile best;
    bool hit = false;
    std::vector<MultiplicityProfile::Entry> groups;
    auto on_hit = [&](const std::vector<MultiplicityProfile::Entry>& found) {
      MultiplicityProfile profile{std::vector<MultiplicityProfile::Entry>(found)};
      if (!hit || profile_less(profile, best)) {
        best = std::move(profile);
        hit = true;
      }
    };
    detail::search_profiles(p, budget, 2, k, 1, 0, groups, on_hit);
    if (hit) return SmallestKResult{k, std::move(best)};
  }
  return SmallestKResult{};
}

// s(1), ..., s(n_max) over the primes in index order; 0 stands for "no
// representable arity". Safe to evaluate in parallel per index.
inline std::vector<unsigned> s_sequence(u64 n_max, unsigned threads = 1) {
  std::vector<unsigned> out(n_max, 0);
  parallel_for_index(n_max, threads, [&](u64 i) {
    out[i] = smallest_k_direct(nth_prime(i + 1)).k;
  });
  return out;
}

}  // namespace prodsum
