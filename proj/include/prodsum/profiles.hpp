#pragma once

// Grouped form of an all->=2 representation: each distinct value v with its
// multiplicity t_v. A profile with arity k = sum t_v witnesses a prime p
// exactly when  prod v^t_v + sum (v-1)t_v + 3 == p  (its B-value), which is
// the same identity as eval_form == p + k - 3 on the expanded tuple.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prodsum/common.hpp"
#include "prodsum/forms.hpp"

namespace prodsum {

class MultiplicityProfile {
 public:
  // (value, multiplicity), strictly increasing values
  using Entry = std::pair<u64, u64>;

  MultiplicityProfile() = default;

  explicit MultiplicityProfile(std::vector<Entry> entries) : entries_(std::move(entries)) {
    u64 prev = 1;
    for (const auto& [value, count] : entries_) {
      if (value < 2) throw std::invalid_argument("profile values must be >= 2");
      if (value <= prev) throw std::invalid_argument("profile values must be strictly increasing");
      if (count < 1) throw std::invalid_argument("profile multiplicities must be >= 1");
      prev = value;
    }
  }

  // Groups a nondecreasing all->=2 tuple.
  static MultiplicityProfile from_parts(std::span<const u64> parts) {
    std::vector<Entry> entries;
    for (u64 x : parts) {
      if (!entries.empty() && entries.back().first == x)
        ++entries.back().second;
      else
        entries.emplace_back(x, 1);
    }
    return MultiplicityProfile(std::move(entries));
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  u64 arity() const noexcept {
    u64 k = 0;
    for (const auto& e : entries_) k += e.second;
    return k;
  }

  u64 max_value() const noexcept { return entries_.empty() ? 0 : entries_.back().first; }

  std::vector<u64> to_parts() const {
    std::vector<u64> parts;
    for (const auto& [value, count] : entries_)
      parts.insert(parts.end(), count, value);
    return parts;
  }

  friend bool operator==(const MultiplicityProfile& a, const MultiplicityProfile& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

// prod v^t_v + sum (v-1) t_v + 3, overflow-checked.
inline u64 b_value(const MultiplicityProfile& profile) {
  u64 prod = 1, weighted = 0;
  for (const auto& [value, count] : profile.entries()) {
    auto p = checked_mul_pow(prod, value, count);
    if (!p) throw std::overflow_error("integer overflow in profile product");
    prod = *p;
    weighted = add_or_throw(weighted, mul_or_throw(value - 1, count));
  }
  return add_or_throw(prod, add_or_throw(weighted, 3));
}

// Canonical witness order: arity first, then largest value, then the
// (value, multiplicity) sequences lexicographically. Both solvers break
// ties among equal-arity witnesses with this order.
inline bool profile_less(const MultiplicityProfile& a, const MultiplicityProfile& b) {
  u64 ka = a.arity(), kb = b.arity();
  if (ka != kb) return ka < kb;
  u64 ma = a.max_value(), mb = b.max_value();
  if (ma != mb) return ma < mb;
  return a.entries() < b.entries();
}

// Compact rendering: value^multiplicity joined by '*', ascending by value,
// with ^1 omitted. {2:2, 3:1, 7:1} -> "2^2*3*7".
inline std::string format_witness(const MultiplicityProfile& profile) {
  std::string out;
  for (const auto& [value, count] : profile.entries()) {
    if (!out.empty()) out += '*';
    out += std::to_string(value);
    if (count > 1) {
      out += '^';
      out += std::to_string(count);
    }
  }
  return out;
}

// Checkpoint-file rendering: explicit value^multiplicity pairs joined by
// commas. {2:2, 3:1} -> "2^2,3^1".
inline std::string profile_pairs_string(const MultiplicityProfile& profile) {
  std::string out;
  for (const auto& [value, count] : profile.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(value);
    out += '^';
    out += std::to_string(count);
  }
  return out;
}

namespace detail {
inline u64 parse_u64(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer field");
  u64 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer field");
    u64 digit = static_cast<u64>(c - '0');
    v = add_or_throw(mul_or_throw(v, 10), digit);
  }
  return v;
}
}  // namespace detail

inline MultiplicityProfile profile_from_pairs_string(std::string_view text) {
  std::vector<MultiplicityProfile::Entry> entries;
  while (!text.empty()) {
    size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    size_t caret = item.find('^');
    if (caret == std::string_view::npos) throw std::invalid_argument("profile pair missing '^'");
    entries.emplace_back(detail::parse_u64(item.substr(0, caret)),
                         detail::parse_u64(item.substr(caret + 1)));
  }
  return MultiplicityProfile(std::move(entries));
}

}  // namespace prodsum
