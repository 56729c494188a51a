#pragma once

// Resumable scan over prime indices recording s(n) results. The checkpoint
// is a plain text document:
//
//   format_version 1
//   next_n 13
//
//   1 2 0
//   ...
//   8 19 3 2^2,3^1
//
// One record per processed index: n, p_n, s_n, and for s_n > 0 the witness
// as comma-separated value^multiplicity pairs (the field is empty on zero
// lines). Files are written to a temporary name and renamed into place, and
// serialization is a pure function of the content, so a resumed scan ends
// byte-identical to an uninterrupted one.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "prodsum/common.hpp"
#include "prodsum/parallel.hpp"
#include "prodsum/primes.hpp"
#include "prodsum/profiles.hpp"
#include "prodsum/smallest_k.hpp"

namespace prodsum {

struct FoundRecord {
  u64 n = 0;
  u64 p = 0;
  unsigned k = 0;
  MultiplicityProfile witness;

  friend bool operator==(const FoundRecord& a, const FoundRecord& b) {
    return a.n == b.n && a.p == b.p && a.k == b.k && a.witness == b.witness;
  }
};

struct ScanCheckpoint {
  int format_version = 1;
  u64 next_n = 1;  // first unprocessed prime index
  std::vector<u64> zero_indices;
  std::vector<FoundRecord> found_records;

  friend bool operator==(const ScanCheckpoint& a, const ScanCheckpoint& b) {
    return a.format_version == b.format_version && a.next_n == b.next_n &&
           a.zero_indices == b.zero_indices && a.found_records == b.found_records;
  }
};

inline void validate_checkpoint(const ScanCheckpoint& cp) {
  if (cp.format_version != 1) throw checkpoint_corrupt("unsupported checkpoint format_version");
  if (cp.next_n < 1) throw checkpoint_corrupt("next_n must be >= 1");
  size_t zi = 0, fi = 0;
  for (u64 n = 1; n < cp.next_n; ++n) {
    bool is_zero = zi < cp.zero_indices.size() && cp.zero_indices[zi] == n;
    bool is_found = fi < cp.found_records.size() && cp.found_records[fi].n == n;
    if (is_zero == is_found)
      throw checkpoint_corrupt("records must cover every index below next_n exactly once");
    if (is_zero) {
      ++zi;
      continue;
    }
    const FoundRecord& rec = cp.found_records[fi++];
    if (rec.p != nth_prime(rec.n)) throw checkpoint_corrupt("record prime does not match its index");
    if (rec.k < 3 || rec.witness.arity() != rec.k)
      throw checkpoint_corrupt("record witness arity does not match its s-value");
    if (b_value(rec.witness) != rec.p) throw checkpoint_corrupt("record witness does not certify its prime");
  }
  if (zi != cp.zero_indices.size() || fi != cp.found_records.size())
    throw checkpoint_corrupt("records extend past next_n");
}

// Processes prime indices next_n .. next_n+budget-1 and appends the results.
// Splitting a range across calls yields the same checkpoint as one call.
inline ScanCheckpoint scan_zero_terms(ScanCheckpoint cp, u64 budget, unsigned threads = 1) {
  validate_checkpoint(cp);
  std::vector<SmallestKResult> results(budget);
  std::vector<u64> primes(budget);
  u64 first = cp.next_n;
  parallel_for_index(budget, threads, [&](u64 i) {
    primes[i] = nth_prime(first + i);
    results[i] = smallest_k_direct(primes[i]);
  });
  for (u64 i = 0; i < budget; ++i) {
    u64 n = first + i;
    if (results[i].found())
      cp.found_records.push_back({n, primes[i], results[i].k, std::move(results[i].witness)});
    else
      cp.zero_indices.push_back(n);
  }
  cp.next_n = add_or_throw(first, budget);
  return cp;
}

inline std::string serialize_checkpoint(const ScanCheckpoint& cp) {
  std::string out;
  out += "format_version " + std::to_string(cp.format_version) + "\n";
  out += "next_n " + std::to_string(cp.next_n) + "\n\n";
  size_t zi = 0, fi = 0;
  for (u64 n = 1; n < cp.next_n; ++n) {
    if (zi < cp.zero_indices.size() && cp.zero_indices[zi] == n) {
      ++zi;
      out += std::to_string(n) + " " + std::to_string(nth_prime(n)) + " 0\n";
    } else {
      const FoundRecord& rec = cp.found_records[fi++];
      out += std::to_string(n) + " " + std::to_string(rec.p) + " " + std::to_string(rec.k) + " " +
             profile_pairs_string(rec.witness) + "\n";
    }
  }
  return out;
}

inline ScanCheckpoint parse_checkpoint(std::istream& is) {
  ScanCheckpoint cp;
  std::string line;
  bool saw_version = false, saw_next = false;
  while (std::getline(is, line)) {
    if (line.empty()) break;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    try {
      if (key == "format_version") {
        std::string value;
        if (!(ls >> value)) throw checkpoint_corrupt("missing format_version value");
        cp.format_version = static_cast<int>(detail::parse_u64(value));
        saw_version = true;
      } else if (key == "next_n") {
        std::string value;
        if (!(ls >> value)) throw checkpoint_corrupt("missing next_n value");
        cp.next_n = detail::parse_u64(value);
        saw_next = true;
      } else {
        throw checkpoint_corrupt("unknown checkpoint header key: " + key);
      }
    } catch (const std::invalid_argument& e) {
      throw checkpoint_corrupt(std::string("malformed checkpoint header: ") + e.what());
    }
  }
  if (!saw_version || !saw_next) throw checkpoint_corrupt("checkpoint header incomplete");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string n_str, p_str, s_str, witness_str;
    if (!(ls >> n_str >> p_str >> s_str)) throw checkpoint_corrupt("malformed checkpoint record");
    bool has_witness = static_cast<bool>(ls >> witness_str);
    std::string extra;
    if (ls >> extra) throw checkpoint_corrupt("trailing fields in checkpoint record");
    try {
      u64 n = detail::parse_u64(n_str);
      u64 p = detail::parse_u64(p_str);
      u64 s = detail::parse_u64(s_str);
      if (s == 0) {
        if (has_witness) throw checkpoint_corrupt("zero record carries a witness");
        if (p != nth_prime(n)) throw checkpoint_corrupt("record prime does not match its index");
        cp.zero_indices.push_back(n);
      } else {
        if (!has_witness) throw checkpoint_corrupt("nonzero record missing its witness");
        if (s > ~0u) throw checkpoint_corrupt("implausible s-value");
        cp.found_records.push_back(
            {n, p, static_cast<unsigned>(s), profile_from_pairs_string(witness_str)});
      }
    } catch (const std::invalid_argument& e) {
      throw checkpoint_corrupt(std::string("malformed checkpoint record: ") + e.what());
    }
  }
  validate_checkpoint(cp);
  return cp;
}

inline ScanCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw checkpoint_corrupt("cannot open checkpoint file: " + path.string());
  return parse_checkpoint(is);
}

inline void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& cp) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write checkpoint file: " + tmp.string());
    os << serialize_checkpoint(cp);
    os.flush();
    if (!os) throw std::runtime_error("failed writing checkpoint file: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace prodsum
