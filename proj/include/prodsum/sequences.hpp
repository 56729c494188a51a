#pragma once

// Desk-scale tables of the representation-count sequences and of the
// smallest-arity sequence. Values are always recomputed; the OEIS ids are
// attached as labels only.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "prodsum/common.hpp"
#include "prodsum/forms.hpp"
#include "prodsum/parallel.hpp"
#include "prodsum/smallest_k.hpp"

namespace prodsum {

enum class SequenceName { nu2, nu3, nu4, smallest_k };

inline const char* to_string(SequenceName name) noexcept {
  switch (name) {
    case SequenceName::nu2: return "nu2";
    case SequenceName::nu3: return "nu3";
    case SequenceName::nu4: return "nu4";
    case SequenceName::smallest_k: return "smallest_k";
  }
  return "?";
}

inline SequenceName parse_sequence_name(std::string_view text) {
  if (text == "nu2") return SequenceName::nu2;
  if (text == "nu3") return SequenceName::nu3;
  if (text == "nu4") return SequenceName::nu4;
  if (text == "smallest_k") return SequenceName::smallest_k;
  throw unknown_sequence("unknown sequence name: " + std::string(text));
}

inline const char* oeis_label(SequenceName name) noexcept {
  switch (name) {
    case SequenceName::nu2: return "A072670";
    case SequenceName::nu3: return "A260803";
    case SequenceName::nu4: return "A260804";
    case SequenceName::smallest_k: return "A260965";
  }
  return "?";
}

struct SequenceTable {
  SequenceName name;
  u64 offset = 1;
  std::vector<u64> values;
};

inline SequenceTable generate_table(SequenceName name, u64 count, unsigned threads = 1) {
  SequenceTable table{name, 1, std::vector<u64>(count, 0)};
  switch (name) {
    case SequenceName::nu2:
    case SequenceName::nu3:
    case SequenceName::nu4: {
      unsigned k = name == SequenceName::nu2 ? 2 : name == SequenceName::nu3 ? 3 : 4;
      parallel_for_index(count, threads, [&](u64 i) {
        table.values[i] = count_representations(i + 1, k);
      });
      break;
    }
    case SequenceName::smallest_k: {
      auto s = s_sequence(count, threads);
      for (u64 i = 0; i < count; ++i) table.values[i] = s[i];
      break;
    }
  }
  return table;
}

inline void write_csv(std::ostream& os, const SequenceTable& table) {
  os << "index,value\n";
  for (u64 i = 0; i < table.values.size(); ++i)
    os << table.offset + i << ',' << table.values[i] << '\n';
}

inline void write_json(std::ostream& os, const SequenceTable& table) {
  nlohmann::json j{
      {"name", to_string(table.name)},
      {"oeis", oeis_label(table.name)},
      {"offset", table.offset},
      {"values", table.values},
  };
  os << j.dump() << '\n';
}

}  // namespace prodsum
