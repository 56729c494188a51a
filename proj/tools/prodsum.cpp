// Command line front end: counting and listing representations, the
// smallest-arity solvers, sequence tables, prime progressions, and the
// checkpointed scan.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prodsum/prodsum.hpp"

namespace {

using prodsum::u64;

std::string join_parts(std::span<const u64> parts) {
  std::string out;
  for (u64 x : parts) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

void print_smallest_k(const prodsum::SmallestKResult& result) {
  if (result.found())
    std::cout << "s=" << result.k << " witness=" << prodsum::format_witness(result.witness)
              << "\n";
  else
    std::cout << "s=0\n";
}

int run_count(u64 n, unsigned k, u64 min_part) {
  u64 count = 0;
  prodsum::for_each_representation(n, k, min_part, [&](std::span<const u64>) {
    ++count;
    return true;
  });
  std::cout << count << "\n";
  return 0;
}

int run_enumerate(u64 n, unsigned k, u64 min_part) {
  prodsum::for_each_representation(n, k, min_part, [&](std::span<const u64> parts) {
    std::cout << join_parts(parts) << "\n";
    return true;
  });
  return 0;
}

int run_smallest_k(u64 p, const std::string& method) {
  if (method == "direct") {
    print_smallest_k(prodsum::smallest_k_direct(p));
    return 0;
  }
  if (method == "profiles") {
    print_smallest_k(prodsum::smallest_k_profiles(p));
    return 0;
  }
  auto direct = prodsum::smallest_k_direct(p);
  auto profiles = prodsum::smallest_k_profiles(p);
  if (!(direct == profiles)) {
    std::cerr << "error: solver disagreement at p=" << p << " (direct s=" << direct.k
              << ", profiles s=" << profiles.k << ")\n";
    return 1;
  }
  print_smallest_k(direct);
  return 0;
}

int run_table(const std::string& name_text, u64 count, const std::string& format, unsigned threads,
              const std::string& output) {
  auto table = prodsum::generate_table(prodsum::parse_sequence_name(name_text), count, threads);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!output.empty()) {
    file.open(output, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file: " + output);
    os = &file;
  }
  if (format == "plain") {
    for (size_t i = 0; i < table.values.size(); ++i) {
      if (i) *os << ' ';
      *os << table.values[i];
    }
    *os << "\n";
  } else if (format == "csv") {
    prodsum::write_csv(*os, table);
  } else {
    prodsum::write_json(*os, table);
  }
  return 0;
}

int run_scan_nu(int nu, u64 limit) {
  auto primes = nu == 3 ? prodsum::nu3_zero_primes(limit) : prodsum::nu4_zero_primes(limit);
  for (u64 p : primes) std::cout << p << "\n";
  return 0;
}

int run_scan_checkpoint(u64 limit, const std::string& checkpoint, bool resume, u64 chunk,
                        unsigned threads) {
  if (limit < 1) throw std::invalid_argument("--limit must be >= 1");
  if (chunk < 1) throw std::invalid_argument("--chunk must be >= 1");
  std::filesystem::path path(checkpoint);
  prodsum::ScanCheckpoint cp;
  if (std::filesystem::exists(path)) {
    if (!resume) {
      std::cerr << "error: checkpoint file already exists (use --resume): " << path.string()
                << "\n";
      return 1;
    }
    cp = prodsum::load_checkpoint(path);
  }
  while (cp.next_n <= limit) {
    u64 budget = std::min(chunk, limit - cp.next_n + 1);
    cp = prodsum::scan_zero_terms(std::move(cp), budget, threads);
    prodsum::save_checkpoint(path, cp);
    std::cerr << "saved checkpoint, next_n=" << cp.next_n << "\n";
  }
  std::cout << "next_n " << cp.next_n << "\n";
  std::cout << "zeros";
  for (u64 n : cp.zero_indices) std::cout << ' ' << n;
  std::cout << "\n";
  return 0;
}

int run_progression(int family, u64 t, u64 m_min, u64 m_max, const std::string& format) {
  prodsum::ProgressionSpec spec{
      family == 3 ? prodsum::ProgressionFamily::form3 : prodsum::ProgressionFamily::form4, t};
  prodsum::validate_progression(spec);
  if (m_min < 2) throw std::invalid_argument("--m-min must be >= 2");
  if (m_max < m_min) throw std::invalid_argument("--m-max must be >= --m-min");
  nlohmann::json rows = nlohmann::json::array();
  if (format == "csv") std::cout << "m,term,prime,witness\n";
  for (u64 m = m_min; m <= m_max; ++m) {
    u64 term = prodsum::progression_term(spec, m);
    auto witness = prodsum::progression_witness(spec, m);
    bool prime = prodsum::is_prime(term);
    std::string parts = join_parts(witness.parts);
    if (format == "plain")
      std::cout << m << ' ' << term << ' ' << (prime ? 1 : 0) << ' ' << parts << "\n";
    else if (format == "csv")
      std::cout << m << ',' << term << ',' << (prime ? 1 : 0) << ",\"" << parts << "\"\n";
    else
      rows.push_back({{"m", m}, {"term", term}, {"prime", prime}, {"witness", witness.parts}});
  }
  if (format == "json") std::cout << rows.dump() << "\n";
  return 0;
}

int run_verify() {
  bool all_ok = true;
  auto report = [&](bool ok, const char* what) {
    std::cout << (ok ? "ok - " : "FAIL - ") << what << "\n";
    if (!ok) all_ok = false;
  };

  const std::vector<unsigned> expected = {0, 0, 0, 0, 0, 0, 0, 3, 4, 3, 0, 0, 4, 0, 3, 0,
                                          3, 3, 0, 4, 3, 3, 4, 3, 4, 0, 3, 5, 3, 4, 3};
  report(prodsum::s_sequence(expected.size()) == expected, "smallest-k sequence, first 31 terms");

  auto d97 = prodsum::smallest_k_direct(97);
  auto p97 = prodsum::smallest_k_profiles(97);
  auto d101 = prodsum::smallest_k_direct(101);
  auto p101 = prodsum::smallest_k_profiles(101);
  bool pair_ok = d97 == p97 && d97.k == 4 && prodsum::format_witness(d97.witness) == "2^2*3*7" &&
                 d101 == p101 && !d101.found();
  report(pair_ok, "solver agreement at p=97 and p=101");

  bool nu2_ok = true;
  for (u64 n = 1; n <= 100000; ++n) {
    if (prodsum::nu2_is_zero(n) != prodsum::is_prime(n + 1)) {
      nu2_ok = false;
      break;
    }
  }
  report(nu2_ok, "nu2 zeros match primes for n <= 100000");

  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representations of n by x1*...*xk + x1+...+xk"};
  app.require_subcommand(1);

  u64 count_n = 0, enum_n = 0;
  unsigned count_k = 0, enum_k = 0;
  u64 count_min = 1, enum_min = 1;
  auto* cmd_count = app.add_subcommand("count", "Count the representations of n at arity k");
  cmd_count->add_option("n", count_n, "Target value")->required();
  cmd_count->add_option("--k,-k", count_k, "Arity (number of parts, >= 2)")->required();
  cmd_count->add_option("--min-part", count_min, "Smallest allowed part (1 or 2)");

  auto* cmd_enum = app.add_subcommand("enumerate", "List the representations of n at arity k");
  cmd_enum->add_option("n", enum_n, "Target value")->required();
  cmd_enum->add_option("--k,-k", enum_k, "Arity (number of parts, >= 2)")->required();
  cmd_enum->add_option("--min-part", enum_min, "Smallest allowed part (1 or 2)");

  u64 sk_p = 0;
  std::string sk_method = "both";
  auto* cmd_sk = app.add_subcommand("smallest-k", "Smallest arity s(p) for a prime p");
  cmd_sk->add_option("p", sk_p, "Prime to solve for")->required();
  cmd_sk->add_option("--method", sk_method, "Solver: direct, profiles, or both (default)")
      ->check(CLI::IsMember({"direct", "profiles", "both"}));

  std::string table_name, table_format = "plain", table_output;
  u64 table_count = 0;
  unsigned table_threads = prodsum::default_thread_count();
  auto* cmd_table = app.add_subcommand("table", "Print a sequence table");
  cmd_table->add_option("name", table_name, "Sequence: nu2, nu3, nu4, or smallest_k")
      ->required()
      ->check(CLI::IsMember({"nu2", "nu3", "nu4", "smallest_k"}));
  cmd_table->add_option("--count", table_count, "Number of terms")->required();
  cmd_table->add_option("--format", table_format, "Output format (default plain)")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  cmd_table->add_option("--threads", table_threads, "Worker threads");
  cmd_table->add_option("--output", table_output, "Write to a file instead of stdout");

  u64 scan_limit = 0, scan_chunk = 32;
  int scan_nu = 0;
  std::string scan_checkpoint;
  bool scan_resume = false;
  unsigned scan_threads = prodsum::default_thread_count();
  auto* cmd_scan = app.add_subcommand(
      "scan", "Scan primes: s(n) over prime indices with a checkpoint, or the nu-zero primes");
  cmd_scan->add_option("--limit", scan_limit, "Last prime index (checkpoint mode) or largest prime (--nu mode)")
      ->required();
  auto* opt_nu = cmd_scan->add_option(
      "--nu", scan_nu, "List primes p with nu3(p)=0 (--nu 3) or nu4(p+1)=0 (--nu 4)");
  auto* opt_ckpt = cmd_scan->add_option("--checkpoint", scan_checkpoint, "Checkpoint file path");
  auto* opt_resume = cmd_scan->add_flag("--resume", scan_resume, "Continue from the checkpoint");
  auto* opt_chunk = cmd_scan->add_option("--chunk", scan_chunk, "Indices per checkpoint save");
  cmd_scan->add_option("--threads", scan_threads, "Worker threads");
  opt_nu->excludes(opt_ckpt);
  opt_nu->excludes(opt_resume);
  opt_nu->excludes(opt_chunk);

  int prog_family = 0;
  u64 prog_t = 0, prog_m_min = 2, prog_m_max = 0;
  std::string prog_format = "plain";
  auto* cmd_prog = app.add_subcommand("progression", "Terms and witnesses of a progression");
  cmd_prog->add_option("--family", prog_family, "Progression family: 3 or 4")
      ->required()
      ->check(CLI::IsMember({3, 4}));
  cmd_prog->add_option("--t,-t", prog_t, "Family parameter t (>= 2)")->required();
  cmd_prog->add_option("--m-min", prog_m_min, "First index m (>= 2)");
  cmd_prog->add_option("--m-max", prog_m_max, "Last index m")->required();
  cmd_prog->add_option("--format", prog_format, "Output format (default plain)")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  auto* cmd_verify = app.add_subcommand("verify", "Run the built-in self checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (cmd_count->parsed()) return run_count(count_n, count_k, count_min);
    if (cmd_enum->parsed()) return run_enumerate(enum_n, enum_k, enum_min);
    if (cmd_sk->parsed()) return run_smallest_k(sk_p, sk_method);
    if (cmd_table->parsed())
      return run_table(table_name, table_count, table_format, table_threads, table_output);
    if (cmd_scan->parsed()) {
      if (scan_nu != 0) {
        if (scan_nu != 3 && scan_nu != 4) throw std::invalid_argument("--nu must be 3 or 4");
        return run_scan_nu(scan_nu, scan_limit);
      }
      if (scan_checkpoint.empty())
        throw std::invalid_argument("scan needs either --nu or --checkpoint");
      return run_scan_checkpoint(scan_limit, scan_checkpoint, scan_resume, scan_chunk,
                                 scan_threads);
    }
    if (cmd_prog->parsed())
      return run_progression(prog_family, prog_t, prog_m_min, prog_m_max, prog_format);
    if (cmd_verify->parsed()) return run_verify();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
