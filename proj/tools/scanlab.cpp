// scanlab: verify the congruence catalog over prime ranges, scan for
// Wieferich / super-Wieferich / Wilson primes with cross-checks, and render
// kernel tables for inspection.
#include <CLI11.hpp>
#include <fmt/format.h>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "nt/bernoulli.hpp"
#include "nt/comb.hpp"
#include "nt/scan.hpp"

using namespace nt;

namespace {

constexpr uint32_t kScanLimitCap = 1u << 21;  // digit-2 Fermat quotients need p^3 words

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<uint32_t, uint32_t> parse_prime_range(const std::string& s) {
  auto parse_u32 = [&](const std::string& part) {
    size_t used = 0;
    unsigned long v = std::stoul(part, &used);
    if (used != part.size() || v > 0xffffffffUL) throw std::invalid_argument(part);
    return uint32_t(v);
  };
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      uint32_t v = parse_u32(s);
      return {v, v};
    }
    return {parse_u32(s.substr(0, dots)), parse_u32(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError(fmt::format("malformed prime range '{}' (expected A..B)", s));
  }
}

// Expand a user-supplied check name: an exact id, a family prefix like "A7"
// (matching A7a-... through A7d-...), or a head like "B19" (id up to the
// first dash).
std::vector<const CheckDescriptor*> expand_check_name(const std::string& name) {
  std::vector<const CheckDescriptor*> out;
  for (const auto& d : list_checks()) {
    if (d.id == name) {
      out.push_back(&d);
      continue;
    }
    if (d.id.rfind(name, 0) != 0) continue;
    char next = d.id[name.size()];
    if (next == '-')
      out.push_back(&d);
    else if (std::islower(static_cast<unsigned char>(next)) && name.size() + 1 < d.id.size() &&
             d.id[name.size() + 1] == '-')
      out.push_back(&d);
  }
  if (out.empty()) throw UsageError(fmt::format("unknown check '{}'", name));
  return out;
}

struct VerifyArgs {
  std::string primes;
  std::string tier = "all";
  std::vector<std::string> checks;
  unsigned mod_max = 3;
  unsigned jobs = 1;
  std::string out;
  std::string format = "jsonl";
};

int cmd_verify(const VerifyArgs& a) {
  auto [lo, hi] = parse_prime_range(a.primes);
  if (odd_primes_in(lo, hi).empty())
    throw UsageError(fmt::format("range {}..{} contains no odd prime", lo, hi));

  VerifyConfig cfg;
  cfg.lo = lo;
  cfg.hi = hi;
  if (a.tier == "A")
    cfg.tier = Tier::A;
  else if (a.tier == "B")
    cfg.tier = Tier::B;
  cfg.mod_cap = a.mod_max;
  cfg.jobs = a.jobs;
  for (const auto& name : a.checks)
    for (const CheckDescriptor* d : expand_check_name(name)) cfg.checks.push_back(d);

  std::ofstream file;
  FILE* console = stdout;
  bool to_file = !a.out.empty();
  if (to_file) {
    file.open(a.out, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error(fmt::format("cannot open '{}'", a.out));
  }
  auto emit = [&](const std::string& line) {
    if (to_file)
      file << line << '\n';
    else
      fmt::print(console, "{}\n", line);
  };

  bool csv = a.format == "csv";
  if (csv) emit(verify_csv_header());
  auto oc = run_verify(cfg, [&](const CheckResult& r) { emit(csv ? to_csv(r) : to_jsonl(r)); });

  size_t failed = 0;
  for (const auto& r : oc.results) failed += !r.pass;
  fmt::print(stderr, "verify: {} checks over primes in [{}, {}]: {} passed, {} failed\n",
             oc.results.size(), lo, hi, oc.results.size() - failed, failed);
  return oc.all_pass ? 0 : 1;
}

struct ScanArgs {
  std::string kind;
  uint32_t limit = 0;
  uint32_t cross_check_cap = 0;
  unsigned jobs = 1;
  std::string out;
  std::string checkpoint;
  uint32_t checkpoint_every = 64;
  bool resume = false;
  uint64_t stop_after = 0;
  std::string format = "jsonl";
};

int cmd_scan(const ScanArgs& a) {
  auto kind = parse_scan_kind(a.kind);
  if (!kind) throw UsageError(fmt::format("unknown scan kind '{}'", a.kind));
  if (a.limit >= kScanLimitCap)
    throw UsageError(fmt::format("scan limit {} exceeds the word budget (p < {})", a.limit,
                                 kScanLimitCap));
  bool csv = a.format == "csv";
  if (csv && !a.checkpoint.empty())
    throw UsageError("--format csv cannot be combined with --checkpoint (the checkpoint "
                     "contract covers the jsonl report)");

  ScanConfig cfg;
  cfg.kind = *kind;
  cfg.limit = a.limit;
  cfg.cross_check_cap = a.cross_check_cap;
  cfg.jobs = a.jobs;
  cfg.checkpoint_path = a.checkpoint;
  cfg.checkpoint_every = a.checkpoint_every;
  cfg.resume = a.resume;
  cfg.stop_after = a.stop_after;

  ScanOutcome oc;
  if (csv) {
    std::ofstream file;
    bool to_file = !a.out.empty();
    if (to_file) {
      file.open(a.out, std::ios::binary | std::ios::trunc);
      if (!file) throw std::runtime_error(fmt::format("cannot open '{}'", a.out));
    }
    auto emit = [&](const std::string& line) {
      if (to_file)
        file << line << '\n';
      else
        fmt::print("{}\n", line);
    };
    emit(scan_csv_header());
    oc = run_scan(cfg);  // keeps records in memory; no jsonl file
    for (const auto& r : oc.records) emit(to_csv(r));
  } else {
    cfg.out_path = a.out;
    if (a.out.empty())
      oc = run_scan(cfg, [](std::string_view line) { fmt::print("{}\n", line); });
    else
      oc = run_scan(cfg);
  }

  std::string flagged = "none";
  if (!oc.flagged.empty()) {
    flagged.clear();
    for (size_t i = 0; i < oc.flagged.size(); ++i)
      flagged += fmt::format("{}{}", i ? ", " : "", oc.flagged[i]);
  }
  fmt::print(stderr, "scan {}: {} primes classified up to {}{}; flagged: {}; {}\n",
             to_string(cfg.kind), oc.processed, cfg.limit,
             oc.complete ? "" : " (stopped early)", flagged,
             oc.disagreement ? "STRATEGY DISAGREEMENT (see records)" : "strategies agreed");
  return oc.disagreement ? 1 : 0;
}

struct TableArgs {
  std::string kind;
  unsigned n = 0;
  bool exact = false;
  uint64_t mod = 0;
};

int cmd_table(const TableArgs& a) {
  bool exact = a.exact || a.mod == 0;  // --exact is the default
  if (a.mod == 1) throw UsageError("--mod must be at least 2");

  if (a.kind == "eulerian") {
    if (a.n < 1) throw UsageError("eulerian table needs n >= 1");
    if (exact) {
      if (a.n > 20) throw UsageError("exact eulerian rows are limited to n <= 20");
      auto row = eulerian_row_exact(a.n);
      std::string line, even;
      for (size_t m = 0; m < row.size(); ++m) {
        line += fmt::format("{}{}", m ? " " : "", row[m].get_str());
        if (m % 2 == 0) even += fmt::format("{}{}", even.empty() ? "" : " ", row[m].get_str());
      }
      fmt::print("{}\n", line);
      fmt::print("even columns: {}\n", even);
    } else {
      auto row = eulerian_row_mod(a.n, a.mod);
      std::string line;
      for (size_t m = 0; m < row.size(); ++m) line += fmt::format("{}{}", m ? " " : "", row[m]);
      fmt::print("{}\n", line);
    }
  } else if (a.kind == "stirling") {
    if (a.n < 1) throw UsageError("stirling table needs n >= 1");
    std::string line;
    if (exact) {
      if (a.n > 25) throw UsageError("exact stirling rows are limited to n <= 25");
      auto row = stirling_row_exact(a.n);
      for (size_t s = 0; s < row.size(); ++s)
        line += fmt::format("{}{}", s ? " " : "", row[s].get_str());
    } else {
      auto row = stirling_row_mod(a.n, a.mod);
      for (size_t s = 0; s < row.size(); ++s) line += fmt::format("{}{}", s ? " " : "", row[s]);
    }
    fmt::print("{}\n", line);
  } else if (a.kind == "bernoulli") {
    if (exact) {
      if (a.n > 120) throw UsageError("exact Bernoulli numbers are limited to n <= 120");
      fmt::print("{}\n", bernoulli_exact(a.n).get_str());
    } else {
      if (a.mod > 0xffffffffUL || !is_prime(uint32_t(a.mod)) || a.mod == 2)
        throw UsageError("bernoulli --mod needs an odd prime modulus");
      if (a.n > 120) throw UsageError("Bernoulli numbers are limited to n <= 120");
      fmt::print("{}\n", reduce_rational(bernoulli_exact(a.n), uint32_t(a.mod), 1).v);
    }
  } else {
    throw UsageError(fmt::format("unknown table kind '{}'", a.kind));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scanlab: congruence catalog verification and prime-class scanning"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key-value config file (flag names as keys; "
                                 "subcommand options as [verify]/[scan]/[table] sections)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "evaluate catalog checks over a prime range");
  verify->add_option("--primes", va.primes, "odd-prime range A..B (or a single prime)")
      ->required();
  verify->add_option("--tier", va.tier, "restrict to one tier")
      ->check(CLI::IsMember({"A", "B", "all"}));
  verify->add_option("--checks", va.checks,
                     "comma-separated check ids or family prefixes (e.g. A2,B19,A7)")
      ->delimiter(',');
  verify->add_option("--mod-max", va.mod_max, "largest modulus power to evaluate")
      ->check(CLI::Range(1u, 3u));
  verify->add_option("--jobs", va.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", va.out, "write the report here instead of stdout");
  verify->add_option("--format", va.format, "report format")
      ->check(CLI::IsMember({"jsonl", "csv"}));

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "classify primes and flag a target class");
  scan->add_option("--kind", sa.kind, "wieferich | super-wieferich | wilson | thm14")
      ->required();
  scan->add_option("--limit", sa.limit, "classify odd primes up to this bound")->required();
  scan->add_option("--cross-check-cap", sa.cross_check_cap,
                   "run both strategies (direct and combinatorial) for p <= this");
  scan->add_option("--jobs", sa.jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", sa.out, "write the report here instead of stdout");
  scan->add_option("--checkpoint", sa.checkpoint,
                   "checkpoint file for resumable scans (requires --out, jsonl format)");
  scan->add_option("--checkpoint-every", sa.checkpoint_every,
                   "primes between checkpoint rewrites")
      ->check(CLI::PositiveNumber);
  scan->add_flag("--resume", sa.resume, "continue a checkpointed scan");
  scan->add_option("--stop-after", sa.stop_after,
                   "classify at most this many primes this run, then checkpoint and exit "
                   "(deterministic interruption)");
  scan->add_option("--format", sa.format, "report format")
      ->check(CLI::IsMember({"jsonl", "csv"}));

  TableArgs ta;
  auto* table = app.add_subcommand("table", "render a kernel table row");
  table->add_option("kind", ta.kind, "eulerian | stirling | bernoulli")->required();
  table->add_option("n", ta.n, "row index / Bernoulli index")->required();
  auto* exact_flag = table->add_flag("--exact", ta.exact, "exact integer/rational values");
  table->add_option("--mod", ta.mod, "render the row at this modulus")->excludes(exact_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(va);
    if (scan->parsed()) return cmd_scan(sa);
    return cmd_table(ta);
  } catch (const UsageError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  } catch (const ChecksumMismatch& e) {
    fmt::print(stderr, "checksum mismatch: {}\n", e.what());
    return 3;
  } catch (const StrategyDisagreement& e) {
    fmt::print(stderr, "finding: {}\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    fmt::print(stderr, "internal error: {}\n", e.what());
    return 3;
  }
}
