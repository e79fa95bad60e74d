#pragma once
// Prime scanning and range verification: fan primes out across workers,
// re-sequence results into prime order on a single writer, serialize stable
// reports, and checkpoint scan progress for resumable byte-identical output.
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nt/quotients.hpp"
#include "nt/registry.hpp"

namespace nt {

enum class ScanKind { wieferich, super_wieferich, wilson, thm14 };
const char* to_string(ScanKind k);
std::optional<ScanKind> parse_scan_kind(std::string_view name);  // "super-wieferich", ...

struct ScanConfig {
  ScanKind kind = ScanKind::wieferich;
  uint32_t limit = 1000;         // classify odd primes p <= limit
  uint32_t cross_check_cap = 0;  // run both strategies for p <= cap
  unsigned jobs = 1;
  std::string out_path;          // JSONL report file; empty = no file
  std::string checkpoint_path;   // empty = no checkpointing (needs out_path)
  uint32_t checkpoint_every = 64;  // primes between checkpoint rewrites
  bool resume = false;           // continue from an existing checkpoint
  uint64_t stop_after = 0;       // classify at most this many primes this run (0 = all)
};

struct ScanOutcome {
  std::vector<ScanRecord> records;  // records produced this run, ordered by p
  std::vector<uint32_t> flagged;    // primes (this run) whose kind-flag is set
  uint64_t processed = 0;           // primes classified this run
  bool complete = false;            // the whole range is done (incl. resumed part)
  bool disagreement = false;        // any strategies_agreed == false this run
};

// Strategy selection and classification for one prime under a scan config.
ScanRecord scan_one(uint32_t p, const ScanConfig& cfg);
// The flag a scan of this kind is looking for.
bool kind_flag(ScanKind k, const ScanRecord& r);

// Stable serializations. JSONL key order: p, flags{...}, strategies_agreed,
// digit0, digit1, q2_digit0, q2_digit1, wilson_residue; -1 digits are null.
std::string to_jsonl(const ScanRecord& r);
std::string scan_csv_header();
std::string to_csv(const ScanRecord& r);

// Runs the scan. Every serialized record line (in prime order) is passed to
// line_sink after being written to out_path (when set). Checkpointing writes
// {range, last_completed_p, record_count, content_hash} atomically next to
// the report; resume verifies the existing report against the checkpoint
// (ChecksumMismatch on corruption of either) and skips completed primes.
ScanOutcome run_scan(const ScanConfig& cfg,
                     const std::function<void(std::string_view)>& line_sink = {});

// ---- range verification (the CLI's verify half) ----

struct VerifyConfig {
  uint32_t lo = 5, hi = 300;                  // odd primes in [lo, hi]
  std::optional<Tier> tier;                   // nullopt = both tiers
  std::vector<const CheckDescriptor*> checks; // empty = the full catalog
  unsigned mod_cap = 3;
  unsigned jobs = 1;
};

struct VerifyOutcome {
  std::vector<CheckResult> results;  // ordered by (p, check id)
  bool all_pass = true;
};

// JSONL key order: check_id, p, mod_power, lhs, rhs, pass, elapsed_ms, details.
std::string to_jsonl(const CheckResult& r);
std::string verify_csv_header();
std::string to_csv(const CheckResult& r);

VerifyOutcome run_verify(const VerifyConfig& cfg,
                         const std::function<void(const CheckResult&)>& sink = {});

}  // namespace nt
