#include "nt/scan.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace nt {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;

void fnv_update(uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
}

std::string hash_hex(uint64_t h) { return fmt::format("{:016x}", h); }

std::string range_string(const ScanConfig& cfg) {
  return fmt::format("{}:3..{}", to_string(cfg.kind), cfg.limit);
}

struct Checkpoint {
  std::string range;
  uint32_t last_completed_p = 0;
  uint64_t record_count = 0;
  std::string content_hash;
};

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ChecksumMismatch(fmt::format("cannot read checkpoint '{}'", path));
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ChecksumMismatch(fmt::format("corrupt checkpoint '{}': {}", path, e.what()));
  }
  if (!j.is_object() || !j.contains("range") || !j["range"].is_string() ||
      !j.contains("last_completed_p") || !j["last_completed_p"].is_number_unsigned() ||
      !j.contains("record_count") || !j["record_count"].is_number_unsigned() ||
      !j.contains("content_hash") || !j["content_hash"].is_string())
    throw ChecksumMismatch(fmt::format("corrupt checkpoint '{}': missing or mistyped fields", path));
  Checkpoint ck;
  ck.range = j["range"].get<std::string>();
  ck.last_completed_p = j["last_completed_p"].get<uint32_t>();
  ck.record_count = j["record_count"].get<uint64_t>();
  ck.content_hash = j["content_hash"].get<std::string>();
  return ck;
}

void write_checkpoint(const ScanConfig& cfg, uint32_t last_p, uint64_t count, uint64_t hash) {
  ordered_json j;
  j["range"] = range_string(cfg);
  j["last_completed_p"] = last_p;
  j["record_count"] = count;
  j["content_hash"] = hash_hex(hash);
  std::string tmp = cfg.checkpoint_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(fmt::format("cannot write checkpoint '{}'", tmp));
    out << j.dump() << '\n';
  }
  fs::rename(tmp, cfg.checkpoint_path);
}

// Verify the existing report against the checkpointed prefix: the first
// record_count lines must hash to content_hash; anything after them (written
// past the last checkpoint) is discarded so the resumed run re-emits it.
void verify_and_trim_report(const std::string& path, uint64_t record_count,
                            const std::string& expect_hash, uint64_t& hash_out) {
  std::string content;
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      if (record_count == 0) return;  // nothing written yet is consistent
      throw ChecksumMismatch(fmt::format("report '{}' missing but checkpoint has {} records",
                                         path, record_count));
    }
    content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  size_t pos = 0;
  for (uint64_t i = 0; i < record_count; ++i) {
    size_t nl = content.find('\n', pos);
    if (nl == std::string::npos)
      throw ChecksumMismatch(
          fmt::format("report '{}' has {} lines, checkpoint expects {}", path, i, record_count));
    pos = nl + 1;
  }
  uint64_t h = kFnvOffset;
  fnv_update(h, std::string_view(content).substr(0, pos));
  if (hash_hex(h) != expect_hash)
    throw ChecksumMismatch(fmt::format("report '{}' does not match checkpoint hash", path));
  if (pos != content.size()) fs::resize_file(path, pos);
  hash_out = h;
}

void json_digit(ordered_json& j, const char* key, int64_t v) {
  if (v >= 0)
    j[key] = v;
  else
    j[key] = nullptr;
}

std::string csv_field(int64_t v) { return v >= 0 ? fmt::format("{}", v) : std::string(); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

const char* to_string(ScanKind k) {
  switch (k) {
    case ScanKind::wieferich: return "wieferich";
    case ScanKind::super_wieferich: return "super-wieferich";
    case ScanKind::wilson: return "wilson";
    case ScanKind::thm14: return "thm14";
  }
  return "?";
}

std::optional<ScanKind> parse_scan_kind(std::string_view name) {
  if (name == "wieferich") return ScanKind::wieferich;
  if (name == "super-wieferich" || name == "super_wieferich") return ScanKind::super_wieferich;
  if (name == "wilson") return ScanKind::wilson;
  if (name == "thm14") return ScanKind::thm14;
  return std::nullopt;
}

ScanRecord scan_one(uint32_t p, const ScanConfig& cfg) {
  Strategy st;
  if (cfg.kind == ScanKind::thm14)
    st = p <= cfg.cross_check_cap ? Strategy::both : Strategy::combinatorial;
  else
    st = p <= cfg.cross_check_cap ? Strategy::both : Strategy::direct;
  return classify_prime(p, st);
}

bool kind_flag(ScanKind k, const ScanRecord& r) {
  switch (k) {
    case ScanKind::wieferich: return r.flags.wieferich;
    case ScanKind::super_wieferich: return r.flags.super_wieferich;
    case ScanKind::wilson: return r.flags.wilson;
    case ScanKind::thm14: return r.flags.thm14_condition;
  }
  return false;
}

std::string to_jsonl(const ScanRecord& r) {
  ordered_json j;
  j["p"] = r.p;
  j["flags"] = ordered_json{{"wieferich", r.flags.wieferich},
                            {"super_wieferich", r.flags.super_wieferich},
                            {"wilson", r.flags.wilson},
                            {"thm14_condition", r.flags.thm14_condition}};
  j["strategies_agreed"] = r.strategies_agreed;
  json_digit(j, "digit0", r.digit0);
  json_digit(j, "digit1", r.digit1);
  json_digit(j, "q2_digit0", r.q2_digit0);
  json_digit(j, "q2_digit1", r.q2_digit1);
  json_digit(j, "wilson_residue", r.wilson_residue);
  return j.dump();
}

std::string scan_csv_header() {
  return "p,wieferich,super_wieferich,wilson,thm14_condition,strategies_agreed,"
         "digit0,digit1,q2_digit0,q2_digit1,wilson_residue";
}

std::string to_csv(const ScanRecord& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{}", r.p, r.flags.wieferich,
                     r.flags.super_wieferich, r.flags.wilson, r.flags.thm14_condition,
                     r.strategies_agreed, csv_field(r.digit0), csv_field(r.digit1),
                     csv_field(r.q2_digit0), csv_field(r.q2_digit1),
                     csv_field(r.wilson_residue));
}

ScanOutcome run_scan(const ScanConfig& cfg,
                     const std::function<void(std::string_view)>& line_sink) {
  if (!cfg.checkpoint_path.empty() && cfg.out_path.empty())
    throw std::invalid_argument("checkpointing requires an output file");

  auto primes = odd_primes_in(3, cfg.limit);

  uint64_t hash = kFnvOffset;
  uint64_t count = 0;
  uint32_t last_p = 0;
  bool resuming = false;
  if (cfg.resume && !cfg.checkpoint_path.empty() && fs::exists(cfg.checkpoint_path)) {
    Checkpoint ck = load_checkpoint(cfg.checkpoint_path);
    if (ck.range != range_string(cfg))
      throw ChecksumMismatch(fmt::format("checkpoint is for scan '{}', this run is '{}'",
                                         ck.range, range_string(cfg)));
    verify_and_trim_report(cfg.out_path, ck.record_count, ck.content_hash, hash);
    count = ck.record_count;
    last_p = ck.last_completed_p;
    resuming = true;
  }

  std::ofstream out;
  if (!cfg.out_path.empty()) {
    out.open(cfg.out_path, std::ios::binary | (resuming ? std::ios::app : std::ios::trunc));
    if (!out) throw std::runtime_error(fmt::format("cannot open report '{}'", cfg.out_path));
  }

  size_t start = 0;
  while (start < primes.size() && primes[start] <= last_p) ++start;
  size_t todo = primes.size() - start;
  if (cfg.stop_after != 0 && cfg.stop_after < todo) todo = cfg.stop_after;

  // fan out over primes; the writer below re-sequences by prime order
  std::vector<ScanRecord> slots(todo);
  std::vector<char> ready(todo, 0);
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;
  unsigned jobs = std::max(1u, cfg.jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= todo) return;
        ScanRecord rec = scan_one(primes[start + i], cfg);
        {
          std::lock_guard<std::mutex> lk(mu);
          slots[i] = rec;
          ready[i] = 1;
        }
        cv.notify_all();
      }
    });

  ScanOutcome oc;
  oc.records.reserve(todo);
  for (size_t i = 0; i < todo; ++i) {
    std::unique_lock<std::mutex> lk(mu);
    cv.wait(lk, [&] { return ready[i] != 0; });
    ScanRecord rec = slots[i];
    lk.unlock();

    std::string line = to_jsonl(rec);
    if (out.is_open()) {
      out << line << '\n';
      out.flush();
    }
    fnv_update(hash, line);
    fnv_update(hash, "\n");
    ++count;
    last_p = rec.p;
    if (!rec.strategies_agreed) oc.disagreement = true;
    if (kind_flag(cfg.kind, rec)) oc.flagged.push_back(rec.p);
    if (line_sink) line_sink(line);
    oc.records.push_back(rec);
    if (!cfg.checkpoint_path.empty() && cfg.checkpoint_every != 0 &&
        (i + 1) % cfg.checkpoint_every == 0)
      write_checkpoint(cfg, last_p, count, hash);
  }
  for (auto& th : pool) th.join();

  oc.processed = todo;
  oc.complete = start + todo == primes.size();
  if (!cfg.checkpoint_path.empty()) write_checkpoint(cfg, last_p, count, hash);
  return oc;
}

std::string to_jsonl(const CheckResult& r) {
  ordered_json j;
  j["check_id"] = r.id;
  j["p"] = r.p;
  j["mod_power"] = r.mod_power;
  j["lhs"] = r.lhs.v;
  j["rhs"] = r.rhs.v;
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsed_ms;
  j["details"] = r.details;
  return j.dump();
}

std::string verify_csv_header() {
  return "check_id,p,mod_power,lhs,rhs,pass,elapsed_ms,details";
}

std::string to_csv(const CheckResult& r) {
  return fmt::format("{},{},{},{},{},{},{},{}", r.id, r.p, r.mod_power, r.lhs.v, r.rhs.v,
                     r.pass, r.elapsed_ms, csv_escape(r.details));
}

VerifyOutcome run_verify(const VerifyConfig& cfg,
                         const std::function<void(const CheckResult&)>& sink) {
  // an explicit selection still honors the tier and modulus filters
  std::vector<const CheckDescriptor*> sel;
  for (const CheckDescriptor* d : cfg.checks) {
    if (!d) continue;
    if (cfg.tier && d->tier != *cfg.tier) continue;
    if (d->mod_power > cfg.mod_cap) continue;
    sel.push_back(d);
  }

  auto primes = odd_primes_in(cfg.lo, cfg.hi);
  size_t n = primes.size();
  std::vector<std::vector<CheckResult>> per(n);
  std::vector<char> ready(n, 0);
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;
  unsigned jobs = std::max(1u, cfg.jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        auto rs = cfg.checks.empty() ? evaluate_all(primes[i], cfg.tier, cfg.mod_cap)
                                     : evaluate_selected(primes[i], sel);
        std::sort(rs.begin(), rs.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
        {
          std::lock_guard<std::mutex> lk(mu);
          per[i] = std::move(rs);
          ready[i] = 1;
        }
        cv.notify_all();
      }
    });

  VerifyOutcome oc;
  for (size_t i = 0; i < n; ++i) {
    std::unique_lock<std::mutex> lk(mu);
    cv.wait(lk, [&] { return ready[i] != 0; });
    std::vector<CheckResult> rs = std::move(per[i]);
    lk.unlock();
    for (auto& r : rs) {
      oc.all_pass = oc.all_pass && r.pass;
      if (sink) sink(r);
      oc.results.push_back(std::move(r));
    }
  }
  for (auto& th : pool) th.join();
  return oc;
}

}  // namespace nt
