#pragma once
// Catalog of congruence checks over odd primes. Each catalog entry states one
// identity; evaluating it computes the two sides by independent kernel paths
// and compares them at the stated modulus power.
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nt/padic.hpp"

namespace nt {

enum class Tier { A, B };
const char* to_string(Tier t);

struct CheckDescriptor {
  std::string id;    // stable external identifier (used by --checks / reports)
  Tier tier = Tier::A;
  unsigned mod_power = 1;  // congruence modulus p^mod_power
  uint32_t min_prime = 5;  // smallest applicable odd prime
  uint32_t max_prime = 0;  // largest applicable one (0 = unbounded)
  std::vector<uint32_t> only_primes;  // nonempty = applicable exactly at these
  std::string statement;   // self-contained statement of the identity
};

struct CheckResult {
  std::string id;
  uint32_t p = 0;
  unsigned mod_power = 1;
  Residue lhs, rhs;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::string details;
};

// The full catalog, deterministically ordered (tier A first).
const std::vector<CheckDescriptor>& list_checks();
const CheckDescriptor* find_check(std::string_view id);  // nullptr if unknown

// Applicability = odd prime, within [min_prime, max_prime] / only_primes, and
// inside the word budget for the check's modulus power.
bool check_applicable(const CheckDescriptor& d, uint32_t p);

// Throws std::invalid_argument for an unknown id, NotApplicable outside the
// descriptor's applicability. A failed congruence is a result, not an error.
CheckResult evaluate_check(std::string_view id, uint32_t p);

// Evaluate every applicable entry passing the filters, sharing per-prime
// caches across checks. Failures are results; iteration never aborts.
std::vector<CheckResult> evaluate_all(uint32_t p, std::optional<Tier> tier = std::nullopt,
                                      unsigned mod_cap = 3);

// Same, over an explicit selection (entries not applicable at p are skipped).
std::vector<CheckResult> evaluate_selected(uint32_t p,
                                           const std::vector<const CheckDescriptor*>& sel);

}  // namespace nt
