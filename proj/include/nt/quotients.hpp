#pragma once
// Fermat, Wilson and Agoh-Giuga quotients, Hensel lifting of the roots of
// X^{p-1} + (p-1)!, and prime classification (Wieferich / super-Wieferich /
// Wilson) by two independent strategies.
#include <cstdint>

#include "nt/comb.hpp"
#include "nt/padic.hpp"

namespace nt {

// Raised only on demand (see require_strategies_agreed); classification
// itself records disagreement as a result, never as a process failure.
struct StrategyDisagreement : std::runtime_error { using std::runtime_error::runtime_error; };

// q_p(a) = (a^{p-1} - 1)/p to `digits` base-p digits (digits in {1, 2}).
// Throws BaseDivisibleByP when p | a.
DigitVector fermat_quotient(uint64_t a, uint32_t p, unsigned digits);

// w_p = ((p-1)! + 1)/p as a residue mod p^k, k in {1, 2}.
Residue wilson_quotient(uint32_t p, unsigned k);

// (p*B_{p-1} + 1)/p mod p: digit 1 of p*B_{p-1} + 1.
Residue agoh_giuga_quotient(uint32_t p);

// The three quotients a classification consumer needs, computed once.
struct QuotientBundle {
  uint32_t p = 0;
  DigitVector q2_digits;  // two digits of q_p(2)
  Residue wilson;         // w_p mod p
  Residue agoh_giuga;     // (p*B_{p-1} + 1)/p mod p
};
QuotientBundle quotient_bundle(uint32_t p);

// Second digit of the root of f(X) = X^{p-1} + (p-1)! with first digit k:
// t0 = -f(k)/(p f'(k)) mod p. The defining congruence
// (k + p*t0)^{p-1} + (p-1)! = 0 mod p^2 is asserted before returning.
struct RootDigit {
  uint32_t p = 0;
  uint32_t k = 0;   // first digit, 1 <= k <= p-1
  uint32_t t0 = 0;  // second digit
};
RootDigit hensel_root_digit(uint32_t p, uint32_t k);

// direct: quotient definitions (powmod / factorial).
// combinatorial: Eulerian ascent digits + Bernoulli-derived Wilson test.
// both: run the two and compare verdicts.
enum class Strategy { direct, combinatorial, both };

struct ScanFlags {
  bool wieferich = false;
  bool super_wieferich = false;
  bool wilson = false;
  bool thm14_condition = false;  // both leading ascent digits equal 1
  bool operator==(const ScanFlags&) const = default;
};

// Per-prime classification result. Digit fields are -1 when the strategy
// that produces them did not run.
struct ScanRecord {
  uint32_t p = 0;
  ScanFlags flags;
  bool strategies_agreed = true;  // meaningful only when both strategies ran
  int64_t digit0 = -1, digit1 = -1;        // leading digits of twice the
                                           // even-ascent permutation count
  int64_t q2_digit0 = -1, q2_digit1 = -1;  // leading digits of q_p(2)
  int64_t wilson_residue = -1;             // w_p mod p
};

ScanRecord classify_prime(uint32_t p, Strategy strategy);

// Throws StrategyDisagreement (message carries both verdicts) when a record
// produced by the `both` strategy has disagreeing classifications.
void require_strategies_agreed(const ScanRecord& r);

}  // namespace nt
