#include "nt/quotients.hpp"

#include <fmt/format.h>

#include "nt/bernoulli.hpp"

namespace nt {

DigitVector fermat_quotient(uint64_t a, uint32_t p, unsigned digits) {
  if (digits < 1 || digits > 2) throw std::invalid_argument("fermat_quotient: digits must be 1 or 2");
  if (a % p == 0) throw BaseDivisibleByP(fmt::format("fermat_quotient: p={} divides base {}", p, a));
  Residue probe = residue(1, p, digits + 1);  // enforces the word budget
  uint64_t m = probe.mod();
  uint64_t r = powmod(a % m, p - 1, m);  // = 1 + p*q mod p^{digits+1}
  uint64_t q = (r - 1) / p;
  return padic_digits(Int(q), p, digits);
}

Residue wilson_quotient(uint32_t p, unsigned k) {
  if (k < 1 || k > 2) throw std::invalid_argument("wilson_quotient: k must be 1 or 2");
  Residue f = factorial_mod(p - 1, p, k + 1);  // = -1 + p*w mod p^{k+1}
  uint64_t w = (f.v + 1) / p;
  return residue(static_cast<int64_t>(w % residue(1, p, k).mod()), p, k);
}

Residue agoh_giuga_quotient(uint32_t p) {
  uint64_t pb = p_bernoulli_pm1(p, 2);  // = -1 + p*ag mod p^2
  return residue(static_cast<int64_t>(((pb + 1) / p) % p), p, 1);
}

QuotientBundle quotient_bundle(uint32_t p) {
  return QuotientBundle{p, fermat_quotient(2, p, 2), wilson_quotient(p, 1),
                        agoh_giuga_quotient(p)};
}

RootDigit hensel_root_digit(uint32_t p, uint32_t k) {
  if (k < 1 || k > p - 1) throw std::invalid_argument("hensel_root_digit: k out of [1, p-1]");
  uint64_t p2 = static_cast<uint64_t>(p) * p;
  uint64_t fact = factorial_mod(p - 1, p, 2).v;
  uint64_t fk = (powmod(k, p - 1, p2) + fact) % p2;  // = 0 mod p
  uint64_t u = fk / p;
  // f'(k) = (p-1) k^{p-2}, a unit mod p
  uint64_t deriv = mulmod(p - 1, powmod(k, p - 2, p), p);
  uint32_t t0 = static_cast<uint32_t>(mulmod(p - u % p, invmod(deriv, p), p) % p);
  uint64_t lifted = k + static_cast<uint64_t>(p) * t0;
  if ((powmod(lifted, p - 1, p2) + fact) % p2 != 0)
    throw std::logic_error(fmt::format("hensel_root_digit: lift failed at p={} k={}", p, k));
  return RootDigit{p, k, t0};
}

namespace {

struct Verdict {
  bool wieferich = false, super_wieferich = false, wilson = false;
  bool operator==(const Verdict&) const = default;
};

}  // namespace

ScanRecord classify_prime(uint32_t p, Strategy strategy) {
  ScanRecord r;
  r.p = p;
  bool run_direct = strategy != Strategy::combinatorial;
  bool run_comb = strategy != Strategy::direct;
  Verdict direct, comb;

  if (run_direct) {
    DigitVector q2 = fermat_quotient(2, p, 2);
    r.q2_digit0 = q2.d[0];
    r.q2_digit1 = q2.d[1];
    Residue w = wilson_quotient(p, 1);
    r.wilson_residue = static_cast<int64_t>(w.v);
    direct.wieferich = q2.d[0] == 0;
    direct.super_wieferich = q2.d[0] == 0 && q2.d[1] == 0;
    direct.wilson = w.v == 0;
  }
  if (run_comb) {
    EulerianSummary es = eulerian_summary(p);
    r.digit0 = es.digit0;
    r.digit1 = es.digit1;
    Residue ag = agoh_giuga_quotient(p);
    comb.wieferich = es.digit0 == 1;
    comb.super_wieferich = comb.wieferich && (es.digit1 + ag.v) % p == 2 % p;
    comb.wilson = ag.v == 1;
    r.flags.thm14_condition = es.digit0 == 1 && es.digit1 == 1;
  }

  const Verdict& v = run_direct ? direct : comb;
  r.flags.wieferich = v.wieferich;
  r.flags.super_wieferich = v.super_wieferich;
  r.flags.wilson = v.wilson;
  if (strategy == Strategy::both) r.strategies_agreed = direct == comb;
  return r;
}

void require_strategies_agreed(const ScanRecord& r) {
  if (r.strategies_agreed) return;
  throw StrategyDisagreement(fmt::format(
      "p={}: direct verdict (q2 digits ({}, {}), wilson residue {}) disagrees "
      "with combinatorial verdict (ascent digits ({}, {}))",
      r.p, r.q2_digit0, r.q2_digit1, r.wilson_residue, r.digit0, r.digit1));
}

}  // namespace nt
