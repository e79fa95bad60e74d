#pragma once
// Bernoulli numbers (exact oracle and modular recurrence), Bernoulli
// polynomials, divided-Bernoulli weighted sums, the harmonic-number family,
// and half-range / odd-range power sums.
#include <cstdint>
#include <vector>

#include "nt/padic.hpp"

namespace nt {

// Exact B_n by the recurrence sum_{j<=n} C(n+1,j) B_j = 0, B_1 = -1/2.
// Independent oracle for every modular path. n <= 120.
const Rat& bernoulli_exact(unsigned n);

// B_0..B_{p-2} mod p^k (indices stop before p-1: B_{p-1} itself is not
// p-integral) plus p*B_{p-1} mod p^k computed by the half-range power sum.
struct BernoulliTable {
  uint32_t p = 0;
  unsigned k = 1;  // 1 or 2
  std::vector<uint64_t> b;
  uint64_t pB_pm1 = 0;
};
BernoulliTable bernoulli_table(uint32_t p, unsigned k);

// p*B_{p-1} mod p^k (k in {1,2,3}) via the half-range sum
// (1/2^{p-2}) sum_{a<=(p-1)/2} (p-2a)^{p-1}, exact at modulus p^3.
uint64_t p_bernoulli_pm1(uint32_t p, unsigned k);
// Same quantity from the recurrence sum_{j<=p-1} C(p,j) B_j = 0 — the
// independent cross-check path (k in {1,2,3}).
uint64_t p_bernoulli_pm1_recurrence(uint32_t p, unsigned k);

// B_n / n mod p for 1 <= n <= p-2.
Residue divided_bernoulli(unsigned n, uint32_t p);

// sum_{l=1}^{p-2} B_l / (l * base^l) mod p, for 1 <= base <= p-1.
Residue weighted_divided_bernoulli_sum(uint32_t p, uint32_t base);
// Same sum from a caller-supplied mod-p Bernoulli table (bulk evaluation).
Residue weighted_divided_bernoulli_sum(const BernoulliTable& t, uint32_t base);

// The full sum sum_{k=0}^{p-1} B_k/(k 2^k) with the k=0 term read as -1/p and
// the k=p-1 term B_{p-1}/((p-1) 2^{p-1}), formed exactly; true iff the sum
// lands in p Z_p (valuation >= 1). Exact-rational path, p <= 60.
bool divided_bernoulli_zero_sum(uint32_t p);
Rat divided_bernoulli_zero_sum_value(uint32_t p);

// B_n(x) = sum_k C(n,k) B_{n-k} x^k, exact. n <= 60.
Rat bernoulli_polynomial(unsigned n, const Rat& x);

// Harmonic family at modulus p^k; indices never reach a multiple of p in
// this artifact (IndexDivisibleByP if violated).
Residue harmonic_mod(unsigned n, uint32_t p, unsigned k);       // sum 1/j
Residue hprime_mod(unsigned n, uint32_t p, unsigned k);         // odd j only
Residue h2_mod(unsigned n, uint32_t p, unsigned k);             // sum 1/j^2
Residue alt_harmonic_mod(unsigned n, uint32_t p, unsigned k);   // sum (-1)^j/j

// Power sums by direct modular summation (the independent side of the
// closed-form checks): S_e over a = 1..(p-1)/2, odd x < p, and x < p.
Residue power_sum_half(unsigned e, uint32_t p, unsigned k);
Residue power_sum_odd(unsigned e, uint32_t p, unsigned k);
Residue power_sum_full(unsigned e, uint32_t p, unsigned k);

// Script-S: sum_{k=1}^{(p-3)/2} B_{2k} / (k 2^{2k}) mod p.
Residue weighted_even_bernoulli_sum(uint32_t p);
Residue weighted_even_bernoulli_sum(const BernoulliTable& t);

}  // namespace nt
