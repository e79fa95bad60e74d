#pragma once
// Factorials, binomials, unsigned Stirling numbers of the first kind,
// Eulerian triangle rows, and the parity-restricted Eulerian sums, at moduli
// p^k and exactly for small n.
#include <cstdint>
#include <vector>

#include "nt/padic.hpp"

namespace nt {

Residue factorial_mod(uint64_t n, uint32_t p, unsigned k);
// Exact arbitrary-precision binomial reduced afterwards (no Lucas shortcuts),
// so higher-power congruence checks stay honest.
Residue binomial_mod(uint64_t n, uint64_t r, uint32_t p, unsigned k);

// Eulerian numbers E(n,0..n-1): permutations of n letters by ascent count.
// Recursion E(n,m) = (n-m) E(n-1,m-1) + (m+1) E(n-1,m), two-row rolling
// storage. Exact mode for n <= 20; modular mode for any modulus < 2^62.
std::vector<Int> eulerian_row_exact(unsigned n);
std::vector<uint64_t> eulerian_row_mod(unsigned n, uint64_t m);

// Row p-2 of the Eulerian triangle mod p^2, with N = sum of even-index
// entries (permutations with an even number of ascents), the first two
// canonical digits of 2N, and the alternating row sum.
struct EulerianSummary {
  uint32_t p = 0;
  uint64_t N = 0;    // N_{p-2} mod p^2
  uint32_t digit0 = 0, digit1 = 0;
  uint64_t alt = 0;  // sum (-1)^m E(p-2,m) mod p^2
};
EulerianSummary eulerian_summary(uint32_t p);

// Unsigned Stirling numbers of the first kind [p, s] for s = 1..p, read off
// the falling factorial x(x-1)...(x-(p-1)) = sum_s (-1)^{p-s} [p,s] x^s.
// Exact mode for p <= 25.
std::vector<Int> stirling_row_exact(unsigned p);
std::vector<uint64_t> stirling_row_mod(unsigned p, uint64_t m);

// x(x-1)...(x-(p-1)) evaluated exactly.
Rat falling_factorial_eval(const Rat& x, unsigned p);

}  // namespace nt
