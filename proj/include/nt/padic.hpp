#pragma once
// Exact rationals with p-adic valuation, fixed-modulus residue arithmetic for
// p, p^2, p^3, and canonical p-adic digit extraction.
#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace nt {

using Int = mpz_class;
using Rat = mpq_class;  // always canonical: lowest terms, positive denominator

struct DenominatorDivisibleByP : std::runtime_error { using std::runtime_error::runtime_error; };
struct NegativeValuation : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotInvertible : std::runtime_error { using std::runtime_error::runtime_error; };
struct PrimeTooLarge : std::runtime_error { using std::runtime_error::runtime_error; };
struct IndexDivisibleByP : std::runtime_error { using std::runtime_error::runtime_error; };
struct BaseDivisibleByP : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotApplicable : std::runtime_error { using std::runtime_error::runtime_error; };
struct ChecksumMismatch : std::runtime_error { using std::runtime_error::runtime_error; };

// Sentinel valuation of zero.
inline constexpr long kValInf = std::numeric_limits<long>::max();

Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

// v such that q = p^v * (unit in Z_p); kValInf for q == 0.
long valuation(const Int& x, uint32_t p);
long valuation(const Rat& q, uint32_t p);

// --- 64-bit modular primitives (moduli up to p^3 < 2^63) ---
inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m);  // throws NotInvertible

// An integer in [0, p^k) tagged with its modulus. Arithmetic requires
// matching (prime, power); mixed power needs an explicit project().
struct Residue {
  uint64_t v = 0;
  uint32_t p = 0;
  uint8_t k = 1;

  uint64_t mod() const;
  Residue project(unsigned k2) const;  // k2 <= k
  bool operator==(const Residue&) const = default;
};

// Constructors canonicalize (negatives wrap into [0, p^k)) and enforce the
// word budget: p < 2^21 for k=3, p < 2^31 for k<=2 (PrimeTooLarge otherwise).
Residue residue(int64_t x, uint32_t p, unsigned k);
Residue residue(const Int& x, uint32_t p, unsigned k);
Residue reduce_rational(const Rat& q, uint32_t p, unsigned k);  // DenominatorDivisibleByP

Residue operator+(Residue a, Residue b);
Residue operator-(Residue a, Residue b);
Residue operator*(Residue a, Residue b);
Residue neg(Residue a);
Residue inv(Residue a);               // NotInvertible when p | value
Residue pow(Residue a, uint64_t e);

// Canonical base-p digits (Notation: (x)_j is the coefficient of p^j).
struct DigitVector {
  uint32_t p = 0;
  std::vector<uint32_t> d;
  bool operator==(const DigitVector&) const = default;
};

DigitVector padic_digits(const Int& x, uint32_t p, unsigned count);
DigitVector padic_digits(const Rat& q, uint32_t p, unsigned count);  // NegativeValuation
DigitVector padic_digits(Residue r, unsigned count);                 // count <= r.k
uint64_t recombine(const DigitVector& dv);  // sum d[j] p^j

std::string to_string(const DigitVector& dv);  // "(d0, d1, ...)"

// Deterministic prime sieve; odd primes in [lo, hi].
std::vector<uint32_t> odd_primes_in(uint32_t lo, uint32_t hi);
bool is_prime(uint32_t n);

}  // namespace nt
