#include "nt/padic.hpp"

#include <fmt/format.h>

namespace nt {

Rat rat(long num, long den) { return rat(Int(num), Int(den)); }

Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

long valuation(const Int& x, uint32_t p) {
  if (x == 0) return kValInf;
  Int n = x;
  long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long valuation(const Rat& q, uint32_t p) {
  if (q == 0) return kValInf;
  return valuation(Int(q.get_num()), p) - valuation(Int(q.get_den()), p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
  // extended Euclid over signed 128-bit to be safe near 2^63
  __int128 t = 0, newt = 1;
  __int128 r = m, newr = a % m;
  while (newr != 0) {
    __int128 q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1)
    throw NotInvertible(fmt::format("{} not invertible mod {}", a, m));
  if (t < 0) t += m;
  return static_cast<uint64_t>(t);
}

namespace {

uint64_t pow_u64(uint32_t p, unsigned k) {
  uint64_t m = 1;
  for (unsigned i = 0; i < k; ++i) m *= p;
  return m;
}

void check_budget(uint32_t p, unsigned k) {
  if (k < 1 || k > 3) throw std::invalid_argument("power must be 1, 2 or 3");
  if ((k == 3 && p >= (1u << 21)) || p >= (1u << 31))
    throw PrimeTooLarge(fmt::format("p={} exceeds the word budget for p^{}", p, k));
}

void check_match(const Residue& a, const Residue& b) {
  if (a.p != b.p || a.k != b.k)
    throw std::invalid_argument(
        fmt::format("residue modulus mismatch: {}^{} vs {}^{}", a.p, a.k, b.p, b.k));
}

}  // namespace

uint64_t Residue::mod() const { return pow_u64(p, k); }

Residue Residue::project(unsigned k2) const {
  if (k2 > k) throw std::invalid_argument("projection must not raise the power");
  return Residue{v % pow_u64(p, k2), p, static_cast<uint8_t>(k2)};
}

Residue residue(int64_t x, uint32_t p, unsigned k) {
  check_budget(p, k);
  uint64_t m = pow_u64(p, k);
  int64_t r = x % static_cast<int64_t>(m);
  if (r < 0) r += m;
  return Residue{static_cast<uint64_t>(r), p, static_cast<uint8_t>(k)};
}

Residue residue(const Int& x, uint32_t p, unsigned k) {
  check_budget(p, k);
  uint64_t m = pow_u64(p, k);
  Int r = x % Int(static_cast<unsigned long>(m));
  if (r < 0) r += static_cast<unsigned long>(m);
  return Residue{r.get_ui(), p, static_cast<uint8_t>(k)};
}

Residue reduce_rational(const Rat& q, uint32_t p, unsigned k) {
  check_budget(p, k);
  Int den(q.get_den());
  if (mpz_divisible_ui_p(den.get_mpz_t(), p))
    throw DenominatorDivisibleByP(
        fmt::format("denominator {} divisible by {}", den.get_str(), p));
  Residue n = residue(Int(q.get_num()), p, k);
  Residue d = residue(den, p, k);
  return n * inv(d);
}

Residue operator+(Residue a, Residue b) {
  check_match(a, b);
  uint64_t m = a.mod(), s = a.v + b.v;
  return Residue{s >= m ? s - m : s, a.p, a.k};
}

Residue operator-(Residue a, Residue b) {
  check_match(a, b);
  uint64_t m = a.mod();
  return Residue{a.v >= b.v ? a.v - b.v : a.v + m - b.v, a.p, a.k};
}

Residue operator*(Residue a, Residue b) {
  check_match(a, b);
  return Residue{mulmod(a.v, b.v, a.mod()), a.p, a.k};
}

Residue neg(Residue a) { return Residue{a.v == 0 ? 0 : a.mod() - a.v, a.p, a.k}; }

Residue inv(Residue a) { return Residue{invmod(a.v, a.mod()), a.p, a.k}; }

Residue pow(Residue a, uint64_t e) { return Residue{powmod(a.v, e, a.mod()), a.p, a.k}; }

DigitVector padic_digits(const Int& x, uint32_t p, unsigned count) {
  check_budget(p, count <= 3 ? count : 3);
  Int m = 1;
  for (unsigned i = 0; i < count; ++i) m *= p;
  Int r = x % m;
  if (r < 0) r += m;
  DigitVector dv{p, {}};
  dv.d.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    dv.d.push_back(static_cast<uint32_t>(Int(r % p).get_ui()));
    r /= p;
  }
  return dv;
}

DigitVector padic_digits(const Rat& q, uint32_t p, unsigned count) {
  if (valuation(q, p) < 0)
    throw NegativeValuation(
        fmt::format("digits undefined: valuation of {} at {} is negative", q.get_str(), p));
  // invert the denominator at the full modulus, then peel digits
  Int m = 1;
  for (unsigned i = 0; i < count; ++i) m *= p;
  Int num(q.get_num()), den(q.get_den());
  Int dinv;
  if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()))
    throw DenominatorDivisibleByP("denominator not invertible at requested precision");
  return padic_digits(Int(num * dinv), p, count);
}

DigitVector padic_digits(Residue r, unsigned count) {
  if (count > r.k) throw std::invalid_argument("digit count exceeds residue precision");
  DigitVector dv{r.p, {}};
  uint64_t v = r.v;
  for (unsigned i = 0; i < count; ++i) {
    dv.d.push_back(static_cast<uint32_t>(v % r.p));
    v /= r.p;
  }
  return dv;
}

uint64_t recombine(const DigitVector& dv) {
  uint64_t acc = 0, scale = 1;
  for (uint32_t d : dv.d) {
    acc += d * scale;
    scale *= dv.p;
  }
  return acc;
}

std::string to_string(const DigitVector& dv) {
  std::string s = "(";
  for (size_t i = 0; i < dv.d.size(); ++i)
    s += fmt::format("{}{}", i ? ", " : "", dv.d[i]);
  return s + ")";
}

std::vector<uint32_t> odd_primes_in(uint32_t lo, uint32_t hi) {
  std::vector<uint32_t> out;
  if (hi < 3) return out;
  std::vector<bool> sieve(hi + 1, true);
  for (uint32_t i = 2; static_cast<uint64_t>(i) * i <= hi; ++i)
    if (sieve[i])
      for (uint64_t j = static_cast<uint64_t>(i) * i; j <= hi; j += i) sieve[j] = false;
  for (uint32_t n = std::max(lo, 3u); n <= hi; ++n)
    if ((n & 1) && sieve[n]) out.push_back(n);
  return out;
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace nt
