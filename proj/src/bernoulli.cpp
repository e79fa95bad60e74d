#include "nt/bernoulli.hpp"

#include <fmt/format.h>

#include <mutex>

namespace nt {

namespace {

std::vector<Rat>& bernoulli_cache() {
  static std::vector<Rat> cache{rat(1), rat(-1, 2)};
  return cache;
}
std::mutex bernoulli_mutex;

}  // namespace

const Rat& bernoulli_exact(unsigned n) {
  if (n > 120) throw std::invalid_argument("exact Bernoulli numbers cover n <= 120");
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  auto& cache = bernoulli_cache();
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    if (m % 2 == 1 && m >= 3) {
      cache.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j
    Rat sum = 0;
    Int binom;
    for (unsigned j = 0; j < m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      sum += Rat(binom) * cache[j];
    }
    cache.push_back(Rat(-sum / Rat(m + 1)));
  }
  return cache[n];
}

uint64_t p_bernoulli_pm1(uint32_t p, unsigned k) {
  uint64_t m = residue(0, p, k).mod();
  uint64_t s = 0;
  for (uint32_t a = 1; a <= (p - 1) / 2; ++a) {
    s += powmod(p - 2ull * a, p - 1, m);
    if (s >= m) s -= m;
  }
  return mulmod(s, invmod(powmod(2, p - 2, m), m), m);
}

uint64_t p_bernoulli_pm1_recurrence(uint32_t p, unsigned k) {
  // sum_{j=0}^{p-1} C(p,j) B_j = 0 with every C(p,j), 1<=j<=p-1, divisible
  // by p: p*B_{p-1} = -(1 + sum_{j=1}^{p-2} [C(p,j)/p] * p*B_j) where the
  // bracket is integral. Work at modulus p^{k} after dividing out one p.
  uint64_t m = residue(0, p, k).mod();
  uint64_t mp = m * p;  // binomials needed mod p^{k+1}
  if (k == 3) {
    // the working modulus p^4 can exceed the 64-bit budget; use GMP here
    Int M = Int(static_cast<unsigned long>(m)) * p;
    std::vector<Int> b(p - 1);
    b[0] = 1;
    std::vector<Int> binom(p + 1);  // row C(n+1, .)
    binom[0] = 1;
    binom[1] = 1;  // row n+1 = 1
    for (unsigned n = 1; n <= p - 2; ++n) {
      // advance binom row from C(n,.) to C(n+1,.)
      for (unsigned j = n + 1; j >= 1; --j) binom[j] = (binom[j] + binom[j - 1]) % M;
      binom[0] = 1;
      Int sum = 0;
      for (unsigned j = 0; j < n; ++j) sum = (sum + binom[j] * b[j]) % M;
      Int dinv;
      Int den(n + 1);
      mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t());
      b[n] = ((M - sum) * dinv) % M;
    }
    // final row C(p, .)
    for (unsigned j = p; j >= 1; --j) binom[j] = (binom[j] + binom[j - 1]) % M;
    binom[0] = 1;
    Int total = 0;
    for (unsigned j = 0; j <= p - 2; ++j) total = (total + binom[j] * b[j]) % M;
    // total = 1 + p*(...) and p*B_{p-1} = -total / 1 (exactly divisible? no:
    // p*B_{p-1} = -total viewed mod p^k after the identity) — here
    // sum_{j<=p-1} C(p,j)B_j = 0 gives C(p,p-1)B_{p-1} = -total, i.e.
    // p*B_{p-1} = -total mod p^{k+1}; reduce mod p^k.
    Int r = ((M - total) % M) % Int(static_cast<unsigned long>(m));
    return r.get_ui();
  }
  // k <= 2: p^{k+1} fits the 64-bit budget for p < 2^21
  residue(0, p, k + 1 <= 3 ? k + 1 : 3);
  std::vector<uint64_t> b(p - 1);
  b[0] = 1 % mp;
  std::vector<uint64_t> binom(p + 1, 0);
  binom[0] = 1;
  binom[1] = 1;
  for (unsigned n = 1; n <= p - 2; ++n) {
    for (unsigned j = n + 1; j >= 1; --j) {
      uint64_t s = binom[j] + binom[j - 1];
      binom[j] = s >= mp ? s - mp : s;
    }
    uint64_t sum = 0;
    for (unsigned j = 0; j < n; ++j) {
      sum += mulmod(binom[j], b[j], mp);
      if (sum >= mp) sum -= mp;
    }
    b[n] = mulmod(mp - sum, invmod(n + 1, mp), mp);
  }
  for (unsigned j = p; j >= 1; --j) {
    uint64_t s = binom[j] + binom[j - 1];
    binom[j] = s >= mp ? s - mp : s;
  }
  uint64_t total = 0;
  for (unsigned j = 0; j <= p - 2; ++j) {
    total += mulmod(binom[j], b[j], mp);
    if (total >= mp) total -= mp;
  }
  return (mp - total) % m;
}

BernoulliTable bernoulli_table(uint32_t p, unsigned k) {
  if (k < 1 || k > 2) throw std::invalid_argument("Bernoulli tables cover k in {1,2}");
  uint64_t m = residue(0, p, k).mod();
  BernoulliTable t;
  t.p = p;
  t.k = k;
  t.b.assign(p - 1, 0);
  t.b[0] = 1 % m;
  // incremental binomial row C(n+1, .) mod p^k; divisions by n+1 <= p-1 are
  // units at this modulus
  std::vector<uint64_t> binom(p + 1, 0);
  binom[0] = 1;
  binom[1] = 1;
  for (unsigned n = 1; n <= p - 2; ++n) {
    for (unsigned j = n + 1; j >= 1; --j) {
      uint64_t s = binom[j] + binom[j - 1];
      binom[j] = s >= m ? s - m : s;
    }
    uint64_t sum = 0;
    for (unsigned j = 0; j < n; ++j) {
      sum += mulmod(binom[j], t.b[j], m);
      if (sum >= m) sum -= m;
    }
    t.b[n] = mulmod(m - sum, invmod(n + 1, m), m);
  }
  t.pB_pm1 = p_bernoulli_pm1(p, k);
  return t;
}

Residue divided_bernoulli(unsigned n, uint32_t p) {
  if (n < 1 || n > p - 2)
    throw std::invalid_argument("divided Bernoulli indices cover 1 <= n <= p-2");
  if (n <= 120) return reduce_rational(Rat(bernoulli_exact(n) / Rat(n)), p, 1);
  BernoulliTable t = bernoulli_table(p, 1);
  return residue(static_cast<int64_t>(mulmod(t.b[n], invmod(n, p), p)), p, 1);
}

Residue weighted_divided_bernoulli_sum(const BernoulliTable& t, uint32_t base) {
  uint32_t p = t.p;
  if (base < 1 || base > p - 1)
    throw std::invalid_argument("weighted sum base covers 1 <= base <= p-1");
  uint64_t m = p;
  uint64_t binv = invmod(base, m);
  uint64_t w = 1;  // base^{-l}
  uint64_t acc = 0;
  for (unsigned l = 1; l <= static_cast<unsigned>(p - 2); ++l) {
    w = mulmod(w, binv, m);
    uint64_t bl = t.b[l] % m;
    acc = (acc + mulmod(mulmod(bl, invmod(l, m), m), w, m)) % m;
  }
  return residue(static_cast<int64_t>(acc), p, 1);
}

Residue weighted_divided_bernoulli_sum(uint32_t p, uint32_t base) {
  BernoulliTable t = bernoulli_table(p, 1);
  return weighted_divided_bernoulli_sum(t, base);
}

Rat divided_bernoulli_zero_sum_value(uint32_t p) {
  if (p > 60) throw NotApplicable("exact zero-sum path covers p <= 60");
  Rat sum = rat(-1, static_cast<long>(p));  // the k=0 term
  Rat pw = 1;
  for (unsigned n = 1; n <= p - 2; ++n) {
    pw /= 2;
    sum += Rat(bernoulli_exact(n) / Rat(n)) * pw;
  }
  pw /= 2;
  sum += Rat(bernoulli_exact(p - 1) / Rat(p - 1)) * pw;
  return sum;
}

bool divided_bernoulli_zero_sum(uint32_t p) {
  return valuation(divided_bernoulli_zero_sum_value(p), p) >= 1;
}

Rat bernoulli_polynomial(unsigned n, const Rat& x) {
  if (n > 60) throw std::invalid_argument("Bernoulli polynomials cover n <= 60");
  Rat acc = 0, xp = 1;
  Int binom;
  for (unsigned k = 0; k <= n; ++k) {
    mpz_bin_uiui(binom.get_mpz_t(), n, k);
    acc += Rat(binom) * bernoulli_exact(n - k) * xp;
    xp *= x;
  }
  return acc;
}

namespace {

uint64_t harmonic_accumulate(unsigned n, uint32_t p, unsigned k, unsigned step,
                             unsigned start, bool alternating, bool squared) {
  uint64_t m = residue(0, p, k).mod();
  uint64_t acc = 0;
  for (unsigned j = start; j <= n; j += step) {
    if (j % p == 0)
      throw IndexDivisibleByP(fmt::format("harmonic index {} divisible by {}", j, p));
    uint64_t t = invmod(j % m, m);
    if (squared) t = mulmod(t, t, m);
    if (alternating && (j % 2 == 1)) t = (m - t) % m;  // (-1)^j with j odd
    acc += t;
    if (acc >= m) acc -= m;
  }
  return acc;
}

}  // namespace

Residue harmonic_mod(unsigned n, uint32_t p, unsigned k) {
  return Residue{harmonic_accumulate(n, p, k, 1, 1, false, false), p,
                 static_cast<uint8_t>(k)};
}

Residue hprime_mod(unsigned n, uint32_t p, unsigned k) {
  return Residue{harmonic_accumulate(n, p, k, 2, 1, false, false), p,
                 static_cast<uint8_t>(k)};
}

Residue h2_mod(unsigned n, uint32_t p, unsigned k) {
  return Residue{harmonic_accumulate(n, p, k, 1, 1, false, true), p,
                 static_cast<uint8_t>(k)};
}

Residue alt_harmonic_mod(unsigned n, uint32_t p, unsigned k) {
  return Residue{harmonic_accumulate(n, p, k, 1, 1, true, false), p,
                 static_cast<uint8_t>(k)};
}

namespace {

uint64_t power_sum(unsigned e, uint32_t p, unsigned k, uint32_t lo, uint32_t hi,
                   uint32_t step) {
  if (e < 1) throw std::invalid_argument("power-sum exponents start at 1");
  uint64_t m = residue(0, p, k).mod();
  uint64_t acc = 0;
  for (uint32_t a = lo; a <= hi; a += step) {
    acc += powmod(a, e, m);
    if (acc >= m) acc -= m;
  }
  return acc;
}

}  // namespace

Residue power_sum_half(unsigned e, uint32_t p, unsigned k) {
  return Residue{power_sum(e, p, k, 1, (p - 1) / 2, 1), p, static_cast<uint8_t>(k)};
}

Residue power_sum_odd(unsigned e, uint32_t p, unsigned k) {
  return Residue{power_sum(e, p, k, 1, p - 1, 2), p, static_cast<uint8_t>(k)};
}

Residue power_sum_full(unsigned e, uint32_t p, unsigned k) {
  return Residue{power_sum(e, p, k, 1, p - 1, 1), p, static_cast<uint8_t>(k)};
}

Residue weighted_even_bernoulli_sum(const BernoulliTable& t) {
  uint32_t p = t.p;
  uint64_t m = p;
  uint64_t inv4 = invmod(4, m);
  uint64_t w = 1;  // 2^{-2k}
  uint64_t acc = 0;
  for (unsigned k = 1; k <= (p - 3) / 2; ++k) {
    w = mulmod(w, inv4, m);
    acc = (acc + mulmod(mulmod(t.b[2 * k] % m, invmod(k, m), m), w, m)) % m;
  }
  return residue(static_cast<int64_t>(acc), p, 1);
}

Residue weighted_even_bernoulli_sum(uint32_t p) {
  BernoulliTable t = bernoulli_table(p, 1);
  return weighted_even_bernoulli_sum(t);
}

}  // namespace nt
