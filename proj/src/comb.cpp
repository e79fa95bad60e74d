#include "nt/comb.hpp"

#include <fmt/format.h>

namespace nt {

Residue factorial_mod(uint64_t n, uint32_t p, unsigned k) {
  Residue acc = residue(1, p, k);
  uint64_t m = acc.mod();
  uint64_t v = 1;
  for (uint64_t i = 2; i <= n; ++i) v = mulmod(v, i % m, m);
  acc.v = v;
  return acc;
}

Residue binomial_mod(uint64_t n, uint64_t r, uint32_t p, unsigned k) {
  if (r > n) return residue(0, p, k);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(r));
  return residue(b, p, k);
}

std::vector<Int> eulerian_row_exact(unsigned n) {
  if (n < 1 || n > 20) throw std::invalid_argument("exact Eulerian rows cover 1 <= n <= 20");
  std::vector<Int> row{1};
  for (unsigned m = 2; m <= n; ++m) {
    std::vector<Int> next(m);
    for (unsigned j = 0; j < m; ++j) {
      Int left = (j >= 1) ? Int((m - j) * row[j - 1]) : Int(0);
      Int right = (j < m - 1) ? Int((j + 1) * row[j]) : Int(0);
      next[j] = left + right;
    }
    row = std::move(next);
  }
  return row;
}

std::vector<uint64_t> eulerian_row_mod(unsigned n, uint64_t m) {
  if (n < 1) throw std::invalid_argument("Eulerian rows start at n = 1");
  // coefficients are <= n+1, so products fit in uint64 when (n+1)*m < 2^63;
  // route through 128-bit otherwise
  bool narrow = (static_cast<unsigned __int128>(n + 1) * m) >> 63 ? false : true;
  std::vector<uint64_t> row{1 % m}, next;
  for (unsigned r = 2; r <= n; ++r) {
    next.assign(r, 0);
    if (narrow) {
      for (unsigned j = 0; j < r; ++j) {
        uint64_t left = (j >= 1) ? (r - j) * row[j - 1] % m : 0;
        uint64_t right = (j < r - 1) ? (j + 1) * row[j] % m : 0;
        uint64_t s = left + right;
        next[j] = s >= m ? s - m : s;
      }
    } else {
      for (unsigned j = 0; j < r; ++j) {
        uint64_t left = (j >= 1) ? mulmod(r - j, row[j - 1], m) : 0;
        uint64_t right = (j < r - 1) ? mulmod(j + 1, row[j], m) : 0;
        uint64_t s = left + right;
        next[j] = s >= m ? s - m : s;
      }
    }
    row.swap(next);
  }
  return row;
}

EulerianSummary eulerian_summary(uint32_t p) {
  residue(0, p, 2);  // enforce word budget
  uint64_t m = static_cast<uint64_t>(p) * p;
  auto row = eulerian_row_mod(p - 2, m);
  EulerianSummary s;
  s.p = p;
  uint64_t even = 0, alt = 0;
  for (size_t j = 0; j < row.size(); ++j) {
    if ((j & 1) == 0) {
      even += row[j];
      if (even >= m) even -= m;
      alt += row[j];
      if (alt >= m) alt -= m;
    } else {
      alt += m - row[j];
      if (alt >= m) alt -= m;
    }
  }
  s.N = even;
  s.alt = alt;
  uint64_t twoN = (2 * even) % m;
  s.digit0 = static_cast<uint32_t>(twoN % p);
  s.digit1 = static_cast<uint32_t>(twoN / p);
  return s;
}

std::vector<Int> stirling_row_exact(unsigned p) {
  if (p < 1 || p > 25) throw std::invalid_argument("exact Stirling rows cover 1 <= p <= 25");
  // expand x(x-1)...(x-(p-1)); poly[s] = coefficient of x^s
  std::vector<Int> poly{0, 1};
  for (unsigned j = 1; j < p; ++j) {
    std::vector<Int> next(poly.size() + 1);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= Int(static_cast<long>(j)) * poly[i];
    }
    poly = std::move(next);
  }
  std::vector<Int> row(p);
  for (unsigned s = 1; s <= p; ++s) row[s - 1] = abs(poly[s]);
  return row;
}

std::vector<uint64_t> stirling_row_mod(unsigned p, uint64_t m) {
  if (p < 1) throw std::invalid_argument("Stirling rows start at p = 1");
  std::vector<uint64_t> poly{0, 1 % m};
  for (unsigned j = 1; j < p; ++j) {
    std::vector<uint64_t> next(poly.size() + 1, 0);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = (next[i + 1] + poly[i]) % m;
      next[i] = (next[i] + m - mulmod(j % m, poly[i], m)) % m;
    }
    poly = std::move(next);
  }
  // unsigned coefficients: [p,s] = |coeff of x^s| = (-1)^{p-s} coeff
  std::vector<uint64_t> row(p);
  for (unsigned s = 1; s <= p; ++s)
    row[s - 1] = ((p - s) % 2 == 0) ? poly[s] : (m - poly[s]) % m;
  return row;
}

Rat falling_factorial_eval(const Rat& x, unsigned p) {
  Rat acc = 1;
  for (unsigned j = 0; j < p; ++j) acc *= Rat(x - j);
  return acc;
}

}  // namespace nt
