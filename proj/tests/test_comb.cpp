#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nt/comb.hpp"

using namespace nt;

namespace {

// Brute-force ascent statistics over all n! permutations (test oracle, n <= 8).
std::vector<Int> ascent_histogram(unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Int> hist(n, 0);
  do {
    unsigned asc = 0;
    for (unsigned i = 0; i + 1 < n; ++i)
      if (perm[i] < perm[i + 1]) ++asc;
    ++hist[asc];
  } while (std::next_permutation(perm.begin(), perm.end()));
  hist.resize(n == 0 ? 1 : n);
  return hist;
}

Int factorial_exact(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("eulerian rows match the brute-force permutation oracle") {
  for (unsigned n = 1; n <= 8; ++n) {
    auto row = eulerian_row_exact(n);
    auto hist = ascent_histogram(n);
    REQUIRE(row.size() == n);
    for (unsigned m = 0; m < n; ++m) CHECK(row[m] == hist[m]);
  }
}

TEST_CASE("eulerian frozen rows") {
  CHECK(eulerian_row_exact(3) == std::vector<Int>{1, 4, 1});
  CHECK(eulerian_row_exact(5) == std::vector<Int>{1, 26, 66, 26, 1});
  auto r11 = eulerian_row_exact(11);
  std::vector<Int> expect{1, 2036, 152637, 2203488, 9738114, 15724248,
                          9738114, 2203488, 152637, 2036, 1};
  CHECK(r11 == expect);
}

TEST_CASE("eulerian row invariants: symmetry, boundary, row sums") {
  for (unsigned n : {2u, 5u, 9u, 12u}) {
    auto row = eulerian_row_exact(n);
    CHECK(row[0] == 1);
    for (unsigned m = 0; m < n; ++m) CHECK(row[m] == row[n - 1 - m]);
    Int sum = 0;
    for (auto& e : row) sum += e;
    CHECK(sum == factorial_exact(n));
  }
}

TEST_CASE("modular eulerian rows agree with exact rows") {
  for (unsigned n : {4u, 11u, 16u}) {
    for (uint64_t m : {49ull, 13ull * 13, 2197ull}) {
      auto exact = eulerian_row_exact(n);
      auto mod = eulerian_row_mod(n, m);
      REQUIRE(mod.size() == n);
      for (unsigned j = 0; j < n; ++j) CHECK(mod[j] == Int(exact[j] % m).get_ui());
    }
  }
  // modular row sum == factorial_mod for a row too big for exact mode
  uint64_t m = 101ull * 101;
  auto row = eulerian_row_mod(99, m);
  uint64_t sum = 0;
  for (auto e : row) sum = (sum + e) % m;
  CHECK(sum == factorial_mod(99, 101, 2).v);
}

TEST_CASE("eulerian summary frozen anchors") {
  auto s5 = eulerian_summary(5);
  CHECK(s5.N == 2);
  CHECK(s5.digit0 == 4);
  CHECK(s5.digit1 == 0);

  auto s7 = eulerian_summary(7);
  CHECK(s7.N == 19);  // 68 mod 49
  CHECK(s7.digit0 == 3);
  CHECK(s7.digit1 == 5);

  auto s13 = eulerian_summary(13);
  CHECK(s13.digit0 == 4);
  CHECK(s13.digit1 == 8);
  CHECK(s13.N == Int(19781504 % 169).get_ui());
  CHECK(s13.alt == Int((Int(-353792) % 169 + 169) % 169).get_ui());

  auto s3 = eulerian_summary(3);
  CHECK(s3.N == 1);
  CHECK(s3.digit0 == 2);
}

TEST_CASE("eulerian summary invariants") {
  for (uint32_t p : odd_primes_in(3, 60)) {
    auto s = eulerian_summary(p);
    uint64_t m = static_cast<uint64_t>(p) * p;
    CHECK((2 * s.N) % p == s.digit0);
    CHECK(((2 * s.N) % m) / p == s.digit1);
    // alternating sum + (p-2)! == 2N mod p^2
    CHECK((s.alt + factorial_mod(p - 2, p, 2).v) % m == (2 * s.N) % m);
  }
}

TEST_CASE("stirling rows: frozen values and both definitions agree") {
  CHECK(stirling_row_exact(5) == std::vector<Int>{24, 50, 35, 10, 1});
  CHECK(stirling_row_exact(7) == std::vector<Int>{720, 1764, 1624, 735, 175, 21, 1});
  // row sums: Eq-style invariants sum [p,s] = p!, sum [p,s] 2^s = (p+1)!
  for (unsigned p : {5u, 7u, 11u, 13u}) {
    auto row = stirling_row_exact(p);
    Int sum = 0, wsum = 0, pw2 = 2;
    for (unsigned s = 1; s <= p; ++s, pw2 *= 2) {
      sum += row[s - 1];
      wsum += row[s - 1] * pw2;
    }
    CHECK(sum == factorial_exact(p));
    CHECK(wsum == factorial_exact(p + 1));
  }
  // cycle-count cross-check against the classical small table
  CHECK(stirling_row_exact(4) == std::vector<Int>{6, 11, 6, 1});
  CHECK(stirling_row_exact(8)[1] == 13068);  // [8,2]
}

TEST_CASE("modular stirling rows match exact rows") {
  for (unsigned p : {5u, 13u, 23u}) {
    uint64_t m = static_cast<uint64_t>(p) * p;
    auto exact = stirling_row_exact(p);
    auto mod = stirling_row_mod(p, m);
    for (unsigned s = 0; s < p; ++s) CHECK(mod[s] == Int(exact[s] % m).get_ui());
  }
  // beyond the exact cutoff: check the two forced sums mod p^2
  uint64_t m = 101ull * 101;
  auto row = stirling_row_mod(101, m);
  uint64_t sum = 0, wsum = 0, pw2 = 2;
  for (unsigned s = 1; s <= 101; ++s, pw2 = 2 * pw2 % m) {
    sum = (sum + row[s - 1]) % m;
    wsum = (wsum + mulmod(row[s - 1], pw2, m)) % m;
  }
  CHECK(sum == factorial_mod(101, 101, 2).v);
  CHECK(wsum == factorial_mod(102, 101, 2).v);
}

TEST_CASE("falling factorial evaluation") {
  CHECK(falling_factorial_eval(rat(-2), 5) == rat(-720));
  CHECK(falling_factorial_eval(rat(0), 7) == rat(0));
  CHECK(falling_factorial_eval(rat(-3), 5) == rat(-2520));
  CHECK(falling_factorial_eval(rat(1, 2), 3) == rat(3, 8));  // (1/2)(-1/2)(-3/2)
  // signed Stirling expansion reproduces the product at integer points
  for (long x : {-3l, 5l, 2l}) {
    for (unsigned p : {5u, 7u}) {
      auto row = stirling_row_exact(p);
      Rat expanded = 0;
      Rat xs = x;  // x^s
      for (unsigned s = 1; s <= p; ++s, xs *= x) {
        Rat term = rat(row[s - 1], 1) * xs;
        expanded += ((p - s) % 2 == 0) ? term : Rat(-term);
      }
      CHECK(expanded == falling_factorial_eval(rat(x), p));
    }
  }
}

TEST_CASE("factorial and binomial mod") {
  CHECK(factorial_mod(4, 5, 2).v == 24);
  CHECK(binomial_mod(12, 5, 13, 1).v == 12);  // C(12,5) = 792 == -1 mod 13
  CHECK(binomial_mod(6, 2, 7, 2).v == 15);
  CHECK(binomial_mod(5, 9, 7, 1).v == 0);
  // alternating-sign law mod p and its p^2 refinement at a spot value
  for (uint32_t p : odd_primes_in(3, 200)) {
    for (uint64_t kk : std::vector<uint64_t>{1, 2, (p - 1ull) / 2, p - 2ull}) {
      uint64_t want = (kk % 2 == 0) ? 1 : p - 1;
      CHECK(binomial_mod(p - 1, kk, p, 1).v == want);
    }
  }
}
