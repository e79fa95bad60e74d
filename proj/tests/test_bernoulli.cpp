#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nt/bernoulli.hpp"
#include "nt/comb.hpp"

using namespace nt;

TEST_CASE("exact Bernoulli numbers") {
  CHECK(bernoulli_exact(0) == rat(1));
  CHECK(bernoulli_exact(1) == rat(-1, 2));
  CHECK(bernoulli_exact(3) == rat(0));
  CHECK(bernoulli_exact(12) == rat(-691, 2730));
  CHECK(bernoulli_exact(30) == rat(Int("8615841276005"), Int(14322)));
}

TEST_CASE("von Staudt-Clausen denominators") {
  // denominator of B_n (n even) = product of primes q with (q-1) | n
  for (unsigned n = 2; n <= 60; n += 2) {
    Int den = 1;
    for (uint32_t q = 2; q <= n + 1; ++q)
      if (is_prime(q) && n % (q - 1) == 0) den *= q;
    CHECK(Int(bernoulli_exact(n).get_den()) == den);
  }
}

TEST_CASE("modular Bernoulli tables agree with the exact oracle") {
  for (uint32_t p : odd_primes_in(3, 97)) {
    for (unsigned k = 1; k <= 2; ++k) {
      auto t = bernoulli_table(p, k);
      REQUIRE(t.b.size() == p - 1);
      for (unsigned n = 0; n <= p - 2; ++n) {
        CAPTURE(p);
        CAPTURE(n);
        CHECK(t.b[n] == reduce_rational(bernoulli_exact(n), p, k).v);
      }
    }
  }
}

TEST_CASE("bernoulli table frozen anchors") {
  auto t13 = bernoulli_table(13, 1);
  CHECK(t13.b[2] == 11);  // 1/6 mod 13
  auto t7 = bernoulli_table(7, 2);
  CHECK(t7.b[2] == 41);  // 1/6 mod 49
  CHECK(t7.b[1] == reduce_rational(rat(-1, 2), 7, 2).v);
  // odd indices >= 3 vanish
  for (unsigned n = 3; n <= 11; n += 2) CHECK(bernoulli_table(13, 2).b[n] == 0);
}

TEST_CASE("p*B_{p-1}: half-range sum path, frozen values and -1 mod p") {
  CHECK(p_bernoulli_pm1(13, 3) == 1702);  // == -691/210 mod 13^3
  CHECK(p_bernoulli_pm1(13, 2) == 12);
  CHECK(p_bernoulli_pm1(5, 2) == reduce_rational(rat(-1, 6), 5, 2).v);
  CHECK(p_bernoulli_pm1(5, 2) == 4);
  for (uint32_t p : odd_primes_in(3, 300)) CHECK(p_bernoulli_pm1(p, 1) == p - 1);
}

TEST_CASE("p*B_{p-1}: recurrence path agrees with half-range sum path") {
  for (uint32_t p : odd_primes_in(3, 150)) {
    CHECK(p_bernoulli_pm1_recurrence(p, 1) == p_bernoulli_pm1(p, 1));
    CHECK(p_bernoulli_pm1_recurrence(p, 2) == p_bernoulli_pm1(p, 2));
  }
  for (uint32_t p : odd_primes_in(3, 60))
    CHECK(p_bernoulli_pm1_recurrence(p, 3) == p_bernoulli_pm1(p, 3));
  // exact-rational cross-check at p = 13
  CHECK(p_bernoulli_pm1_recurrence(13, 3) == 1702);
}

TEST_CASE("divided Bernoulli values") {
  CHECK(divided_bernoulli(1, 7).v == 3);   // -1/2 mod 7
  CHECK(divided_bernoulli(2, 5).v == 3);   // 1/12 mod 5
  CHECK(divided_bernoulli(3, 7).v == 0);
  std::vector<uint64_t> want{6, 12, 0, 4, 0, 8, 0, 2, 0, 7, 0};  // n = 1..11, p = 13
  for (unsigned n = 1; n <= 11; ++n) CHECK(divided_bernoulli(n, 13).v == want[n - 1]);
}

TEST_CASE("weighted divided Bernoulli sums") {
  CHECK(weighted_divided_bernoulli_sum(5, 2).v == 3);
  CHECK(weighted_divided_bernoulli_sum(7, 2).v == 0);  // -441/1920 with 441 = 63*7
  CHECK(weighted_divided_bernoulli_sum(5, 1).v == 0);  // -5/12
  // exact-rational cross-check at several primes and bases
  for (uint32_t p : odd_primes_in(5, 43)) {
    for (uint32_t base : {1u, 2u, 3u, p - 1}) {
      Rat sum = 0, w = 1;
      for (unsigned l = 1; l <= p - 2u; ++l) {
        w /= base;
        sum += Rat(bernoulli_exact(l) / Rat(l)) * w;
      }
      CHECK(weighted_divided_bernoulli_sum(p, base).v == reduce_rational(sum, p, 1).v);
    }
  }
}

TEST_CASE("zero-sum verdict (exact rational path)") {
  for (uint32_t p : odd_primes_in(3, 60)) {
    CAPTURE(p);
    CHECK(divided_bernoulli_zero_sum(p));
  }
  CHECK_THROWS_AS(divided_bernoulli_zero_sum(61), NotApplicable);
  // the two non-p-integral pieces cancel: valuation of the sum is exactly >= 1
  CHECK(valuation(divided_bernoulli_zero_sum_value(13), 13) >= 1);
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_polynomial(2, rat(0)) == rat(1, 6));
  CHECK(bernoulli_polynomial(4, rat(1, 2)) == rat(7, 240));
  CHECK(bernoulli_polynomial(3, rat(1)) == rat(0));
  // half-argument law B_n(1/2) = (2^{1-n} - 1) B_n
  for (unsigned n = 1; n <= 24; ++n) {
    Rat lhs = bernoulli_polynomial(n, rat(1, 2));
    Rat rhs = Rat((rat(1) / Rat(Int(1) << (n - 1))) - 1) * bernoulli_exact(n);
    CHECK(lhs == rhs);
  }
  // translation law B_n(x+y) = sum_k C(n,k) B_k(x) y^{n-k} at sample points
  for (unsigned n : {3u, 8u, 13u}) {
    for (auto [x, y] : {std::pair{rat(1, 3), rat(2)}, {rat(-1, 2), rat(5, 7)}}) {
      Rat lhs = bernoulli_polynomial(n, Rat(x + y));
      Rat rhs = 0, yp = 1;
      Int binom;
      for (unsigned k = 0; k <= n; ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), n, n - k);  // C(n, n-k) = C(n,k)
        rhs += Rat(binom) * bernoulli_polynomial(n - k, x) * yp;
        yp *= y;
      }
      CHECK(lhs == rhs);
    }
  }
  // endpoint difference B_n(1) - B_n(0) = 0 for n >= 2
  for (unsigned n = 2; n <= 20; ++n)
    CHECK(bernoulli_polynomial(n, rat(1)) == bernoulli_polynomial(n, rat(0)));
}

TEST_CASE("harmonic family") {
  CHECK(harmonic_mod(3, 7, 1).v == 3);         // 11/6 mod 7
  CHECK(hprime_mod(4, 5, 1).v == 3);           // 1 + 1/3 = 4/3 mod 5
  CHECK(alt_harmonic_mod(4, 5, 1).v == 4);     // -7/12 mod 5
  CHECK(hprime_mod(12, 13, 3).v == 1017);      // frozen: H'_12 mod 13^3
  CHECK(h2_mod(12, 13, 1).v == 0);             // Wolstenholme companion
  CHECK(harmonic_mod(6, 13, 2).v == 163);      // 49/20 mod 169
  CHECK(alt_harmonic_mod(12, 13, 1).v == 7);
  CHECK_THROWS_AS(harmonic_mod(7, 7, 1), IndexDivisibleByP);
  // difference law H_n - H_{n-1} = 1/n
  for (unsigned n : {2u, 5u, 11u}) {
    auto d = harmonic_mod(n, 13, 2) - harmonic_mod(n - 1, 13, 2);
    CHECK(d == inv(residue(n, 13, 2)));
  }
  // exact cross-check of all four variants at p = 11, modulus p^2
  Rat h = 0, hp = 0, h2 = 0, ah = 0;
  for (unsigned j = 1; j <= 10; ++j) {
    h += rat(1, j);
    if (j % 2 == 1) hp += rat(1, j);
    h2 += rat(1, static_cast<long>(j) * j);
    ah += (j % 2 == 1) ? rat(-1, j) : rat(1, j);
  }
  CHECK(harmonic_mod(10, 11, 2).v == reduce_rational(h, 11, 2).v);
  CHECK(hprime_mod(10, 11, 2).v == reduce_rational(hp, 11, 2).v);
  CHECK(h2_mod(10, 11, 2).v == reduce_rational(h2, 11, 2).v);
  CHECK(alt_harmonic_mod(10, 11, 2).v == reduce_rational(ah, 11, 2).v);
}

TEST_CASE("power sums") {
  CHECK(power_sum_half(2, 7, 2).v == 14);                    // 1+4+9
  CHECK(power_sum_odd(11, 13, 2).v == 146);                  // frozen anchor
  CHECK(power_sum_odd(12, 13, 2).v == 71);
  CHECK(power_sum_half(1, 7, 1).v == 6);
  CHECK(power_sum_full(4, 5, 1).v == (1 + 16 + 81 + 256) % 5);
  // reflection: half-range + mirrored second half = full range mod p
  for (uint32_t p : odd_primes_in(5, 50)) {
    for (unsigned e : {2u, 3u, 7u}) {
      uint64_t second = 0;
      for (uint32_t a = (p + 1) / 2; a <= p - 1; ++a) second = (second + powmod(a, e, p)) % p;
      CHECK((power_sum_half(e, p, 1).v + second) % p == power_sum_full(e, p, 1).v);
    }
  }
  // half-range frozen row at p = 13
  std::vector<uint64_t> s13{21, 91, 441, 2275};
  for (unsigned e = 1; e <= 4; ++e)
    CHECK(power_sum_half(e, 13, 1).v == s13[e - 1] % 13);
}

TEST_CASE("weighted even-index Bernoulli sum (script-S)") {
  for (uint32_t p : odd_primes_in(7, 43)) {
    Rat sum = 0;
    for (unsigned k = 1; k <= (p - 3) / 2; ++k)
      sum += bernoulli_exact(2 * k) / (Rat(k) * Rat(Int(1) << (2 * k)));
    CHECK(weighted_even_bernoulli_sum(p).v == reduce_rational(sum, p, 1).v);
  }
}
