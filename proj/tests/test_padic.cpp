#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nt/padic.hpp"

using namespace nt;

TEST_CASE("rationals are canonical") {
  Rat q = rat(-10, -4);
  CHECK(q.get_num() == 5);
  CHECK(q.get_den() == 2);
  CHECK(rat(0, 7) == rat(0, 1));
}

TEST_CASE("valuation") {
  CHECK(valuation(rat(-691, 2730), 13) == -1);  // 2730 = 2*3*5*7*13
  CHECK(valuation(rat(25, 3), 5) == 2);
  CHECK(valuation(rat(0, 1), 7) == kValInf);
  CHECK(valuation(Int(637), 7) == 2);  // 637 = 7^2 * 13
  CHECK(valuation(rat(3, 49), 7) == -2);
}

TEST_CASE("reduce_rational") {
  CHECK(reduce_rational(rat(-5, 12), 5, 1).v == 0);
  CHECK(reduce_rational(rat(0, 1), 13, 3).v == 0);
  CHECK_THROWS_AS(reduce_rational(rat(-691, 2730), 13, 1), DenominatorDivisibleByP);
  // -691/210 mod 13^3: the p-integral part of B_12 times 13
  Residue r = reduce_rational(rat(-691, 210), 13, 3);
  CHECK(r.v == 1702);
  CHECK(reduce_rational(rat(1, 6), 7, 2).v == 41);  // inverse(6) mod 49
  CHECK(reduce_rational(rat(-1, 6), 5, 2).v == 4);
}

TEST_CASE("projection tower") {
  // reduce at p^k then project to p^{k-1} == reduce at p^{k-1}
  std::mt19937 rng(42);
  for (int i = 0; i < 200; ++i) {
    long n = static_cast<long>(rng() % 20011) - 10005;
    long d = static_cast<long>(rng() % 999) + 1;
    Rat q = rat(n, d);
    for (uint32_t p : {5u, 13u, 101u}) {
      if (valuation(Int(d), p) > 0) continue;
      for (unsigned k = 2; k <= 3; ++k)
        CHECK(reduce_rational(q, p, k).project(k - 1) == reduce_rational(q, p, k - 1));
    }
  }
}

TEST_CASE("multiplicativity of reduction and valuation") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rat a = rat(static_cast<long>(rng() % 2000) + 1, static_cast<long>(rng() % 300) + 1);
    Rat b = rat(static_cast<long>(rng() % 2000) + 1, static_cast<long>(rng() % 300) + 1);
    CHECK(valuation(Rat(a * b), 7) == valuation(a, 7) + valuation(b, 7));
    if (valuation(a, 11) == 0 && valuation(b, 11) == 0) {
      CHECK(reduce_rational(Rat(a * b), 11, 2) ==
            reduce_rational(a, 11, 2) * reduce_rational(b, 11, 2));
    }
  }
}

TEST_CASE("residue arithmetic") {
  CHECK(inv(residue(6, 7, 1)).v == 6);
  CHECK(pow(residue(2, 13, 3), 12).v == 1899);  // 4096 mod 13^3; digits (1,3,11)
  CHECK_THROWS_AS(inv(residue(13, 13, 2)), NotInvertible);
  CHECK((residue(10, 7, 2) * residue(5, 7, 2)).v == 1);
  CHECK((residue(3, 7, 1) - residue(5, 7, 1)).v == 5);
  CHECK(neg(residue(0, 7, 2)).v == 0);
  CHECK(neg(residue(1, 7, 2)).v == 48);
  CHECK(residue(-1, 7, 3).v == 342);
}

TEST_CASE("word budget enforced") {
  CHECK_THROWS_AS(residue(1, (1u << 21) + 39, 3), PrimeTooLarge);
  CHECK_NOTHROW(residue(1, (1u << 21) + 39, 2));
  CHECK_THROWS_AS(residue(1, 2147483659u /* > 2^31 would overflow uint32 */, 1),
                  PrimeTooLarge);
}

TEST_CASE("padic digits") {
  CHECK(padic_digits(Int(39563008), 13, 2) == DigitVector{13, {4, 8}});  // 2*N_11
  CHECK(padic_digits(Int(-1), 7, 3) == DigitVector{7, {6, 6, 6}});
  CHECK(padic_digits(Int(4096), 13, 3) == DigitVector{13, {1, 3, 11}});
  CHECK(padic_digits(Int(146), 13, 2) == DigitVector{13, {3, 11}});
  CHECK(padic_digits(rat(-691, 210), 13, 3) == DigitVector{13, {12, 0, 10}});
  CHECK_THROWS_AS(padic_digits(rat(1, 13), 13, 2), NegativeValuation);
  CHECK(padic_digits(rat(13, 2), 13, 2) == DigitVector{13, {0, 7}});  // val 1 is fine
}

TEST_CASE("digit recombination is the identity") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    uint64_t x = rng() % (13ull * 13 * 13);
    CHECK(recombine(padic_digits(Int(static_cast<long>(x)), 13, 3)) == x);
  }
  CHECK(recombine(padic_digits(residue(146, 13, 2), 2)) == 146);
}

TEST_CASE("prime sieve") {
  auto ps = odd_primes_in(3, 30);
  CHECK(ps == std::vector<uint32_t>{3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(odd_primes_in(5, 5) == std::vector<uint32_t>{5});
  CHECK(odd_primes_in(4, 4).empty());
  CHECK(odd_primes_in(1090, 1100) == std::vector<uint32_t>{1091, 1093, 1097});
  CHECK(is_prime(3511));
  CHECK_FALSE(is_prime(3513));
}
