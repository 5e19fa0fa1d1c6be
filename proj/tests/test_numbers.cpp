#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "koszul/modular.hpp"
#include "koszul/numbers.hpp"

using namespace koszul;

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  // Pascal triangle consistency on a block
  for (Index n = 1; n < 30; ++n)
    for (Index k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(100, 50) ==
        Int("100891344545564193334812497256"));
}

TEST_CASE("factorial and sym_dim") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK(sym_dim(4, 0) == 1);
  CHECK(sym_dim(4, 1) == 4);
  CHECK(sym_dim(4, 3) == 20);   // binom(6,3)
  CHECK(sym_dim(1, 9) == 1);
  CHECK(sym_dim(3, -1) == 0);
}

TEST_CASE("rational parsing is strict and canonical") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-6/8") == Rat(-3, 4));
  CHECK(parse_rational("0/7") == 0);
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational("-12") == -12);
  CHECK_THROWS_AS(parse_rational("1/0"), invalid_input);
  CHECK_THROWS_AS(parse_rational(""), invalid_input);
  CHECK_THROWS_AS(parse_rational("1.5"), invalid_input);
  CHECK_THROWS_AS(parse_rational("x"), invalid_input);
  CHECK_THROWS_AS(parse_rational("1/2/3"), invalid_input);
  CHECK(rat_str(parse_rational("-6/8")) == "-3/4");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(parse_rational(rat_str(Rat(-22, 7))) == Rat(-22, 7));
}

TEST_CASE("rat_to_int accepts only integers") {
  CHECK(rat_to_int(Rat(9)) == 9);
  CHECK_THROWS_AS(rat_to_int(Rat(1, 2)), invalid_input);
}

TEST_CASE("deterministic primality") {
  CHECK(is_probable_prime(2));
  CHECK(is_probable_prime(3));
  CHECK(!is_probable_prime(1));
  CHECK(!is_probable_prime(561));        // Carmichael
  CHECK(!is_probable_prime(341550071728321ull));  // strong pseudoprime set
  CHECK(is_probable_prime(2305843009213693951ull));  // 2^61 - 1
  CHECK(!is_probable_prime(2305843009213693953ull));
  int count = 0;
  for (std::uint64_t n = 2; n < 100; ++n) count += is_probable_prime(n);
  CHECK(count == 25);
}

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);

  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  SplitMix64 c(7);
  for (int i = 0; i < 1000; ++i) {
    auto v = c.in_range(-10, 10);
    CHECK(v >= -10);
    CHECK(v <= 10);
  }
}

TEST_CASE("random primes stay in range") {
  SplitMix64 rng(1);
  for (int i = 0; i < 5; ++i) {
    auto p = random_prime_between(rng, 1ull << 20, 1ull << 22);
    CHECK(p >= (1ull << 20));
    CHECK(p < (1ull << 22));
    CHECK(is_probable_prime(p));
  }
}
