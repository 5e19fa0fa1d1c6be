#include "koszul/modular.hpp"

#include "koszul/numbers.hpp"

namespace koszul {

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t random_prime_between(SplitMix64& rng, std::uint64_t lo,
                                   std::uint64_t hi) {
  if (hi <= lo + 1) throw invalid_input("empty prime interval");
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::uint64_t c = lo + 1 + rng.below(hi - lo - 1);
    if ((c & 1) == 0) ++c;
    for (; c < hi; c += 2)
      if (is_probable_prime(c)) return c;
  }
  throw budget_exceeded("prime search exhausted");  // unreachable for 60-bit intervals
}

}  // namespace koszul
