#pragma once

#include <cstdint>

namespace koszul {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin; the base set covers all n < 2^64.
bool is_probable_prime(std::uint64_t n);

// splitmix64: the sole source of seeded randomness in the library.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = bound * (~0ull / bound);
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % bound;
  }

  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

// Smallest prime >= a seeded uniform draw from (lo, hi); redraws if the
// upward scan leaves the interval. Used for certification primes.
std::uint64_t random_prime_between(SplitMix64& rng, std::uint64_t lo,
                                   std::uint64_t hi);

}  // namespace koszul
