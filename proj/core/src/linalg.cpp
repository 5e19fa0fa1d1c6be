#include "koszul/linalg.hpp"

#include <algorithm>

namespace koszul {

CertifiedRank rank_modular_certified(const SparseMatrix<RationalField>& m,
                                     int num_primes, std::uint64_t seed) {
  if (num_primes < 1) throw invalid_input("need at least one prime");

  // Row-wise denominator clearing preserves rank and keeps reductions honest:
  // a row scaled by the lcm of its denominators is an integer row.
  std::vector<std::vector<std::pair<Index, Int>>> int_rows(
      static_cast<std::size_t>(m.rows()));
  for (Index r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (const auto& e : m.row(r)) {
      Int d = e.val.get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& e : m.row(r))
      int_rows[r].emplace_back(e.col, Int(e.val.get_num() * (l / e.val.get_den())));
  }

  SplitMix64 rng(seed);
  CertifiedRank out;
  constexpr std::uint64_t lo = 1ull << 60, hi = 1ull << 62;
  while (static_cast<int>(out.primes.size()) < num_primes) {
    std::uint64_t p = random_prime_between(rng, lo, hi);
    if (std::find(out.primes.begin(), out.primes.end(), p) != out.primes.end())
      continue;
    PrimeField fp(p);
    TripletBuilder<PrimeField> tb;
    for (Index r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : int_rows[r]) tb.add(r, c, fp.from_mpz(v));
    out.primes.push_back(p);
    out.ranks.push_back(rank(tb.build(fp, m.rows(), m.cols())));
  }
  out.rank = *std::max_element(out.ranks.begin(), out.ranks.end());
  out.primes_agree =
      std::all_of(out.ranks.begin(), out.ranks.end(),
                  [&](Index r) { return r == out.rank; });
  return out;
}

}  // namespace koszul
