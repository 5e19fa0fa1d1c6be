#include "koszul/engine.hpp"

namespace koszul {

namespace {

// In-place rank of a small dense matrix mod p; stops early once the rank
// reaches stop_at (enough to decide whether a fiber is big).
Index dense_rank_mod_p(std::vector<std::vector<std::uint64_t>>& m,
                       std::uint64_t p, Index stop_at) {
  const Index nr = static_cast<Index>(m.size());
  const Index nc = nr ? static_cast<Index>(m[0].size()) : 0;
  Index rank = 0;
  for (Index col = 0; col < nc && rank < nr; ++col) {
    Index piv = -1;
    for (Index r = rank; r < nr; ++r)
      if (m[r][col] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    const std::uint64_t inv = powmod(m[rank][col] % p, p - 2, p);
    for (Index r = rank + 1; r < nr; ++r) {
      const std::uint64_t f = mulmod(m[r][col] % p, inv, p);
      if (f == 0) continue;
      for (Index c = col; c < nc; ++c)
        m[r][c] = (m[r][c] + (p - mulmod(f, m[rank][c] % p, p))) % p;
    }
    ++rank;
    if (rank >= stop_at) return rank;
  }
  return rank;
}

}  // namespace

Index resonance_points_count(const Subspace2<PrimeField>& k) {
  const std::uint64_t p = k.field().modulus();
  const Index n = k.n();
  const Index m = k.dim();

  Int points;
  mpz_ui_pow_ui(points.get_mpz_t(), p, static_cast<unsigned long>(n));
  points = (points - 1) / Int(std::to_string(p - 1));
  if (points > 10'000'000)
    throw budget_exceeded("projective enumeration needs " + points.get_str() +
                          " points, cap is 10^7");

  // Dense antisymmetric form of each basis vector: row a of the fiber
  // system is b |-> <k_a, point ^ b>.
  const WedgeBasis pairs(n, 2);
  std::vector<std::vector<std::uint64_t>> forms(
      static_cast<std::size_t>(m),
      std::vector<std::uint64_t>(static_cast<std::size_t>(n * n), 0));
  for (Index l = 0; l < m; ++l)
    for (const auto& e : k.basis().row(l)) {
      const auto& w = pairs.tuple(e.col);
      forms[l][static_cast<std::size_t>(w[0] * n + w[1])] = e.val;
      forms[l][static_cast<std::size_t>(w[1] * n + w[0])] = p - e.val;
    }

  std::vector<std::uint64_t> a(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<std::uint64_t>> sys(
      static_cast<std::size_t>(m),
      std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  Index count = 0;

  auto test_point = [&]() {
    for (Index l = 0; l < m; ++l) {
      auto& row = sys[static_cast<std::size_t>(l)];
      std::fill(row.begin(), row.end(), 0);
      const auto& form = forms[static_cast<std::size_t>(l)];
      for (Index i = 0; i < n; ++i) {
        const std::uint64_t ai = a[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (Index j = 0; j < n; ++j) {
          const std::uint64_t t =
              mulmod(ai, form[static_cast<std::size_t>(i * n + j)], p);
          row[static_cast<std::size_t>(j)] =
              (row[static_cast<std::size_t>(j)] + t) % p;
        }
      }
    }
    if (dense_rank_mod_p(sys, p, n - 1) <= n - 2) ++count;
  };

  // Projective representatives: leading coordinate 1, earlier ones 0.
  for (Index lead = 0; lead < n; ++lead) {
    std::fill(a.begin(), a.end(), 0);
    a[static_cast<std::size_t>(lead)] = 1;
    for (;;) {
      test_point();
      Index pos = n - 1;  // odometer over coordinates after lead
      while (pos > lead && a[static_cast<std::size_t>(pos)] == p - 1) {
        a[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos == lead) break;
      ++a[static_cast<std::size_t>(pos)];
    }
  }
  return count;
}

}  // namespace koszul
