#pragma once

#include <vector>

#include "koszul/subspace.hpp"

namespace koszul {

namespace detail {

// Integer construction matrices for the named families; rows are vectors of
// wedge^2 V in lexicographic pair coordinates. Field-independent.
std::vector<std::vector<Int>> weyman_rows(Index n);
std::vector<std::vector<Int>> gaussian_rnc_rows(Index n);
std::vector<std::vector<Int>> split_bundle_rows(Index a, Index b);

template <FieldType F>
Subspace2<F> from_int_rows(const F& f, Index n,
                           const std::vector<std::vector<Int>>& rows,
                           Index expected_dim, const char* what) {
  TripletBuilder<F> tb;
  for (Index r = 0; r < static_cast<Index>(rows.size()); ++r)
    for (Index c = 0; c < static_cast<Index>(rows[r].size()); ++c)
      if (rows[r][c] != 0) {
        typename F::Element v;
        if constexpr (F::fraction_free)
          v = Rat(rows[r][c]);
        else
          v = f.from_mpz(rows[r][c]);
        if (!f.is_zero(v)) tb.add(r, c, std::move(v));
      }
  auto basis = tb.build(f, static_cast<Index>(rows.size()), n * (n - 1) / 2);
  if (rank(basis) != expected_dim)
    throw invalid_input(std::string(what) +
                        ": construction degenerates over this field");
  return Subspace2<F>(f, n, std::move(basis));
}

}  // namespace detail

// Uniformly random m-dimensional K: entries are splitmix64 draws, uniform in
// [0,p) over F_p and uniform in [-10,10] over Q. Resamples the whole matrix
// until the rows are independent (at most 100 attempts), so the same seed
// always yields the same subspace.
template <FieldType F>
Subspace2<F> random_subspace(Index n, Index m, const F& f, std::uint64_t seed) {
  if (n < 2) throw invalid_input("random_subspace needs n >= 2");
  const Index pairs = n * (n - 1) / 2;
  if (m < 0 || m > pairs) throw invalid_input("random_subspace: bad dimension");

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    TripletBuilder<F> tb;
    for (Index r = 0; r < m; ++r)
      for (Index c = 0; c < pairs; ++c) {
        typename F::Element v;
        if constexpr (F::fraction_free)
          v = f.from_int(rng.in_range(-10, 10));
        else
          v = rng.below(f.modulus());
        if (!f.is_zero(v)) tb.add(r, c, std::move(v));
      }
    auto basis = tb.build(f, m, pairs);
    if (rank(basis) == m) return Subspace2<F>(f, n, std::move(basis));
  }
  throw budget_exceeded("random_subspace: no full-rank sample in 100 attempts");
}

// All coordinate pairs except (0,1): the largest K avoiding one Pluecker
// point. Its perpendicular is the line through e_0*^e_1*.
template <FieldType F>
Subspace2<F> codim_one(Index n, const F& f) {
  if (n < 2) throw invalid_input("codim_one needs n >= 2");
  const Index pairs = n * (n - 1) / 2;
  TripletBuilder<F> tb;
  for (Index c = 1; c < pairs; ++c) tb.add(c - 1, c, f.one());
  return Subspace2<F>(f, n, tb.build(f, pairs - 1, pairs));
}

// V = binary forms of degree n-1 with basis f_i = x^{n-1-i} y^i; K is the
// row space of the first transvectant wedge^2 V -> (forms of degree 2n-4),
// T(f^g) = f_x g_y - f_y g_x, carried into pair coordinates through the
// monomial dual bases. dim K = 2n-3.
template <FieldType F>
Subspace2<F> weyman(Index n, const F& f) {
  if (n < 3) throw invalid_input("weyman needs n >= 3");
  return detail::from_int_rows(f, n, detail::weyman_rows(n), 2 * n - 3,
                               "weyman");
}

// Same space reached through the curve-theoretic door: sections of O(n-1)
// on P^1 as affine polynomials t^{n-1-i}, and the rows of the derivative
// pairing psi(f^g) = f g' - g f'. Row space equality with weyman() is a
// cross-check in the tests.
template <FieldType F>
Subspace2<F> gaussian_rnc(Index n, const F& f) {
  if (n < 3) throw invalid_input("gaussian_rnc needs n >= 3");
  return detail::from_int_rows(f, n, detail::gaussian_rnc_rows(n), 2 * n - 3,
                               "gaussian_rnc");
}

// Sections of O(a)+O(b) on P^1, n = a+b+2, with the determinant pairing
// d((f1,g1)^(f2,g2)) = f1 g2 - f2 g1. Basis order: (t^0..t^a, 0) then
// (0, t^0..t^b). dim K = a+b+1.
template <FieldType F>
Subspace2<F> split_bundle_p1(Index a, Index b, const F& f) {
  if (a < 0 || b < 0) throw invalid_input("split_bundle_p1 needs a, b >= 0");
  return detail::from_int_rows(f, a + b + 2, detail::split_bundle_rows(a, b),
                               a + b + 1, "split_bundle_p1");
}

// Random (2n-3)-dimensional K inside the span of codim_one(n): column (0,1)
// is identically zero, so e_0*^e_1* survives in the perpendicular and the
// subspace is resonant by construction.
template <FieldType F>
Subspace2<F> resonant_perturbation(Index n, const F& f, std::uint64_t seed) {
  if (n < 4) throw invalid_input("resonant_perturbation needs n >= 4");
  const Index pairs = n * (n - 1) / 2;
  const Index m = 2 * n - 3;

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    TripletBuilder<F> tb;
    for (Index r = 0; r < m; ++r)
      for (Index c = 1; c < pairs; ++c) {
        typename F::Element v;
        if constexpr (F::fraction_free)
          v = f.from_int(rng.in_range(-10, 10));
        else
          v = rng.below(f.modulus());
        if (!f.is_zero(v)) tb.add(r, c, std::move(v));
      }
    auto basis = tb.build(f, m, pairs);
    if (rank(basis) == m) return Subspace2<F>(f, n, std::move(basis));
  }
  throw budget_exceeded(
      "resonant_perturbation: no full-rank sample in 100 attempts");
}

}  // namespace koszul
