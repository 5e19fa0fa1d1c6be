#pragma once

#include <vector>

#include "koszul/subspace.hpp"

namespace koszul {

// Graded pieces W_q attached to K inside wedge^2 V: the middle cohomology of
//   K (x) Sym^q V -> V (x) Sym^{q+1} V -> Sym^{q+2} V
// (restriction of delta_2, then delta_1), equivalently the cokernel of
//   wedge^3 V (x) Sym^{q-1} V -> (wedge^2 V / K) (x) Sym^q V.
// Both routes are implemented independently and cross-checked in tests.

namespace detail {

// delta_{2,q} composed with (K -> wedge^2 V) (x) id. Columns indexed by
// (basis row of K, monomial of Sym^q), K-major.
template <FieldType F>
SparseMatrix<F> restricted_delta2(const Subspace2<F>& k, Index q) {
  const Index n = k.n();
  const F& f = k.field();
  const SymBasis dom(n, q), cod(n, q + 1);
  const WedgeBasis pairs(n, 2);

  TripletBuilder<F> tb;
  std::vector<int> expo;
  for (Index l = 0; l < k.dim(); ++l) {
    for (const auto& e : k.basis().row(l)) {
      const auto& w = pairs.tuple(e.col);
      for (Index ti = 0; ti < dom.size(); ++ti) {
        const Index col = l * dom.size() + ti;
        expo = dom.exponents(ti);
        ++expo[w[0]];
        tb.add(static_cast<Index>(w[1]) * cod.size() + cod.index_of(expo), col,
               e.val);
        --expo[w[0]];
        ++expo[w[1]];
        tb.add(static_cast<Index>(w[0]) * cod.size() + cod.index_of(expo), col,
               f.neg(e.val));
        --expo[w[1]];
      }
    }
  }
  return tb.build(f, n * cod.size(), k.dim() * dom.size());
}

}  // namespace detail

// dim W_q by the three-term route. The multiplication map
// V (x) Sym^{q+1} -> Sym^{q+2} is onto over any field (a degree-(q+2)
// monomial is x_i times a smaller one), so the kernel dimension is taken in
// closed form; paranoid=true recomputes that rank instead of assuming it.
template <FieldType F>
Index wq_dimension(const Subspace2<F>& k, Index q, bool paranoid = false) {
  if (q < 0) throw invalid_input("wq_dimension needs q >= 0");
  const Index n = k.n();
  Index kernel_dim;
  if (paranoid) {
    kernel_dim = n * sym_dim(n, q + 1) -
                 rank(delta_matrix(1, q + 1, n, k.field()));
  } else {
    kernel_dim = n * sym_dim(n, q + 1) - sym_dim(n, q + 2);
  }
  return kernel_dim - rank(detail::restricted_delta2(k, q));
}

// dim W_q as the cokernel of the projected degree-3 differential; this is
// the independent oracle for wq_dimension and shares none of its ranks.
template <FieldType F>
Index wq_dimension_presentation(const Subspace2<F>& k, Index q) {
  if (q < 0) throw invalid_input("wq_dimension needs q >= 0");
  const Index n = k.n();
  const Index pairs_dim = k.ambient_dim();
  const Index quot_dim = pairs_dim - k.dim();
  if (q == 0) return quot_dim;

  const F& f = k.field();
  // Reduced echelon form of the K basis gives the projection to the
  // quotient: coordinates are the non-pivot pair indices.
  EchelonForm<F> ech = echelon(k.basis(), /*jordan=*/true);
  std::vector<Index> pivot_of_col(static_cast<std::size_t>(pairs_dim), -1);
  for (Index i = 0; i < ech.rank; ++i) pivot_of_col[ech.pivot_cols[i]] = i;
  std::vector<Index> free_idx(static_cast<std::size_t>(pairs_dim), -1);
  Index n_free = 0;
  for (Index c = 0; c < pairs_dim; ++c)
    if (pivot_of_col[c] < 0) free_idx[c] = n_free++;

  // pi(e_w) in quotient coordinates, for every pair index w.
  std::vector<std::vector<std::pair<Index, typename F::Element>>> pi(
      static_cast<std::size_t>(pairs_dim));
  for (Index w = 0; w < pairs_dim; ++w) {
    if (pivot_of_col[w] < 0) {
      pi[w].emplace_back(free_idx[w], f.one());
    } else {
      const auto& row = ech.rows[pivot_of_col[w]];
      auto piv = detail::row_coeff(row, w);
      for (const auto& [c, v] : row)
        if (pivot_of_col[c] < 0)
          pi[w].emplace_back(free_idx[c], f.neg(f.div(v, piv->second)));
    }
  }

  if (n < 3)  // wedge^3 V = 0: the presentation has no relations
    return quot_dim * sym_dim(n, q);

  const SymBasis dom(n, q - 1), cod(n, q);
  const WedgeBasis triples(n, 3), pairs(n, 2);
  TripletBuilder<F> tb;
  std::vector<int> expo;
  for (Index wi = 0; wi < triples.size(); ++wi) {
    const auto& t = triples.tuple(wi);
    for (Index ti = 0; ti < dom.size(); ++ti) {
      const Index col = wi * dom.size() + ti;
      for (int j = 0; j < 3; ++j) {
        std::array<int, 3> rest{0, 0, 0};
        int kk = 0;
        for (int a = 0; a < 3; ++a)
          if (a != j) rest[kk++] = t[a];
        expo = dom.exponents(ti);
        ++expo[t[j]];
        const Index mono = cod.index_of(expo);
        const Index w = pairs.index_of(rest);
        for (const auto& [fc, coeff] : pi[w]) {
          auto v = j % 2 == 0 ? coeff : f.neg(coeff);
          tb.add(fc * cod.size() + mono, col, std::move(v));
        }
      }
    }
  }
  auto rel = tb.build(f, n_free * cod.size(), triples.size() * dom.size());
  return n_free * cod.size() - rank(rel);
}

template <FieldType F>
std::vector<Index> hilbert_prefix(const Subspace2<F>& k, Index qmax,
                                  bool paranoid = false) {
  if (qmax < 0) throw invalid_input("hilbert_prefix needs qmax >= 0");
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(qmax) + 1);
  for (Index q = 0; q <= qmax; ++q) out.push_back(wq_dimension(k, q, paranoid));
  return out;
}

// W_q vanishes for all q >= n-3 as soon as it vanishes at q = n-3 (the
// modules are generated in the bottom degree), so triviality of the
// resonance locus is one dimension check at the clamped threshold.
inline Index resonance_threshold(Index n) { return n - 3 > 0 ? n - 3 : 0; }

template <FieldType F>
bool resonance_trivial(const Subspace2<F>& k, bool paranoid = false) {
  return wq_dimension(k, resonance_threshold(k.n()), paranoid) == 0;
}

// dim F(a) for F(a) = {b : a^b pairs to zero with all of K}, via the m x n
// system <k_l, a^e_j>. Always >= 1 for a != 0 (a itself lies in F(a));
// a is a resonance point exactly when the fiber has dimension >= 2.
template <FieldType F>
Index fiber_dimension(const Subspace2<F>& k,
                      const std::vector<typename F::Element>& a) {
  const Index n = k.n();
  if (static_cast<Index>(a.size()) != n)
    throw invalid_input("fiber_dimension: point has wrong length");
  const F& f = k.field();
  const WedgeBasis pairs(n, 2);
  TripletBuilder<F> tb;
  for (Index l = 0; l < k.dim(); ++l)
    for (const auto& e : k.basis().row(l)) {
      const auto& w = pairs.tuple(e.col);
      // <e_i ^ e_j, a ^ b> = a_i b_j - a_j b_i
      tb.add(l, w[1], f.mul(e.val, a[static_cast<std::size_t>(w[0])]));
      tb.add(l, w[0], f.neg(f.mul(e.val, a[static_cast<std::size_t>(w[1])])));
    }
  return n - rank(tb.build(f, k.dim(), n));
}

// Number of projective points [a] over F_p whose fiber has dimension >= 2.
// Enumerates all (p^n - 1)/(p - 1) representatives; refuses budgets above
// 10^7 points.
Index resonance_points_count(const Subspace2<PrimeField>& k);

namespace detail {

inline Index pair_index(Index n, Index i, Index j) {  // i < j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Coordinates of a^b in lexicographic pair order, as a sparse row.
template <FieldType F>
std::vector<std::pair<Index, typename F::Element>> wedge_coords(
    const F& f, Index n, const std::vector<typename F::Element>& a,
    const std::vector<typename F::Element>& b) {
  std::vector<std::pair<Index, typename F::Element>> out;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      auto v = f.sub(f.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]),
                     f.mul(a[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(i)]));
      if (!f.is_zero(v)) out.emplace_back(pair_index(n, i, j), std::move(v));
    }
  return out;
}

template <FieldType F>
void check_vbar(const Subspace2<F>& k, const SparseMatrix<F>& vbar) {
  if (vbar.cols() != k.n())
    throw invalid_input("subspace rows must have length n");
  if (!(vbar.field().config() == k.field().config()))
    throw invalid_input("field mismatch between K and subspace");
  if (rank(vbar) != vbar.rows())
    throw invalid_input("subspace rows are linearly dependent");
}

}  // namespace detail

// Vbar (rows spanning a subspace of the dual of V) is isotropic for K when
// every wedge of two of its vectors pairs to zero with all of K.
template <FieldType F>
bool is_isotropic(const Subspace2<F>& k, const SparseMatrix<F>& vbar) {
  detail::check_vbar(k, vbar);
  const F& f = k.field();
  for (Index r = 0; r < vbar.rows(); ++r) {
    auto a = vbar.dense_row(r);
    for (Index s = r + 1; s < vbar.rows(); ++s) {
      auto b = vbar.dense_row(s);
      auto w = detail::wedge_coords(f, k.n(), a, b);
      for (Index l = 0; l < k.dim(); ++l) {
        auto acc = f.zero();
        auto row = k.basis().row(l);
        std::size_t i = 0, j = 0;
        while (i < row.size() && j < w.size()) {
          if (row[i].col < w[j].first) ++i;
          else if (w[j].first < row[i].col) ++j;
          else acc = f.add(acc, f.mul(row[i++].val, w[j++].second));
        }
        if (!f.is_zero(acc)) return false;
      }
    }
  }
  return true;
}

// Degree-2 separability: the perpendicular of K meets the degree-2 part of
// the ideal generated by Vbar only inside wedge^2 Vbar.
template <FieldType F>
bool is_separable(const Subspace2<F>& k, const SparseMatrix<F>& vbar) {
  detail::check_vbar(k, vbar);
  const F& f = k.field();
  const Index n = k.n();
  const Index pairs_dim = k.ambient_dim();

  // K-perp as rows: kernel of the pairing matrix (pair coordinates are
  // mutually dual, so the pairing matrix is the basis matrix itself).
  auto kperp = kernel_basis(k.basis()).transposed();

  TripletBuilder<F> ideal_tb;
  Index ideal_rows = 0;
  std::vector<typename F::Element> unit(static_cast<std::size_t>(n), f.zero());
  for (Index r = 0; r < vbar.rows(); ++r) {
    auto a = vbar.dense_row(r);
    for (Index u = 0; u < n; ++u) {
      unit[static_cast<std::size_t>(u)] = f.one();
      for (auto& [c, v] : detail::wedge_coords(f, n, a, unit))
        ideal_tb.add(ideal_rows, c, std::move(v));
      unit[static_cast<std::size_t>(u)] = f.zero();
      ++ideal_rows;
    }
  }
  auto ideal2 = ideal_tb.build(f, ideal_rows, pairs_dim);

  TripletBuilder<F> w2_tb;
  Index w2_rows = 0;
  for (Index r = 0; r < vbar.rows(); ++r) {
    auto a = vbar.dense_row(r);
    for (Index s = r + 1; s < vbar.rows(); ++s) {
      for (auto& [c, v] : detail::wedge_coords(f, n, a, vbar.dense_row(s)))
        w2_tb.add(w2_rows, c, std::move(v));
      ++w2_rows;
    }
  }
  auto wedge2 = w2_tb.build(f, w2_rows, pairs_dim);

  auto meet = intersect_rowspaces(kperp, ideal2);
  return rank(wedge2) == rank(vstack(wedge2, meet));
}

template <FieldType F>
bool is_strongly_isotropic(const Subspace2<F>& k, const SparseMatrix<F>& vbar) {
  return is_isotropic(k, vbar) && is_separable(k, vbar);
}

struct MultiplicityCheck {
  bool resonant = false;
  Index threshold_q = 0;
  Index dim_w = 0;
  Index required = 0;  // n - 2
  bool passes = false;  // vacuous when not resonant
};

// Resonant K forces dim W_{n-3} >= n-2; reports the witness numbers.
template <FieldType F>
MultiplicityCheck multiplicity_lower_bound_check(const Subspace2<F>& k) {
  MultiplicityCheck out;
  out.threshold_q = resonance_threshold(k.n());
  out.dim_w = wq_dimension(k, out.threshold_q);
  out.resonant = out.dim_w != 0;
  out.required = k.n() - 2;
  out.passes = !out.resonant || out.dim_w >= out.required;
  return out;
}

}  // namespace koszul
