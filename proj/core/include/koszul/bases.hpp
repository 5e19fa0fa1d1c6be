#pragma once

#include <array>
#include <map>
#include <vector>

#include "koszul/sparse.hpp"

namespace koszul {

// Monomial basis of Sym^d of an n-dimensional space, frozen in descending
// lexicographic order on exponent vectors with x_0 most significant:
// x_0^d first, x_{n-1}^d last. Index lookups are exact, no hashing games.
class SymBasis {
 public:
  SymBasis(Index n, Index d);

  Index n() const { return n_; }
  Index degree() const { return d_; }
  Index size() const { return static_cast<Index>(list_.size()); }
  const std::vector<int>& exponents(Index i) const {
    return list_[static_cast<std::size_t>(i)];
  }
  Index index_of(const std::vector<int>& expo) const;

 private:
  Index n_, d_;
  std::vector<std::vector<int>> list_;
  std::map<std::vector<int>, Index> index_;
};

// Basis of wedge^p, p in {1,2,3}, as strictly increasing index tuples in
// lexicographic order: for p=2 that is (0,1),(0,2),...,(n-2,n-1).
class WedgeBasis {
 public:
  WedgeBasis(Index n, int p);

  Index n() const { return n_; }
  int p() const { return p_; }
  Index size() const { return static_cast<Index>(list_.size()); }
  const std::array<int, 3>& tuple(Index i) const {
    return list_[static_cast<std::size_t>(i)];
  }
  Index index_of(const std::array<int, 3>& t) const;

 private:
  Index n_;
  int p_;
  std::vector<std::array<int, 3>> list_;
  std::map<std::array<int, 3>, Index> index_;
};

// Matrix of the Koszul differential
//   delta_p : wedge^p V (x) Sym^q V  ->  wedge^{p-1} V (x) Sym^{q+1} V,
//   delta_p(v_{i_1}^...^v_{i_p} (x) f) =
//       sum_j (-1)^{j-1} v_{i_1}^...^{drop i_j}^...^v_{i_p} (x) v_{i_j} f.
// Bases ordered wedge-major: column of (w, t) is w*sym_dim(n,q) + t, row of
// (u, s) is u*sym_dim(n,q+1) + s (for p=1 the row is just s). Entries are
// +-1 and every column carries exactly p of them.
template <FieldType F>
SparseMatrix<F> delta_matrix(int p, Index q, Index n, const F& field) {
  if (p < 1 || p > 3) throw invalid_input("delta_matrix supports p in {1,2,3}");
  if (q < 0 || n < 1) throw invalid_input("delta_matrix needs q >= 0, n >= 1");

  const SymBasis dom_sym(n, q), cod_sym(n, q + 1);
  const WedgeBasis dom_w(n, p);
  const WedgeBasis cod_w(n, p == 1 ? 1 : p - 1);  // row block is trivial for p=1
  const Index cod_wedge_size = p == 1 ? 1 : cod_w.size();

  TripletBuilder<F> tb;
  const auto plus = field.one();
  const auto minus = field.neg(field.one());
  std::vector<int> expo;
  for (Index wi = 0; wi < dom_w.size(); ++wi) {
    const auto& t = dom_w.tuple(wi);
    for (Index ti = 0; ti < dom_sym.size(); ++ti) {
      const Index col = wi * dom_sym.size() + ti;
      for (int j = 0; j < p; ++j) {
        expo = dom_sym.exponents(ti);
        ++expo[t[j]];
        const Index mono = cod_sym.index_of(expo);
        Index wedge_row = 0;
        if (p > 1) {
          std::array<int, 3> rest{0, 0, 0};
          int k = 0;
          for (int a = 0; a < p; ++a)
            if (a != j) rest[k++] = t[a];
          wedge_row = cod_w.index_of(rest);
        }
        tb.add(wedge_row * cod_sym.size() + mono, col,
               j % 2 == 0 ? plus : minus);
      }
    }
  }
  return tb.build(field, cod_wedge_size * cod_sym.size(),
                  dom_w.size() * dom_sym.size());
}

}  // namespace koszul
