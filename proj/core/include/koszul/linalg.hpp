#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "koszul/sparse.hpp"

namespace koszul {

// Row echelon data produced by structured Gaussian elimination.
// rows[i] is a sparse row (sorted by column); its leading unknown is
// pivot_cols[i]. Rows are reported in elimination order: rows[i] has zero
// coefficient at pivot_cols[j] for j < i, and when built with jordan=true
// also for j > i.
template <FieldType F>
struct EchelonForm {
  using Row = std::vector<std::pair<Index, typename F::Element>>;
  std::vector<Row> rows;
  std::vector<Index> pivot_cols;
  Index rank = 0;
  Index cols = 0;
};

namespace detail {

// Scales a rational row to a primitive integer vector (positive scale), the
// normal form kept throughout fraction-free elimination.
inline void strip_content(std::vector<std::pair<Index, Rat>>& row) {
  if (row.empty()) return;
  Int l = 1;
  for (auto& [c, v] : row) {
    Int d = v.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  Int g = 0;
  for (auto& [c, v] : row) {
    Int num = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rat s(l, g);  // g > 0: row holds no explicit zeros
  s.canonicalize();
  if (s != 1)
    for (auto& [c, v] : row) v *= s;
}

template <class Row>
inline void normalize_work_row(Row& row) {
  if constexpr (std::is_same_v<typename Row::value_type,
                               std::pair<Index, Rat>>) {
    strip_content(row);
  }
}

// merged = alpha * a + beta * b, zeros dropped.
template <FieldType F>
typename EchelonForm<F>::Row merge_rows(const F& f,
                                        const typename EchelonForm<F>::Row& a,
                                        const typename F::Element& alpha,
                                        const typename EchelonForm<F>::Row& b,
                                        const typename F::Element& beta) {
  typename EchelonForm<F>::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      auto v = f.mul(alpha, a[i].second);
      if (!f.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      auto v = f.mul(beta, b[j].second);
      if (!f.is_zero(v)) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      auto v = f.add(f.mul(alpha, a[i].second), f.mul(beta, b[j].second));
      if (!f.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Row>
auto row_coeff(const Row& row, Index col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const auto& e, Index c) { return e.first < c; });
  return it != row.end() && it->first == col ? it : row.end();
}

}  // namespace detail

// Structured Gaussian elimination with Markowitz pivoting: at every step the
// pivot minimizes (nnz(row)-1)*(nnz(col)-1) over the active submatrix, ties
// broken by smallest column then smallest original row index, so the result
// is deterministic. Over Q rows are kept as primitive integer vectors and
// updates are cross-multiplications (fraction-free); over F_p updates divide
// by the pivot. jordan=true additionally clears pivot columns from rows
// already chosen, yielding the reduced form.
template <FieldType F>
EchelonForm<F> echelon(const SparseMatrix<F>& m, bool jordan = false) {
  using Row = typename EchelonForm<F>::Row;
  const F& f = m.field();

  std::vector<Row> work(static_cast<std::size_t>(m.rows()));
  for (Index r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) work[r].emplace_back(e.col, e.val);
    detail::normalize_work_row(work[r]);
  }

  std::vector<Index> col_count(static_cast<std::size_t>(m.cols()), 0);
  std::vector<char> alive(work.size(), 1);
  for (std::size_t r = 0; r < work.size(); ++r)
    for (auto& [c, v] : work[r]) ++col_count[c];

  EchelonForm<F> out;
  out.cols = m.cols();
  std::vector<Index> done_order;

  auto retire_entries = [&](const Row& row) {
    for (auto& [c, v] : row) --col_count[c];
  };

  for (;;) {
    // Pivot scan over the whole active part; matrices are small or split
    // into components upstream, so the linear scan is not the bottleneck.
    bool found = false;
    Index best_cost = 0, best_col = 0, best_row = 0;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (!alive[r] || work[r].empty()) continue;
      const Index rn = static_cast<Index>(work[r].size()) - 1;
      for (auto& [c, v] : work[r]) {
        Index cost = rn * (col_count[c] - 1);
        if (!found || cost < best_cost ||
            (cost == best_cost &&
             (c < best_col || (c == best_col && static_cast<Index>(r) < best_row)))) {
          found = true;
          best_cost = cost;
          best_col = c;
          best_row = static_cast<Index>(r);
        }
      }
    }
    if (!found) break;

    const Index pr = best_row, pc = best_col;
    auto pivot_it = detail::row_coeff(work[pr], pc);
    const auto pivot_val = pivot_it->second;

    auto reduce_against_pivot = [&](Index r, bool active) {
      auto it = detail::row_coeff(work[r], pc);
      if (it == work[r].end()) return;
      if (active) retire_entries(work[r]);
      Row next;
      if constexpr (F::fraction_free) {
        next = detail::merge_rows<F>(f, work[r], pivot_val, work[pr],
                                     f.neg(it->second));
        detail::normalize_work_row(next);
      } else {
        next = detail::merge_rows<F>(f, work[r], f.one(), work[pr],
                                     f.neg(f.div(it->second, pivot_val)));
      }
      work[r] = std::move(next);
      if (active)
        for (auto& [c, v] : work[r]) ++col_count[c];
    };

    for (std::size_t r = 0; r < work.size(); ++r)
      if (alive[r] && static_cast<Index>(r) != pr) reduce_against_pivot(static_cast<Index>(r), true);
    if (jordan)
      for (Index r : done_order) reduce_against_pivot(r, false);

    alive[pr] = 0;
    retire_entries(work[pr]);
    done_order.push_back(pr);
    out.pivot_cols.push_back(pc);
  }

  out.rank = static_cast<Index>(done_order.size());
  out.rows.reserve(done_order.size());
  for (Index r : done_order) out.rows.push_back(std::move(work[r]));
  return out;
}

namespace detail {

struct DisjointSets {
  std::vector<Index> parent;
  explicit DisjointSets(Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

}  // namespace detail

// Rank via independent elimination of each connected component of the
// row/column incidence graph. Exact for any matrix; on block-structured
// inputs (e.g. multigraded differentials) it turns one large elimination
// into many small ones.
template <FieldType F>
Index rank(const SparseMatrix<F>& m) {
  if (m.nnz() == 0) return 0;
  detail::DisjointSets ds(m.rows() + m.cols());
  for (const auto& e : m.all_entries()) ds.unite(e.row, m.rows() + e.col);

  // Group entries by component root, remapping coordinates per component.
  std::vector<Index> comp_of_row(static_cast<std::size_t>(m.rows()), -1);
  std::vector<Index> comp_of_col(static_cast<std::size_t>(m.cols()), -1);
  std::vector<Index> root_to_id(static_cast<std::size_t>(m.rows() + m.cols()), -1);
  Index n_comp = 0;
  for (const auto& e : m.all_entries()) {
    Index root = ds.find(e.row);
    if (root_to_id[root] < 0) root_to_id[root] = n_comp++;
  }
  std::vector<Index> next_row(static_cast<std::size_t>(n_comp), 0);
  std::vector<Index> next_col(static_cast<std::size_t>(n_comp), 0);
  std::vector<std::vector<typename SparseMatrix<F>::Entry>> comp_entries(
      static_cast<std::size_t>(n_comp));
  for (const auto& e : m.all_entries()) {
    Index cid = root_to_id[ds.find(e.row)];
    if (comp_of_row[e.row] < 0) comp_of_row[e.row] = next_row[cid]++;
    if (comp_of_col[e.col] < 0) comp_of_col[e.col] = next_col[cid]++;
    comp_entries[cid].push_back({comp_of_row[e.row], comp_of_col[e.col], e.val});
  }

  Index total = 0;
  for (Index cid = 0; cid < n_comp; ++cid) {
    TripletBuilder<F> tb;
    for (auto& e : comp_entries[cid]) tb.add(e.row, e.col, std::move(e.val));
    total += echelon(tb.build(m.field(), next_row[cid], next_col[cid])).rank;
  }
  return total;
}

namespace detail {

inline void canonicalize_column(std::vector<std::pair<Index, Rat>>& col) {
  strip_content(col);
  if (!col.empty() && sgn(col.front().second) < 0)
    for (auto& [r, v] : col) v = -v;
}
inline void canonicalize_column(std::vector<std::pair<Index, std::uint64_t>>&) {}

}  // namespace detail

// Basis of {x : m x = 0}, returned as the columns of a matrix. Columns are
// indexed by the free (non-pivot) columns of m in ascending order; over Q
// each is scaled to a primitive integer vector with positive leading entry.
template <FieldType F>
SparseMatrix<F> kernel_basis(const SparseMatrix<F>& m) {
  const F& f = m.field();
  EchelonForm<F> ech = echelon(m, /*jordan=*/true);

  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (Index c : ech.pivot_cols) is_pivot[c] = 1;
  std::vector<Index> free_cols;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  TripletBuilder<F> tb;
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const Index fcol = free_cols[j];
    std::vector<std::pair<Index, typename F::Element>> col;
    col.emplace_back(fcol, f.one());
    // Reduced form: each echelon row reads pivot * x[pc] + c_f * x[fcol] = 0.
    for (Index i = 0; i < ech.rank; ++i) {
      auto it = detail::row_coeff(ech.rows[i], fcol);
      if (it == ech.rows[i].end()) continue;
      auto piv = detail::row_coeff(ech.rows[i], ech.pivot_cols[i]);
      col.emplace_back(ech.pivot_cols[i],
                       f.neg(f.div(it->second, piv->second)));
    }
    std::sort(col.begin(), col.end());
    detail::canonicalize_column(col);
    for (auto& [r, v] : col) tb.add(r, static_cast<Index>(j), std::move(v));
  }
  return tb.build(f, m.cols(), static_cast<Index>(free_cols.size()));
}

// Canonical basis of the row space: reduced echelon rows ordered by pivot
// column; over F_p pivots are 1, over Q rows are primitive integer vectors
// with positive pivot. Two matrices have equal row spaces iff these agree.
template <FieldType F>
SparseMatrix<F> row_space_basis(const SparseMatrix<F>& m) {
  const F& f = m.field();
  EchelonForm<F> ech = echelon(m, /*jordan=*/true);

  std::vector<std::size_t> order(ech.rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ech.pivot_cols[a] < ech.pivot_cols[b];
  });

  TripletBuilder<F> tb;
  for (std::size_t out_r = 0; out_r < order.size(); ++out_r) {
    auto row = ech.rows[order[out_r]];
    if constexpr (F::fraction_free) {
      detail::strip_content(row);
      auto piv = detail::row_coeff(row, ech.pivot_cols[order[out_r]]);
      if (sgn(piv->second) < 0)
        for (auto& [c, v] : row) v = -v;
    } else {
      auto piv = detail::row_coeff(row, ech.pivot_cols[order[out_r]]);
      auto s = f.inv(piv->second);
      for (auto& [c, v] : row) v = f.mul(v, s);
    }
    for (auto& [c, v] : row) tb.add(static_cast<Index>(out_r), c, std::move(v));
  }
  return tb.build(f, ech.rank, m.cols());
}

// Canonical basis (as rows) of rowspace(a) cap rowspace(b): solve
// x^T a = y^T b via the kernel of [a^T | -b^T] and push x back through a.
// Inputs need not be bases; dependent rows only add zero combinations.
template <FieldType F>
SparseMatrix<F> intersect_rowspaces(const SparseMatrix<F>& a,
                                    const SparseMatrix<F>& b) {
  if (a.cols() != b.cols()) throw invalid_input("intersect: ambient mismatch");
  const F& f = a.field();
  auto stacked = hstack(a.transposed(), scale(b.transposed(), f.neg(f.one())));
  auto ker = kernel_basis(stacked);  // columns (x ; y)

  TripletBuilder<F> tb;
  auto kt = ker.transposed();  // row j = j-th kernel vector
  for (Index j = 0; j < kt.rows(); ++j)
    for (const auto& e : kt.row(j)) {
      if (e.col >= a.rows()) break;  // y-part
      for (const auto& ea : a.row(e.col))
        tb.add(j, ea.col, f.mul(e.val, ea.val));
    }
  return row_space_basis(tb.build(f, kt.rows(), a.cols()));
}

template <FieldType F>
bool rowspace_contains(const SparseMatrix<F>& a, const SparseMatrix<F>& v) {
  if (v.cols() != a.cols() || v.rows() != 1)
    throw invalid_input("rowspace_contains expects a single row vector");
  return rank(a) == rank(vstack(a, v));
}

// Rational rank bounded from below by ranks at random large primes.
// rank over F_p of an integer matrix never exceeds the rank over Q, so the
// reported maximum is a certified lower bound, and equals the true rank
// unless every sampled prime divides the same nonzero minor.
struct CertifiedRank {
  Index rank = 0;  // max over primes
  bool primes_agree = true;
  std::vector<std::uint64_t> primes;
  std::vector<Index> ranks;
};

CertifiedRank rank_modular_certified(const SparseMatrix<RationalField>& m,
                                     int num_primes = 3,
                                     std::uint64_t seed = 1);

}  // namespace koszul
