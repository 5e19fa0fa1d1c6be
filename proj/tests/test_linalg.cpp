#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "koszul/linalg.hpp"

using namespace koszul;

namespace {

template <FieldType F>
SparseMatrix<F> from_dense(const F& f, const std::vector<std::vector<int>>& d) {
  TripletBuilder<F> tb;
  for (Index r = 0; r < static_cast<Index>(d.size()); ++r)
    for (Index c = 0; c < static_cast<Index>(d[r].size()); ++c)
      if (d[r][c] != 0) tb.add(r, c, f.from_int(d[r][c]));
  return tb.build(f, static_cast<Index>(d.size()),
                  d.empty() ? 0 : static_cast<Index>(d[0].size()));
}

// Plain dense elimination over mpq_class, written independently of the
// sparse code paths; used as the rank oracle for randomized checks.
Index dense_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  Index r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<Index>(rows); ++c) {
    std::size_t piv = rows;
    for (std::size_t i = static_cast<std::size_t>(r); i < rows; ++i)
      if (sgn(m[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[piv]);
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rat factor = m[i][c] / m[static_cast<std::size_t>(r)][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] -= factor * m[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("rank of small known matrices") {
  RationalField fq;
  CHECK(rank(SparseMatrix<RationalField>::identity(fq, 5)) == 5);
  CHECK(rank(from_dense(fq, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(from_dense(fq, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(rank(from_dense(fq, {{0, 0}, {0, 0}})) == 0);

  PrimeField f5(5);
  // Rank drops mod 5: det = 5
  CHECK(rank(from_dense(fq, {{1, 2}, {3, 11}})) == 2);
  CHECK(rank(from_dense(f5, {{1, 2}, {3, 11}})) == 1);
}

TEST_CASE("rank agrees with dense elimination on random matrices") {
  SplitMix64 rng(991);
  RationalField fq;
  PrimeField fp(97);
  for (int trial = 0; trial < 60; ++trial) {
    Index rows = static_cast<Index>(rng.in_range(1, 9));
    Index cols = static_cast<Index>(rng.in_range(1, 9));
    std::vector<std::vector<int>> d(static_cast<std::size_t>(rows),
                                    std::vector<int>(static_cast<std::size_t>(cols)));
    for (auto& row : d)
      for (auto& v : row)
        v = rng.next() % 3 == 0 ? static_cast<int>(rng.in_range(-9, 9)) : 0;

    std::vector<std::vector<Rat>> dq;
    for (const auto& row : d) {
      dq.emplace_back();
      for (int v : row) dq.back().emplace_back(v);
    }
    CHECK(rank(from_dense(fq, d)) == dense_rank(dq));

    // rank() eliminates connected components separately; the plain
    // whole-matrix echelon form must agree.
    auto mp = from_dense(fp, d);
    EchelonForm<PrimeField> e = echelon(mp);
    CHECK(rank(mp) == e.rank);
    auto mq = from_dense(fq, d);
    CHECK(rank(mq) == echelon(mq).rank);
  }
}

TEST_CASE("echelon pivots are strictly increasing") {
  RationalField fq;
  auto m = from_dense(fq, {{0, 1, 2, 3}, {1, 1, 0, 0}, {1, 2, 2, 3}, {2, 3, 2, 4}});
  auto e = echelon(m);
  for (std::size_t i = 1; i < e.pivot_cols.size(); ++i)
    CHECK(e.pivot_cols[i - 1] < e.pivot_cols[i]);
  CHECK(e.rank == 3);
}

TEST_CASE("kernel basis spans the kernel") {
  RationalField fq;
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    Index rows = static_cast<Index>(rng.in_range(1, 7));
    Index cols = static_cast<Index>(rng.in_range(1, 7));
    TripletBuilder<RationalField> tb;
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c)
        if (rng.next() % 2) tb.add(r, c, fq.from_int(rng.in_range(-5, 5)));
    auto m = tb.build(fq, rows, cols);
    auto ker = kernel_basis(m);  // columns are kernel vectors
    CHECK(ker.rows() == cols);
    CHECK(ker.cols() == cols - rank(m));
    auto prod = multiply(m, ker);
    CHECK(prod.nnz() == 0);
    CHECK(rank(ker) == ker.cols());
  }
}

TEST_CASE("row space basis is canonical") {
  RationalField fq;
  auto a = from_dense(fq, {{2, 4, 6}, {1, 1, 1}});
  auto b = from_dense(fq, {{1, 2, 3}, {3, 5, 7}, {4, 7, 10}});  // same span
  auto ra = row_space_basis(a);
  auto rb = row_space_basis(b);
  REQUIRE(ra.rows() == rb.rows());
  for (Index r = 0; r < ra.rows(); ++r)
    CHECK(ra.dense_row(r) == rb.dense_row(r));
}

TEST_CASE("intersection of row spaces") {
  RationalField fq;
  auto a = from_dense(fq, {{1, 0, 0}, {0, 1, 0}});   // span{e0, e1}
  auto b = from_dense(fq, {{0, 1, 0}, {0, 0, 1}});   // span{e1, e2}
  auto meet = intersect_rowspaces(a, b);
  REQUIRE(meet.rows() == 1);
  auto v = meet.dense_row(0);
  CHECK(sgn(v[0]) == 0);
  CHECK(sgn(v[1]) != 0);
  CHECK(sgn(v[2]) == 0);

  auto disjoint = intersect_rowspaces(from_dense(fq, {{1, 0, 0}}),
                                      from_dense(fq, {{0, 0, 1}}));
  CHECK(disjoint.rows() == 0);
}

TEST_CASE("containment of a vector in a row space") {
  RationalField fq;
  auto a = from_dense(fq, {{1, 2, 3}, {0, 1, 1}});
  CHECK(rowspace_contains(a, from_dense(fq, {{1, 3, 4}})));
  CHECK(!rowspace_contains(a, from_dense(fq, {{0, 0, 1}})));
}

TEST_CASE("certified modular rank") {
  RationalField fq;
  auto m = from_dense(fq, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 0, 1}});
  auto cr = rank_modular_certified(m, 3, 7);
  CHECK(cr.rank == 3);
  CHECK(cr.primes_agree);
  CHECK(cr.primes.size() == 3);
  CHECK(cr.primes[0] != cr.primes[1]);

  // Rational entries: rank is invariant under row scaling.
  TripletBuilder<RationalField> tb;
  tb.add(0, 0, Rat(1, 3));
  tb.add(0, 1, Rat(2, 3));
  tb.add(1, 0, Rat(1, 2));
  tb.add(1, 1, Rat(1));
  auto frac = tb.build(fq, 2, 2);
  CHECK(rank_modular_certified(frac, 2, 1).rank == rank(frac));
}

TEST_CASE("fraction-free elimination keeps exact values") {
  // A matrix engineered to produce growing intermediate entries; the final
  // rank must still be exact.
  RationalField fq;
  std::vector<std::vector<int>> d(8, std::vector<int>(8));
  SplitMix64 rng(5);
  for (auto& row : d)
    for (auto& v : row) v = static_cast<int>(rng.in_range(-1000, 1000));
  d[7] = d[6];  // force a dependency
  std::vector<std::vector<Rat>> dq;
  for (const auto& row : d) {
    dq.emplace_back();
    for (int v : row) dq.back().emplace_back(v);
  }
  CHECK(rank(from_dense(fq, d)) == dense_rank(dq));
  CHECK(rank(from_dense(fq, d)) == 7);
}
