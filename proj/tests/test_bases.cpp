#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "koszul/bases.hpp"
#include "koszul/linalg.hpp"

using namespace koszul;

TEST_CASE("monomial order is descending lex, x_0 most significant") {
  SymBasis b(3, 2);
  REQUIRE(b.size() == 6);
  CHECK(b.exponents(0) == std::vector<int>{2, 0, 0});
  CHECK(b.exponents(1) == std::vector<int>{1, 1, 0});
  CHECK(b.exponents(2) == std::vector<int>{1, 0, 1});
  CHECK(b.exponents(3) == std::vector<int>{0, 2, 0});
  CHECK(b.exponents(4) == std::vector<int>{0, 1, 1});
  CHECK(b.exponents(5) == std::vector<int>{0, 0, 2});
  for (Index i = 0; i < b.size(); ++i) CHECK(b.index_of(b.exponents(i)) == i);

  SymBasis empty(4, 0);
  CHECK(empty.size() == 1);
  CHECK(empty.exponents(0) == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("sym basis size matches the closed form") {
  for (Index n = 1; n <= 5; ++n)
    for (Index d = 0; d <= 5; ++d) CHECK(SymBasis(n, d).size() == sym_dim(n, d));
}

TEST_CASE("wedge pairs are lexicographic") {
  WedgeBasis w(4, 2);
  REQUIRE(w.size() == 6);
  const int want[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (Index i = 0; i < 6; ++i) {
    CHECK(w.tuple(i)[0] == want[i][0]);
    CHECK(w.tuple(i)[1] == want[i][1]);
    CHECK(w.index_of(w.tuple(i)) == i);
  }
  CHECK(WedgeBasis(5, 1).size() == 5);
  CHECK(WedgeBasis(5, 3).size() == 10);
}

TEST_CASE("differential signs in the smallest case") {
  // delta_2(v_0 ^ v_1 (x) 1) = v_1 (x) x_0 - v_0 (x) x_1. With n = 2 the
  // domain is one column; rows are v-major over Sym^1 = {x_0, x_1}.
  RationalField fq;
  auto d = delta_matrix(2, 0, 2, fq);
  REQUIRE(d.rows() == 4);
  REQUIRE(d.cols() == 1);
  auto col = kernel_basis(d);  // full column rank: no kernel
  CHECK(col.cols() == 0);
  // entries: +1 at (v_1, x_0) = row 1*2+0 = 2, -1 at (v_0, x_1) = row 0*2+1
  std::vector<std::pair<Index, Rat>> entries;
  for (Index r = 0; r < d.rows(); ++r)
    for (const auto& e : d.row(r)) entries.emplace_back(r, e.val);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0] == std::pair<Index, Rat>{1, Rat(-1)});
  CHECK(entries[1] == std::pair<Index, Rat>{2, Rat(1)});
}

TEST_CASE("delta_1 at q = 0 is the identity under the canonical indexing") {
  RationalField fq;
  for (Index n = 1; n <= 5; ++n) {
    auto d = delta_matrix(1, 0, n, fq);
    REQUIRE(d.rows() == n);
    REQUIRE(d.cols() == n);
    for (Index r = 0; r < n; ++r) {
      REQUIRE(d.row(r).size() == 1);
      CHECK(d.row(r)[0].col == r);
      CHECK(d.row(r)[0].val == 1);
    }
  }
}

TEST_CASE("column support sizes equal p") {
  PrimeField f7(7);
  for (int p = 1; p <= 3; ++p) {
    auto d = delta_matrix(p, 1, 4, f7);
    std::vector<int> per_col(static_cast<std::size_t>(d.cols()), 0);
    Index total = 0;
    for (Index r = 0; r < d.rows(); ++r)
      for (const auto& e : d.row(r)) {
        ++per_col[static_cast<std::size_t>(e.col)];
        ++total;
      }
    for (int c : per_col) CHECK(c == p);
    CHECK(total == p * d.cols());
  }
}

TEST_CASE("delta o delta vanishes") {
  RationalField fq;
  PrimeField f3(3);
  for (Index n = 2; n <= 5; ++n)
    for (Index q = 0; q <= 3; ++q) {
      CHECK(multiply(delta_matrix(1, q + 1, n, fq), delta_matrix(2, q, n, fq))
                .nnz() == 0);
      CHECK(multiply(delta_matrix(1, q + 1, n, f3), delta_matrix(2, q, n, f3))
                .nnz() == 0);
      if (n >= 3)
        CHECK(multiply(delta_matrix(2, q + 1, n, fq), delta_matrix(3, q, n, fq))
                  .nnz() == 0);
    }
}

TEST_CASE("delta_1 ranks match surjectivity onto Sym^{q+2}") {
  RationalField fq;
  for (Index n = 2; n <= 4; ++n)
    for (Index q = 0; q <= 3; ++q)
      CHECK(rank(delta_matrix(1, q + 1, n, fq)) == sym_dim(n, q + 2));
}
