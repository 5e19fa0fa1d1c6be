#pragma once

#include "koszul/bases.hpp"
#include "koszul/linalg.hpp"

namespace koszul {

// A subspace K of wedge^2 V, held as a basis matrix whose rows are the basis
// vectors in lexicographic pair coordinates (0,1),(0,2),...,(n-2,n-1).
// Construction validates the shape and that the rows are independent, so a
// Subspace2 always carries an honest basis.
template <FieldType F>
class Subspace2 {
 public:
  Subspace2(F field, Index n, SparseMatrix<F> basis)
      : field_(std::move(field)), n_(n), basis_(std::move(basis)) {
    if (n_ < 1) throw invalid_input("Subspace2 needs n >= 1");
    const Index pairs = n_ * (n_ - 1) / 2;
    if (basis_.cols() != pairs)
      throw invalid_input("basis has " + std::to_string(basis_.cols()) +
                          " columns, expected " + std::to_string(pairs));
    if (!(basis_.field().config() == field_.config()))
      throw invalid_input("basis field differs from subspace field");
    if (rank(basis_) != basis_.rows())
      throw invalid_input("basis rows are linearly dependent");
  }

  Index n() const { return n_; }
  Index dim() const { return basis_.rows(); }
  Index ambient_dim() const { return basis_.cols(); }
  const F& field() const { return field_; }
  const SparseMatrix<F>& basis() const { return basis_; }

 private:
  F field_;
  Index n_;
  SparseMatrix<F> basis_;
};

}  // namespace koszul
