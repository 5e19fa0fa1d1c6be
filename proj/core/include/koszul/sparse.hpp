#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

// Immutable sparse matrix in row-major triplet form (CSR after construction).
// Entries are sorted by (row, col), duplicates combined, zeros dropped; all
// mutation goes through TripletBuilder. Safe to share across threads.
template <FieldType F>
class SparseMatrix {
 public:
  struct Entry {
    Index row;
    Index col;
    typename F::Element val;
  };

  SparseMatrix(F field, Index rows, Index cols)
      : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw invalid_input("negative matrix shape");
    row_ptr_.assign(static_cast<std::size_t>(rows) + 1, 0);
  }

  SparseMatrix(F field, Index rows, Index cols, std::vector<Entry> sorted)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        entries_(std::move(sorted)) {
    if (rows < 0 || cols < 0) throw invalid_input("negative matrix shape");
    row_ptr_.assign(static_cast<std::size_t>(rows) + 1, 0);
    Index prev_r = -1, prev_c = -1;
    for (const Entry& e : entries_) {
      if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_)
        throw invalid_input("entry out of range");
      if (e.row < prev_r || (e.row == prev_r && e.col <= prev_c))
        throw invalid_input("entries not strictly sorted");
      if (field_.is_zero(e.val)) throw invalid_input("explicit zero entry");
      prev_r = e.row;
      prev_c = e.col;
      ++row_ptr_[static_cast<std::size_t>(e.row) + 1];
    }
    for (std::size_t i = 1; i < row_ptr_.size(); ++i) row_ptr_[i] += row_ptr_[i - 1];
  }

  static SparseMatrix identity(F field, Index n) {
    std::vector<Entry> es;
    es.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) es.push_back({i, i, field.one()});
    return SparseMatrix(std::move(field), n, n, std::move(es));
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index nnz() const { return static_cast<Index>(entries_.size()); }
  const F& field() const { return field_; }
  bool is_zero_matrix() const { return entries_.empty(); }

  std::span<const Entry> row(Index r) const {
    auto b = row_ptr_[static_cast<std::size_t>(r)];
    auto e = row_ptr_[static_cast<std::size_t>(r) + 1];
    return {entries_.data() + b, entries_.data() + e};
  }
  std::span<const Entry> all_entries() const { return entries_; }

  std::vector<typename F::Element> dense_row(Index r) const {
    std::vector<typename F::Element> out(static_cast<std::size_t>(cols_),
                                         field_.zero());
    for (const Entry& e : row(r)) out[static_cast<std::size_t>(e.col)] = e.val;
    return out;
  }

  SparseMatrix transposed() const {
    std::vector<Entry> es(entries_.begin(), entries_.end());
    for (Entry& e : es) std::swap(e.row, e.col);
    std::sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    return SparseMatrix(field_, cols_, rows_, std::move(es));
  }

 private:
  F field_;
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::size_t> row_ptr_;
};

// Accumulates (row, col, val) triplets in any order, combining duplicates.
template <FieldType F>
class TripletBuilder {
 public:
  using Entry = typename SparseMatrix<F>::Entry;

  void add(Index row, Index col, typename F::Element val) {
    buf_.push_back({row, col, std::move(val)});
  }

  SparseMatrix<F> build(F field, Index rows, Index cols) {
    std::sort(buf_.begin(), buf_.end(), [](const Entry& a, const Entry& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> out;
    out.reserve(buf_.size());
    for (Entry& e : buf_) {
      if (!out.empty() && out.back().row == e.row && out.back().col == e.col)
        out.back().val = field.add(out.back().val, e.val);
      else
        out.push_back(std::move(e));
    }
    std::erase_if(out, [&](const Entry& e) { return field.is_zero(e.val); });
    buf_.clear();
    return SparseMatrix<F>(std::move(field), rows, cols, std::move(out));
  }

 private:
  std::vector<Entry> buf_;
};

template <FieldType F>
SparseMatrix<F> multiply(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  if (a.cols() != b.rows()) throw invalid_input("multiply: shape mismatch");
  if (!(a.field().config() == b.field().config()))
    throw invalid_input("multiply: field mismatch");
  const F& f = a.field();
  TripletBuilder<F> tb;
  for (Index i = 0; i < a.rows(); ++i)
    for (const auto& ea : a.row(i))
      for (const auto& eb : b.row(ea.col)) tb.add(i, eb.col, f.mul(ea.val, eb.val));
  return tb.build(f, a.rows(), b.cols());
}

template <FieldType F>
SparseMatrix<F> vstack(const SparseMatrix<F>& top, const SparseMatrix<F>& bottom) {
  if (top.cols() != bottom.cols()) throw invalid_input("vstack: column mismatch");
  if (!(top.field().config() == bottom.field().config()))
    throw invalid_input("vstack: field mismatch");
  TripletBuilder<F> tb;
  for (const auto& e : top.all_entries()) tb.add(e.row, e.col, e.val);
  for (const auto& e : bottom.all_entries()) tb.add(top.rows() + e.row, e.col, e.val);
  return tb.build(top.field(), top.rows() + bottom.rows(), top.cols());
}

template <FieldType F>
SparseMatrix<F> hstack(const SparseMatrix<F>& left, const SparseMatrix<F>& right) {
  if (left.rows() != right.rows()) throw invalid_input("hstack: row mismatch");
  if (!(left.field().config() == right.field().config()))
    throw invalid_input("hstack: field mismatch");
  TripletBuilder<F> tb;
  for (const auto& e : left.all_entries()) tb.add(e.row, e.col, e.val);
  for (const auto& e : right.all_entries()) tb.add(e.row, left.cols() + e.col, e.val);
  return tb.build(left.field(), left.rows(), left.cols() + right.cols());
}

template <FieldType F>
SparseMatrix<F> scale(const SparseMatrix<F>& m, const typename F::Element& c) {
  TripletBuilder<F> tb;
  for (const auto& e : m.all_entries()) tb.add(e.row, e.col, m.field().mul(e.val, c));
  return tb.build(m.field(), m.rows(), m.cols());
}

}  // namespace koszul
