#pragma once

#include <string>
#include <utility>
#include <vector>

#include "koszul/subspace.hpp"

namespace koszul {

// On-disk description of a subspace K of wedge^2 V. JSON schema:
//   {
//     "n": 5,
//     "field": {"kind": "rational"} | {"kind": "prime", "p": "<decimal>"},
//     "pairs_order": "lex",
//     "basis": [["1", "0", "-2/3", ...], ...]
//   }
// pairs_order is mandatory and must be "lex" (the only supported order);
// rows have length n(n-1)/2 and must be linearly independent. Coefficients
// are decimal integers or "a/b" fractions.
struct KFileData {
  Index n = 0;
  FieldConfig field;
  std::vector<std::vector<std::string>> basis;
};

// Same shape for a subspace of the dual of V: rows of length n, no
// pairs_order key.
struct VFileData {
  Index n = 0;
  FieldConfig field;
  std::vector<std::vector<std::string>> basis;
};

KFileData kfile_parse(const std::string& json_text);
std::string kfile_dump(const KFileData& k);
KFileData kfile_read(const std::string& path);
void kfile_write(const std::string& path, const KFileData& k);

VFileData vfile_parse(const std::string& json_text);
VFileData vfile_read(const std::string& path);

// Machine-readable result envelope. Serialized values are exact decimal
// integers or "a/b" strings; no floating-point token ever appears.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string field_label;
  std::vector<std::pair<std::string, std::string>> results;
  std::int64_t timing_ms = 0;

  std::string to_json() const;
  std::string to_text() const;
};

template <FieldType F>
Subspace2<F> subspace_from_kfile(const KFileData& k, const F& f) {
  if (k.n < 1) throw invalid_input("KFile: n must be >= 1");
  const Index pairs = k.n * (k.n - 1) / 2;
  TripletBuilder<F> tb;
  for (Index r = 0; r < static_cast<Index>(k.basis.size()); ++r) {
    const auto& row = k.basis[static_cast<std::size_t>(r)];
    if (static_cast<Index>(row.size()) != pairs)
      throw invalid_input("KFile: basis row has wrong length");
    for (Index c = 0; c < pairs; ++c) {
      auto v = f.parse(row[static_cast<std::size_t>(c)]);
      if (!f.is_zero(v)) tb.add(r, c, std::move(v));
    }
  }
  return Subspace2<F>(f, k.n,
                      tb.build(f, static_cast<Index>(k.basis.size()), pairs));
}

template <FieldType F>
KFileData kfile_from_subspace(const Subspace2<F>& s) {
  KFileData out;
  out.n = s.n();
  out.field = s.field().config();
  const F& f = s.field();
  for (Index r = 0; r < s.dim(); ++r) {
    std::vector<std::string> row;
    for (const auto& v : s.basis().dense_row(r)) row.push_back(f.str(v));
    out.basis.push_back(std::move(row));
  }
  return out;
}

template <FieldType F>
SparseMatrix<F> matrix_from_vfile(const VFileData& v, const F& f) {
  if (v.n < 1) throw invalid_input("VFile: n must be >= 1");
  TripletBuilder<F> tb;
  for (Index r = 0; r < static_cast<Index>(v.basis.size()); ++r) {
    const auto& row = v.basis[static_cast<std::size_t>(r)];
    if (static_cast<Index>(row.size()) != v.n)
      throw invalid_input("VFile: basis row has wrong length");
    for (Index c = 0; c < v.n; ++c) {
      auto val = f.parse(row[static_cast<std::size_t>(c)]);
      if (!f.is_zero(val)) tb.add(r, c, std::move(val));
    }
  }
  return tb.build(f, static_cast<Index>(v.basis.size()), v.n);
}

}  // namespace koszul
