#include "koszul/bases.hpp"

namespace koszul {

namespace {

void gen_monomials(Index nvars, Index deg, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (nvars == 1) {
    prefix.push_back(static_cast<int>(deg));
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (Index e = deg; e >= 0; --e) {
    prefix.push_back(static_cast<int>(e));
    gen_monomials(nvars - 1, deg - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

SymBasis::SymBasis(Index n, Index d) : n_(n), d_(d) {
  if (n < 1 || d < 0) throw invalid_input("SymBasis needs n >= 1, d >= 0");
  (void)sym_dim(n, d);  // overflow guard
  std::vector<int> prefix;
  gen_monomials(n, d, prefix, list_);
  for (Index i = 0; i < static_cast<Index>(list_.size()); ++i)
    index_.emplace(list_[static_cast<std::size_t>(i)], i);
}

Index SymBasis::index_of(const std::vector<int>& expo) const {
  auto it = index_.find(expo);
  if (it == index_.end()) throw invalid_input("monomial outside basis");
  return it->second;
}

WedgeBasis::WedgeBasis(Index n, int p) : n_(n), p_(p) {
  if (p < 1 || p > 3) throw invalid_input("WedgeBasis supports p in {1,2,3}");
  if (n < 0) throw invalid_input("WedgeBasis needs n >= 0");
  if (p == 1) {
    for (int i = 0; i < n; ++i) list_.push_back({i, 0, 0});
  } else if (p == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) list_.push_back({i, j, 0});
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) list_.push_back({i, j, k});
  }
  for (Index i = 0; i < static_cast<Index>(list_.size()); ++i)
    index_.emplace(list_[static_cast<std::size_t>(i)], i);
}

Index WedgeBasis::index_of(const std::array<int, 3>& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw invalid_input("wedge tuple outside basis");
  return it->second;
}

}  // namespace koszul
