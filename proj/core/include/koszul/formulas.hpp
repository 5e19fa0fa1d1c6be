#pragma once

#include <map>
#include <string>

#include "koszul/numbers.hpp"

namespace koszul {

// Formal Q-linear combination of named divisor-class symbols ("lambda",
// "phi", ...). Zero coefficients are never stored, so equality of maps is
// equality of classes.
class FormalClass {
 public:
  FormalClass() = default;
  static FormalClass symbol(const std::string& name, const Rat& c = Rat(1));

  const std::map<std::string, Rat>& terms() const { return terms_; }
  Rat coefficient(const std::string& name) const;
  bool is_zero() const { return terms_.empty(); }

  FormalClass& operator+=(const FormalClass& o);
  FormalClass& operator-=(const FormalClass& o);
  FormalClass& operator*=(const Rat& c);
  friend FormalClass operator+(FormalClass a, const FormalClass& b) { return a += b; }
  friend FormalClass operator-(FormalClass a, const FormalClass& b) { return a -= b; }
  friend FormalClass operator*(const Rat& c, FormalClass a) { return a *= c; }
  bool operator==(const FormalClass&) const = default;

  std::string str() const;  // symbols alphabetically, e.g. "-5*c1E + 2*c1F"

 private:
  std::map<std::string, Rat> terms_;
};

// Degree of the resonance divisor on the Grassmann cone of 2-planes:
// dim Sym^{n-3} of an n-space, i.e. binomial(2n-4, n-1). n >= 3.
Int koszul_divisor_degree(Index n);

// Degree of the corresponding Chow hypersurface: the Catalan number
// binomial(2n-4, n-2)/(n-1). n >= 3.
Int chow_degree(Index n);

// koszul_divisor_degree(n) == (n-2) * chow_degree(n).
bool degree_identity(Index n);

// Sharp upper bound for dim W_q at dim V = n:
// binomial(n+q-1, q) (n-2)(n-q-3)/(q+2) for 0 <= q <= n-4, zero from
// q = n-3 on (the modules vanish there). Attained exactly when
// dim K = 2n-3 and the resonance is trivial.
Int wq_bound(Index n, Index q);

// Divisor class of the resonance locus for a rank-(e-1) situation with the
// given first Chern classes: (2e-4)!/((e-2)!(e-1)!) * (c1F - (4e-6)/e c1E).
FormalClass resonance_class(Index e, const FormalClass& c1E,
                            const FormalClass& c1F);

// The same class assembled the long way, as
// [c1(F (x) Sym^{e-3} E) - c1(E (x) Sym^{e-2} E) + c1(Sym^{e-1} E)]/(e-2),
// expanded into five binomial terms. Must agree with resonance_class.
FormalClass resonance_class_from_proof(Index e, const FormalClass& c1E,
                                       const FormalClass& c1F);

// Class of the divisor of curves carrying a pencil computing the gonality
// bound, over symbols "lambda" and "sum_psi":
// (2g-4)!/((g-2)!(g-1)!) * (-2(2g-3)/g lambda + 3 sum_psi).
FormalClass canonical_pencil_class(Index g);

// (2r+1)!/(r!(r+2)!), the coefficient of hhat; non-integral for some r
// (e.g. r = 6 gives 429/2), returned exactly.
Rat voisin_coefficient(Index r);
FormalClass voisin_class(Index r);  // coefficient * "hhat"

// Change of basis psi = hhat + 2r*phi on a class over {"phi", "psi", ...}.
FormalClass rewrite_in_hhat(const FormalClass& c, Index r);

// Mukai vector (rank, c * L, Euler part) on a polarized K3 of genus g,
// L^2 = 2g-2.
struct MukaiVector {
  Int r;  // rank, >= 0
  Int c;  // multiple of the polarization
  Int s;
  Index g;
  bool operator==(const MukaiVector&) const = default;
};

// v . w = c_v c_w (2g-2) - r_v s_w - s_v r_w. Genus mismatch is an error.
Int mukai_pairing(const MukaiVector& v, const MukaiVector& w);

// Mukai vector of Sym^b of a bundle with vector (r, L, s). The general path
// is valid for any g; the spherical path additionally assumes g = r*s and
// must agree with the general one there.
MukaiVector sym_mukai(Index r, Index s, Index g, Index b, bool spherical);

// h^1 of Sym^b of the rank-r bundle attached to a degree-(r+1) pencil:
// binomial(r+b-1, r+1) * r(r-b+1)/b for b <= r, zero for b >= r+1.
// Equals wq_bound(r+2, b-2) throughout.
Int h1_sym_dim(Index r, Index b);

}  // namespace koszul
