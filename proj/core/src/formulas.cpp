#include "koszul/formulas.hpp"

namespace koszul {

FormalClass FormalClass::symbol(const std::string& name, const Rat& c) {
  FormalClass out;
  if (sgn(c) != 0) out.terms_[name] = c;
  return out;
}

Rat FormalClass::coefficient(const std::string& name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? Rat(0) : it->second;
}

FormalClass& FormalClass::operator+=(const FormalClass& o) {
  for (const auto& [k, v] : o.terms_) {
    Rat s = terms_.count(k) ? Rat(terms_[k] + v) : v;
    if (sgn(s) == 0)
      terms_.erase(k);
    else
      terms_[k] = s;
  }
  return *this;
}

FormalClass& FormalClass::operator-=(const FormalClass& o) {
  FormalClass neg = o;
  neg *= Rat(-1);
  return *this += neg;
}

FormalClass& FormalClass::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v = Rat(v * c);
  return *this;
}

std::string FormalClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : terms_) {
    if (!out.empty()) out += sgn(v) < 0 ? " - " : " + ";
    else if (sgn(v) < 0) out += "-";
    Rat a = abs(v);
    if (a != 1) out += rat_str(a) + "*";
    out += k;
  }
  return out;
}

Int koszul_divisor_degree(Index n) {
  if (n < 3) throw invalid_input("koszul_divisor_degree needs n >= 3");
  return binomial(2 * n - 4, n - 1);
}

Int chow_degree(Index n) {
  if (n < 3) throw invalid_input("chow_degree needs n >= 3");
  Int num = binomial(2 * n - 4, n - 2);
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
              Int(static_cast<long>(n - 1)).get_mpz_t());
  if (r != 0) throw invalid_input("Catalan division not exact");  // never fires
  return q;
}

bool degree_identity(Index n) {
  return koszul_divisor_degree(n) == Int(static_cast<long>(n - 2)) * chow_degree(n);
}

Int wq_bound(Index n, Index q) {
  if (n < 3 || q < 0) throw invalid_input("wq_bound needs n >= 3, q >= 0");
  if (q >= n - 3) return 0;
  Rat v(binomial(n + q - 1, q) * Int(static_cast<long>((n - 2) * (n - q - 3))),
        Int(static_cast<long>(q + 2)));
  v.canonicalize();
  return rat_to_int(v);
}

FormalClass resonance_class(Index e, const FormalClass& c1E,
                            const FormalClass& c1F) {
  if (e < 3) throw invalid_input("resonance_class needs e >= 3");
  Rat lead(factorial(2 * e - 4), factorial(e - 2) * factorial(e - 1));
  lead.canonicalize();
  Rat slope(Int(static_cast<long>(4 * e - 6)), Int(static_cast<long>(e)));
  slope.canonicalize();
  FormalClass inner = c1F;
  FormalClass scaled = c1E;
  scaled *= slope;
  inner -= scaled;
  inner *= lead;
  return inner;
}

FormalClass resonance_class_from_proof(Index e, const FormalClass& c1E,
                                       const FormalClass& c1F) {
  if (e < 4) throw invalid_input("resonance_class_from_proof needs e >= 4");
  // c1(F (x) Sym^{e-3}E) - c1(E (x) Sym^{e-2}E) + c1(Sym^{e-1}E), then /(e-2).
  FormalClass acc;
  FormalClass t = c1F;
  t *= Rat(binomial(2 * e - 4, e - 3));
  acc += t;
  t = c1E;
  t *= Rat(Int(static_cast<long>(2 * e - 3)) * binomial(2 * e - 4, e - 4));
  acc += t;
  t = c1E;
  t *= Rat(binomial(2 * e - 3, e - 2));
  acc -= t;
  t = c1E;
  t *= Rat(Int(static_cast<long>(e)) * binomial(2 * e - 3, e - 3));
  acc -= t;
  t = c1E;
  t *= Rat(binomial(2 * e - 2, e - 2));
  acc += t;
  Rat inv(Int(1), Int(static_cast<long>(e - 2)));
  acc *= inv;
  return acc;
}

FormalClass canonical_pencil_class(Index g) {
  if (g < 3) throw invalid_input("canonical_pencil_class needs g >= 3");
  Rat lead(factorial(2 * g - 4), factorial(g - 2) * factorial(g - 1));
  lead.canonicalize();
  Rat lam_coeff(Int(static_cast<long>(-2 * (2 * g - 3))), Int(static_cast<long>(g)));
  lam_coeff.canonicalize();
  FormalClass out = FormalClass::symbol("lambda", lam_coeff) +
                    FormalClass::symbol("sum_psi", Rat(3));
  out *= lead;
  return out;
}

Rat voisin_coefficient(Index r) {
  if (r < 1) throw invalid_input("voisin_coefficient needs r >= 1");
  Rat v(factorial(2 * r + 1), factorial(r) * factorial(r + 2));
  v.canonicalize();
  return v;
}

FormalClass voisin_class(Index r) {
  return FormalClass::symbol("hhat", voisin_coefficient(r));
}

FormalClass rewrite_in_hhat(const FormalClass& c, Index r) {
  FormalClass out;
  for (const auto& [k, v] : c.terms()) {
    if (k == "psi") {
      out += FormalClass::symbol("hhat", v);
      out += FormalClass::symbol("phi", Rat(v * Rat(static_cast<long>(2 * r))));
    } else {
      out += FormalClass::symbol(k, v);
    }
  }
  return out;
}

Int mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
  if (v.g != w.g) throw invalid_input("mukai_pairing: genus mismatch");
  return v.c * w.c * Int(static_cast<long>(2 * v.g - 2)) - v.r * w.s - v.s * w.r;
}

MukaiVector sym_mukai(Index r, Index s, Index g, Index b, bool spherical) {
  if (r < 1 || b < 0 || g < 0) throw invalid_input("sym_mukai: bad arguments");
  const Int lead = binomial(r + b - 1, b);
  MukaiVector out;
  out.g = g;
  out.r = lead;
  out.c = binomial(r + b - 1, r);
  Rat third;
  if (spherical) {
    if (g != r * s)
      throw invalid_input("spherical path needs g = r*s");
    // lead * (b^2 s - (b-1)(b+r)) / r
    third = Rat(lead * Int(static_cast<long>(b * b * s - (b - 1) * (b + r))),
                Int(static_cast<long>(r)));
  } else {
    third = Rat(lead * Int(static_cast<long>(b * b * (g - r + s - 1) -
                                             b * (r * r + g - s * r - 1) +
                                             r * (r + 1))),
                Int(static_cast<long>(r * (r + 1))));
  }
  third.canonicalize();
  out.s = rat_to_int(third);
  return out;
}

Int h1_sym_dim(Index r, Index b) {
  if (r < 2 || b < 1) throw invalid_input("h1_sym_dim needs r >= 2, b >= 1");
  if (b >= r + 1) return 0;
  Rat v(binomial(r + b - 1, r + 1) * Int(static_cast<long>(r * (r - b + 1))),
        Int(static_cast<long>(b)));
  v.canonicalize();
  return rat_to_int(v);
}

}  // namespace koszul
