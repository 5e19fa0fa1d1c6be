#include "koszul/numbers.hpp"

namespace koszul {

Int binomial(Index n, Index k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Int factorial(Index n) {
  if (n < 0) throw invalid_input("factorial of negative argument");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Index sym_dim(Index n, Index d) {
  if (n <= 0) throw invalid_input("sym_dim needs n >= 1");
  if (d < 0) return 0;
  Int v = binomial(n + d - 1, d);
  if (!v.fits_slong_p()) throw budget_exceeded("sym_dim overflows 64 bits");
  return static_cast<Index>(v.get_si());
}

static Int parse_mpz(std::string_view s) {
  if (s.empty()) throw invalid_input("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw invalid_input("bare sign is not an integer");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw invalid_input("bad integer literal: " + std::string(s));
  return Int(std::string(s), 10);
}

Int parse_integer(std::string_view s) { return parse_mpz(s); }

Rat parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_mpz(s));
  Int num = parse_mpz(s.substr(0, slash));
  Int den = parse_mpz(s.substr(slash + 1));
  if (den == 0) throw invalid_input("zero denominator: " + std::string(s));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Int rat_to_int(const Rat& r) {
  if (r.get_den() != 1) throw invalid_input("expected integer, got " + r.get_str());
  return r.get_num();
}

}  // namespace koszul
