#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "koszul/modular.hpp"
#include "koszul/numbers.hpp"

namespace koszul {

// Runtime description of the coefficient field: Q, or F_p with an odd
// prime p < 2^62 (so products fit one 128-bit multiply).
struct FieldConfig {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::uint64_t p = 0;

  static FieldConfig rational() { return FieldConfig{}; }
  static FieldConfig prime(std::uint64_t p);  // validates primality and range

  std::string label() const {
    return kind == Kind::rational ? "rational" : "prime(" + std::to_string(p) + ")";
  }
  bool operator==(const FieldConfig&) const = default;
};

inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ull;  // 2^61 - 1

class RationalField {
 public:
  using Element = Rat;
  static constexpr bool fraction_free = true;

  FieldConfig config() const { return FieldConfig::rational(); }

  Element zero() const { return Rat(0); }
  Element one() const { return Rat(1); }
  Element add(const Element& a, const Element& b) const { return Rat(a + b); }
  Element sub(const Element& a, const Element& b) const { return Rat(a - b); }
  Element mul(const Element& a, const Element& b) const { return Rat(a * b); }
  Element neg(const Element& a) const { return Rat(-a); }
  Element inv(const Element& a) const {
    if (a == 0) throw invalid_input("division by zero");
    return Rat(1 / a);
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  Element from_int(Index v) const { return Rat(static_cast<long>(v)); }
  Element parse(std::string_view s) const { return parse_rational(s); }
  std::string str(const Element& a) const { return rat_str(a); }
  bool operator==(const RationalField&) const = default;
};

class PrimeField {
 public:
  using Element = std::uint64_t;
  static constexpr bool fraction_free = false;

  explicit PrimeField(std::uint64_t p) : p_(FieldConfig::prime(p).p) {}
  explicit PrimeField(const FieldConfig& cfg) : PrimeField(cfg.p) {
    if (cfg.kind != FieldConfig::Kind::prime)
      throw invalid_input("PrimeField needs a prime FieldConfig");
  }

  std::uint64_t modulus() const { return p_; }
  FieldConfig config() const { return FieldConfig::prime(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(Element a, Element b) const {
    Element s = a + b;  // a, b < p < 2^62: no wrap
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const { return mulmod(a, b, p_); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw invalid_input("division by zero");
    return powmod(a, p_ - 2, p_);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool eq(Element a, Element b) const { return a == b; }
  Element from_int(Index v) const {
    Index r = v % static_cast<Index>(p_);
    return r < 0 ? static_cast<Element>(r + static_cast<Index>(p_))
                 : static_cast<Element>(r);
  }
  Element from_mpz(const Int& v) const {
    Int r = v % Int(std::to_string(p_));
    if (r < 0) r += Int(std::to_string(p_));
    return static_cast<Element>(mpz_get_ui(r.get_mpz_t()));
  }
  // Accepts "a" or "a/b" with b invertible mod p.
  Element parse(std::string_view s) const {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return from_mpz(parse_integer(s));
    Element num = from_mpz(parse_integer(s.substr(0, slash)));
    Element den = from_mpz(parse_integer(s.substr(slash + 1)));
    if (den == 0) throw invalid_input("denominator vanishes mod p");
    return div(num, den);
  }
  std::string str(Element a) const { return std::to_string(a); }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

template <class F>
concept FieldType = requires(const F f, const typename F::Element a) {
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.from_int(Index{}) } -> std::convertible_to<typename F::Element>;
  { f.config() } -> std::convertible_to<FieldConfig>;
};

}  // namespace koszul
