#include "koszul/field.hpp"

namespace koszul {

FieldConfig FieldConfig::prime(std::uint64_t p) {
  if (p <= 2 || p >= (1ull << 62))
    throw invalid_input("prime modulus must satisfy 2 < p < 2^62");
  if (!is_probable_prime(p))
    throw invalid_input("modulus " + std::to_string(p) + " is not prime");
  FieldConfig cfg;
  cfg.kind = Kind::prime;
  cfg.p = p;
  return cfg;
}

}  // namespace koszul
