#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace koszul {

using Int = mpz_class;
using Rat = mpq_class;
using Index = std::int64_t;

// Raised on malformed files, out-of-domain arguments, degenerate inputs.
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration or resampling cap is exceeded.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int binomial(Index n, Index k);  // 0 when k < 0 or k > n
Int factorial(Index n);

// sym_dim(n, d) = dim of degree-d forms in n variables = binomial(n+d-1, d).
// Throws budget_exceeded when the value does not fit an Index.
Index sym_dim(Index n, Index d);

// Parses "a" or "a/b" (decimal, optional leading '-'); canonicalizes.
Rat parse_rational(std::string_view s);
Int parse_integer(std::string_view s);

std::string rat_str(const Rat& r);  // canonical "a" or "a/b"

// Exact rational known to be an integer; throws invalid_input otherwise.
Int rat_to_int(const Rat& r);

}  // namespace koszul
