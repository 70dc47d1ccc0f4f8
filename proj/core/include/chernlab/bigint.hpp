#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace chernlab {

using BigInt = mpz_class;
using Rational = mpq_class;

// C(a, b), zero when b < 0 or a < b.
BigInt binomial(std::int64_t a, std::int64_t b);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace chernlab
