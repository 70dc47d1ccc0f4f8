#include "chernlab/bigint.hpp"

namespace chernlab {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

}  // namespace chernlab
