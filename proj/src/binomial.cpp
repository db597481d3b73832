#include "runfree/binomial.hpp"

namespace runfree {

Count binom(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Count result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return result;
}

}  // namespace runfree
