#pragma once

#include <gmpxx.h>

namespace runfree {

// Counts grow like binom(n(r-1)+1, j); fixed-width integers overflow at
// modest n, so every count is an arbitrary-precision integer.
using Count = mpz_class;
using Rational = mpq_class;

}  // namespace runfree
