#pragma once

#include "runfree/bigint.hpp"

namespace runfree {

/// Binomial coefficient with the convention that the value is 0 whenever
/// a < 0, b < 0 or b > a.
Count binom(long a, long b);

}  // namespace runfree
