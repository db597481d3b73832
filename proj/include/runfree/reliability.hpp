#pragma once

#include <vector>

#include "runfree/bigint.hpp"

namespace runfree {

/// Exact survival polynomial R(p) = sum_j counts[j] p^j (1-p)^(V-j), where
/// p is the independent per-vertex failure (blue) probability.
///
/// The expanded monomial coefficients are kept for exact derivative checks;
/// float evaluation always uses the factored form (the expanded
/// coefficients alternate in sign and cancel).
struct ReliabilityPolynomial {
  int vertex_count = 0;
  std::vector<Count> counts;          // j -> count, size V+1
  std::vector<Count> monomial_coeffs; // R(p) = sum_m coeffs[m] p^m
};

/// Builds the polynomial from a count table.  Entries beyond the table are
/// treated as 0; throws std::invalid_argument for negative vertex_count.
ReliabilityPolynomial reliability_poly(std::vector<Count> counts,
                                       int vertex_count);

/// Exact rational evaluation; throws std::domain_error for p outside [0,1].
Rational eval_reliability(const ReliabilityPolynomial& poly,
                          const Rational& p);

/// Float evaluation via the factored form.
double eval_reliability(const ReliabilityPolynomial& poly, double p);

/// Exact derivative value R'(p) at a rational point.
Rational eval_reliability_derivative(const ReliabilityPolynomial& poly,
                                     const Rational& p);

}  // namespace runfree
