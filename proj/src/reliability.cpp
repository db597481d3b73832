#include "runfree/reliability.hpp"

#include <cmath>
#include <stdexcept>

#include "runfree/binomial.hpp"

namespace runfree {

ReliabilityPolynomial reliability_poly(std::vector<Count> counts,
                                       int vertex_count) {
  if (vertex_count < 0)
    throw std::invalid_argument("vertex_count must be >= 0");
  counts.resize(vertex_count + 1, Count(0));

  ReliabilityPolynomial poly;
  poly.vertex_count = vertex_count;
  poly.counts = std::move(counts);

  // Expand sum_j F_j p^j (1-p)^(V-j): the p^m coefficient is
  // sum_j F_j (-1)^(m-j) binom(V-j, m-j).
  poly.monomial_coeffs.assign(vertex_count + 1, Count(0));
  for (int m = 0; m <= vertex_count; ++m) {
    Count c = 0;
    for (int j = 0; j <= m; ++j) {
      Count term = poly.counts[j] * binom(vertex_count - j, m - j);
      if ((m - j) % 2 == 0)
        c += term;
      else
        c -= term;
    }
    poly.monomial_coeffs[m] = c;
  }
  return poly;
}

Rational eval_reliability(const ReliabilityPolynomial& poly,
                          const Rational& p) {
  if (p < 0 || p > 1) throw std::domain_error("p must lie in [0,1]");
  const int v = poly.vertex_count;
  const Rational q = Rational(1) - p;
  // factored form, building p^j and q^(V-j) incrementally
  Rational result = 0;
  Rational pj = 1;
  std::vector<Rational> qpow(v + 1);
  qpow[0] = 1;
  for (int i = 1; i <= v; ++i) qpow[i] = qpow[i - 1] * q;
  for (int j = 0; j <= v; ++j) {
    if (poly.counts[j] != 0) result += Rational(poly.counts[j]) * pj * qpow[v - j];
    pj *= p;
  }
  result.canonicalize();
  return result;
}

double eval_reliability(const ReliabilityPolynomial& poly, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must lie in [0,1]");
  const int v = poly.vertex_count;
  const double q = 1.0 - p;
  double result = 0.0;
  for (int j = 0; j <= v; ++j) {
    if (poly.counts[j] == 0) continue;
    result += poly.counts[j].get_d() * std::pow(p, j) * std::pow(q, v - j);
  }
  return result;
}

Rational eval_reliability_derivative(const ReliabilityPolynomial& poly,
                                     const Rational& p) {
  if (p < 0 || p > 1) throw std::domain_error("p must lie in [0,1]");
  Rational result = 0;
  Rational pm = 1;  // p^(m-1)
  for (int m = 1; m <= poly.vertex_count; ++m) {
    result += Rational(poly.monomial_coeffs[m]) * m * pm;
    pm *= p;
  }
  result.canonicalize();
  return result;
}

}  // namespace runfree
