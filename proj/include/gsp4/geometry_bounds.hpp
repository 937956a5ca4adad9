#pragma once

// Upper bounds for the L1 norm of Hecke operators restricted to a conjugate of
// the subgroup H, exact as polynomials in p.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "gsp4/hecke.hpp"

namespace gsp4 {

struct HNormBound {
  LaurentPoly value;                          // nonnegative coefficients
  std::optional<std::int64_t> leading_degree;  // empty for the zero bound

  static HNormBound from(LaurentPoly v);
  bool is_zero() const { return value.is_zero(); }
};

// Orbit sum over W.T_{0,m,l} intersected with the H-torus. Throws InvalidIndex.
HNormBound basic_h_bound(std::int64_t m, std::int64_t l);

struct ElementBound {
  HNormBound symbolic;  // coefficientwise |c|, valid for all p
  mpz_class numeric;    // exact |c(p)| at the supplied prime
};

ElementBound element_h_bound(const HeckeElement& h, const mpz_class& p_value);

// Bound for a product of operators at two distinct primes. Throws SamePrime.
mpz_class cross_prime_bound(const ElementBound& at_p, const mpz_class& p, const ElementBound& at_q,
                            const mpz_class& q);

// Primes in [P, window * P] congruent to 3 mod 4, ascending. Only a rational
// conjugating element is supported; g_is_rational = false throws InvalidArgument.
std::vector<std::int64_t> good_primes(std::int64_t P, const mpq_class& window_factor, bool g_is_rational = true);

}  // namespace gsp4
