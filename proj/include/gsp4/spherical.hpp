#pragma once

// Spherical functions, c-function, Poincare polynomials, double coset volumes
// and the transforms of the basic Hecke operators.

#include <string>

#include "gsp4/exact_algebra.hpp"
#include "gsp4/root_datum.hpp"

namespace gsp4 {

// Weyl-invariant Laurent polynomial in (Y, Z) with coefficients in Z[p^1/2].
//
// Only half-integral powers of p that come with odd powers of Z occur: every
// stored monomial whose Z-exponent is odd carries an implicit extra p^(1/2).
// Under that reading the stored LaurentPoly is integral and products stay
// closed (two implicit half powers combine into one explicit p).
class SatakePoly {
 public:
  SatakePoly() = default;
  explicit SatakePoly(LaurentPoly stored) : stored_(std::move(stored)) {}

  const LaurentPoly& stored() const { return stored_; }
  bool is_zero() const { return stored_.is_zero(); }

  bool is_weyl_invariant() const;

  // Text form; the half-integral part is printed as p^(1/2)*(...).
  std::string str() const;

  SatakePoly operator-() const { return SatakePoly(-stored_); }
  friend SatakePoly operator+(const SatakePoly& a, const SatakePoly& b) {
    return SatakePoly(a.stored_ + b.stored_);
  }
  friend SatakePoly operator-(const SatakePoly& a, const SatakePoly& b) {
    return SatakePoly(a.stored_ - b.stored_);
  }
  friend SatakePoly operator*(const SatakePoly& a, const SatakePoly& b);
  // Scaling by a polynomial in p.
  friend SatakePoly operator*(const LaurentPoly& c, const SatakePoly& s);
  friend bool operator==(const SatakePoly&, const SatakePoly&) = default;

 private:
  LaurentPoly stored_;
};

SatakePoly pow(const SatakePoly& base, unsigned exponent);

// Apply a Weyl element to every monomial of a (p, Y, Z) polynomial.
LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& f);

// Univariate polynomials in x are stored as LaurentPoly in the variable p.
LaurentPoly poincare_Q();
// Throws NotDominant.
LaurentPoly stabilizer_Q_t(const TorusExponent& t);

// Double coset volume as a polynomial in p. Throws NotDominant.
LaurentPoly volume(const TorusExponent& t);

struct CFunctionTerm {
  WeylElement w;
  RationalFn value;
};

// c(ws) with its four (1 - monomial) denominator factors.
CFunctionTerm c_function(const WeylElement& w);

// Macdonald's formula at a positive t, before volume scaling:
//   omega = weyl_sum / (Q(p^-1) * p^rho).
// weyl_sum is already reduced to a Laurent polynomial.
struct SphericalValue {
  LaurentPoly weyl_sum;
  LaurentPoly q_at_inverse_p;
  mpq_class rho;
};
SphericalValue spherical_value(const TorusExponent& t);

// Transform of the basic operator of index (m, l). Memoized and thread safe.
// Throws InvalidIndex unless l >= 2m >= 0.
const SatakePoly& basic_transform(std::int64_t m, std::int64_t l);

}  // namespace gsp4
