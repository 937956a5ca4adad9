#pragma once

// Sparse Laurent polynomials in p, Y, Z with GMP integer coefficients.
//
// Terms are kept in a map ordered by the canonical monomial order, so the
// first entry is always the leading term and printing is deterministic.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsp4/errors.hpp"

namespace gsp4 {

struct Monomial {
  std::int64_t p = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  bool is_unit() const { return p == 0 && y == 0 && z == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.p + b.p, a.y + b.y, a.z + b.z};
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    return {a.p - b.p, a.y - b.y, a.z - b.z};
  }
  Monomial inverse() const { return {-p, -y, -z}; }
};

// Graded lex on (Y, Z) exponents, then by p exponent; "less" here means
// "comes first", i.e. is the larger monomial.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.y + a.z;
    const auto db = b.y + b.z;
    if (da != db) return da > db;
    if (a.y != b.y) return a.y > b.y;
    if (a.z != b.z) return a.z > b.z;
    return a.p > b.p;
  }
};

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, mpz_class, CanonicalOrder>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpz_class& constant);

  static LaurentPoly term(const Monomial& mono, const mpz_class& coeff = 1);
  static LaurentPoly var_p(std::int64_t e = 1) { return term({e, 0, 0}); }
  static LaurentPoly var_y(std::int64_t e = 1) { return term({0, e, 0}); }
  static LaurentPoly var_z(std::int64_t e = 1) { return term({0, 0, e}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Leading term under CanonicalOrder. Precondition: nonzero.
  const std::pair<const Monomial, mpz_class>& leading() const { return *terms_.begin(); }
  mpz_class coefficient(const Monomial& mono) const;

  // True when no monomial involves Y or Z.
  bool is_p_only() const;

  // Componentwise minimum / maximum exponents. Precondition: nonzero.
  Monomial min_exponents() const;
  Monomial max_exponents() const;

  // Adds coeff * mono in place, dropping the term if it cancels.
  void add_term(const Monomial& mono, const mpz_class& coeff);

  LaurentPoly shifted(const Monomial& mono) const;

  // Evaluation of a p-only polynomial at an integer. Negative powers must
  // cancel exactly, otherwise NotDivisible is thrown.
  mpz_class eval_p(const mpz_class& value) const;

  // Coefficientwise absolute value.
  LaurentPoly abs_coefficients() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  Terms terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

// Exact quotient a / b. Throws NotDivisible when b does not divide a in
// Z[p^±1, Y^±1, Z^±1], DivisionByZero when b == 0.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

// Grammar:
//   poly := ['+'|'-'] term (('+'|'-') term)*
//   term := [int] ('*'? atom)*
//   atom := ('p'|'Y'|'Z') ['^' int]
// Whitespace is ignored, multiplication may be implicit, and an exponent may
// be wrapped in braces (p^{4}).
LaurentPoly parse_poly(std::string_view text);
std::string print_canonical(const LaurentPoly& a);

// num / den with no gcd reduction; equality is by cross-multiplication.
struct RationalFn {
  LaurentPoly num{0};
  LaurentPoly den{1};

  RationalFn() = default;
  RationalFn(LaurentPoly n);  // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly n, LaurentPoly d);

  bool is_zero() const { return num.is_zero(); }
  // div_exact(num, den).
  LaurentPoly reduce() const;
  bool is_polynomial() const;

  RationalFn operator-() const { return {-num, den}; }
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num * b.den == b.num * a.den;
  }
};

// Fraction-free (Bareiss) elimination over Z[p^±1]. The system may be
// overdetermined; extra equations must be consistent. Throws Inconsistent or
// Underdetermined.
std::vector<RationalFn> solve_linear(const std::vector<std::vector<RationalFn>>& matrix,
                                     const std::vector<RationalFn>& rhs);

}  // namespace gsp4
