#pragma once

// Hecke algebra elements in the basis of basic operators tau(m, l), the
// expression language over T1, T2, sigma, and decomposition of Satake
// polynomials back into the basis.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsp4/spherical.hpp"

namespace gsp4 {

struct BasicIndex {
  std::int64_t m = 0;
  std::int64_t l = 0;

  friend bool operator==(const BasicIndex&, const BasicIndex&) = default;
  // Ordered by (l, m).
  friend bool operator<(const BasicIndex& a, const BasicIndex& b) {
    return a.l != b.l ? a.l < b.l : a.m < b.m;
  }
};

class HeckeElement {
 public:
  using Terms = std::map<BasicIndex, LaurentPoly>;

  HeckeElement() = default;
  static HeckeElement basic(std::int64_t m, std::int64_t l, const LaurentPoly& coeff = LaurentPoly(1));
  static HeckeElement identity() { return basic(0, 0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(std::int64_t m, std::int64_t l) const;

  // Throws InvalidIndex for l < 2m or m < 0, InvalidArgument for non-p coefficients.
  void add(const BasicIndex& idx, const LaurentPoly& coeff);

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  // e.g. "(p^4+p^3+p^2+p)*tau(0,0)+(p+1)*tau(0,2)+..."
  std::string str() const;

 private:
  Terms terms_;
};

SatakePoly to_satake(const HeckeElement& h);

class HeckeExpr {
 public:
  enum class Kind { Scalar, Basic, T1, T2, Sigma, Sum, Difference, Product, Power, Negate };

  static HeckeExpr scalar(LaurentPoly value);
  static HeckeExpr basic(std::int64_t m, std::int64_t l);
  static HeckeExpr atom(Kind kind);
  static HeckeExpr binary(Kind kind, HeckeExpr lhs, HeckeExpr rhs);
  static HeckeExpr power(HeckeExpr base, unsigned exponent);
  static HeckeExpr negate(HeckeExpr inner);

  Kind kind() const { return kind_; }
  const std::vector<HeckeExpr>& children() const { return children_; }
  const LaurentPoly& scalar_value() const { return scalar_; }
  BasicIndex index() const { return index_; }
  unsigned exponent() const { return exponent_; }

  // Largest l of any basic operator the expression can reach.
  std::int64_t l_bound() const;

 private:
  HeckeExpr() = default;

  Kind kind_ = Kind::Scalar;
  LaurentPoly scalar_;
  BasicIndex index_;
  unsigned exponent_ = 0;
  std::vector<HeckeExpr> children_;
};

// expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := ['-'] primary ['^' uint], primary := atom | int | 'p' | '(' expr ')'.
// Atoms: T1, T2, sigma, tau(m,l), I. Throws ParseError or InvalidIndex.
HeckeExpr parse_hecke(std::string_view text);

SatakePoly eval_expr(const HeckeExpr& e);

// sigma = T2^2 - (p+1) T1^2.
HeckeExpr sigma_expr();

struct DecomposeOptions {
  // Largest l considered by the linear-solve fallback; derived from the input when unset.
  std::optional<std::int64_t> l_max;
  // Skip the greedy pass (used to cross-check the two routes).
  bool force_linear_solve = false;
};

// Throws NotInSpan or NonIntegralCoefficient.
HeckeElement decompose(const SatakePoly& s, const DecomposeOptions& options = {});
HeckeElement decompose_greedy(const SatakePoly& s);
HeckeElement decompose_linear(const SatakePoly& s, std::int64_t l_max);

HeckeElement multiply_basis(const HeckeElement& a, const HeckeElement& b);

}  // namespace gsp4
