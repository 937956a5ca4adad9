#pragma once

// Torus lattice of PGSp4, its roots and coroots, and the Weyl group of order 8.
//
// A torus exponent (n, m, l) stands for diag(p^n, p^m, p^(l-n), p^(l-m)).
// Scalars (n, m, l) ~ (n+t, m+t, l+2t) are identified; the canonical
// representative has n = 0.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gsp4 {

struct TorusExponent {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t l = 0;

  // Shift by the center so that n = 0.
  TorusExponent canonical() const { return {0, m - n, l - 2 * n}; }
  bool equivalent(const TorusExponent& o) const { return canonical() == o.canonical(); }
  std::string str() const;

  friend bool operator==(const TorusExponent&, const TorusExponent&) = default;
  friend auto operator<=>(const TorusExponent&, const TorusExponent&) = default;
};

// Exponents (i, j) of the monomial Y^i Z^j.
using CharacterExponent = std::pair<std::int64_t, std::int64_t>;

// s(T_{n,m,l}) = Y^(m-n) Z^(l-2n).
CharacterExponent character(const TorusExponent& t);

class WeylElement {
 public:
  using Matrix3 = std::array<std::array<std::int64_t, 3>, 3>;
  using Matrix2 = std::array<std::array<std::int64_t, 2>, 2>;

  WeylElement();  // identity
  explicit WeylElement(const Matrix3& action);

  // Integer matrix acting on column vectors (n, m, l).
  const Matrix3& action() const { return action_; }
  bool is_identity() const;

  TorusExponent apply_raw(const TorusExponent& t) const;

  friend WeylElement compose(const WeylElement& a, const WeylElement& b);  // a after b
  WeylElement inverse() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  Matrix3 action_;
};

// The three generators: swap n and m, n -> l-n, m -> l-m.
const std::array<WeylElement, 3>& weyl_generators();

// All 8 elements in a fixed order, identity first.
const std::vector<WeylElement>& weyl_group();

// Position of w in weyl_group().
std::size_t weyl_index(const WeylElement& w);

// Center-canonical image of t.
TorusExponent weyl_apply(const WeylElement& w, const TorusExponent& t);

// Action on (Y,Z)-exponents induced by (w s)(T) = s(w^-1 T).
CharacterExponent weyl_monomial_action(const WeylElement& w, const CharacterExponent& mono);

// The 2x2 integer matrix behind weyl_monomial_action, precomputed per element.
const WeylElement::Matrix2& weyl_monomial_matrix(const WeylElement& w);

// Positive roots alpha_1..alpha_4 evaluated on t (index 1-based).
std::int64_t root_value(int index, const TorusExponent& t);
// Coroots as torus exponents (index 1-based).
TorusExponent coroot(int index);

// n <= m <= l/2 after centering.
bool is_positive(const TorusExponent& t);

// The unique positive element of the Weyl orbit of t (canonical form).
TorusExponent dominant_representative(const TorusExponent& t);

// Number of positive roots made negative by w, read off a strictly dominant probe.
int weyl_length(const WeylElement& w);

mpq_class rho(const TorusExponent& t);
mpq_class norm_star_G(const TorusExponent& t);
std::int64_t norm_star_H(std::int64_t l);
bool h_torus_member(const TorusExponent& t);

}  // namespace gsp4
