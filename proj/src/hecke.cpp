#include "gsp4/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gsp4 {

// ---- HeckeElement -----------------------------------------------------------

HeckeElement HeckeElement::basic(std::int64_t m, std::int64_t l, const LaurentPoly& coeff) {
  HeckeElement h;
  h.add({m, l}, coeff);
  return h;
}

LaurentPoly HeckeElement::coefficient(std::int64_t m, std::int64_t l) const {
  auto it = terms_.find({m, l});
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElement::add(const BasicIndex& idx, const LaurentPoly& coeff) {
  if (idx.m < 0 || idx.l < 2 * idx.m) throw Error(Errc::InvalidIndex, "need l >= 2m >= 0");
  if (!coeff.is_p_only()) throw Error(Errc::InvalidArgument, "coefficients must be polynomials in p");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement operator+(HeckeElement a, const HeckeElement& b) {
  for (const auto& [idx, c] : b.terms_) a.add(idx, c);
  return a;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : terms_) {
    const std::string basis = "tau(" + std::to_string(idx.m) + "," + std::to_string(idx.l) + ")";
    std::string piece;
    if (c == LaurentPoly(1)) {
      piece = basis;
    } else if (c == LaurentPoly(-1)) {
      piece = "-" + basis;
    } else {
      piece = "(" + print_canonical(c) + ")*" + basis;
    }
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out;
}

SatakePoly to_satake(const HeckeElement& h) {
  SatakePoly total;
  for (const auto& [idx, c] : h.terms()) total = total + c * basic_transform(idx.m, idx.l);
  return total;
}

// ---- HeckeExpr --------------------------------------------------------------

HeckeExpr HeckeExpr::scalar(LaurentPoly value) {
  if (!value.is_p_only()) throw Error(Errc::InvalidArgument, "scalar must be a polynomial in p");
  HeckeExpr e;
  e.kind_ = Kind::Scalar;
  e.scalar_ = std::move(value);
  return e;
}

HeckeExpr HeckeExpr::basic(std::int64_t m, std::int64_t l) {
  if (m < 0 || l < 2 * m) throw Error(Errc::InvalidIndex, "tau(m,l) needs l >= 2m >= 0");
  HeckeExpr e;
  e.kind_ = Kind::Basic;
  e.index_ = {m, l};
  return e;
}

HeckeExpr HeckeExpr::atom(Kind kind) {
  HeckeExpr e;
  e.kind_ = kind;
  return e;
}

HeckeExpr HeckeExpr::binary(Kind kind, HeckeExpr lhs, HeckeExpr rhs) {
  HeckeExpr e;
  e.kind_ = kind;
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

HeckeExpr HeckeExpr::power(HeckeExpr base, unsigned exponent) {
  HeckeExpr e;
  e.kind_ = Kind::Power;
  e.exponent_ = exponent;
  e.children_.push_back(std::move(base));
  return e;
}

HeckeExpr HeckeExpr::negate(HeckeExpr inner) {
  HeckeExpr e;
  e.kind_ = Kind::Negate;
  e.children_.push_back(std::move(inner));
  return e;
}

std::int64_t HeckeExpr::l_bound() const {
  switch (kind_) {
    case Kind::Scalar: return 0;
    case Kind::Basic: return index_.l;
    case Kind::T1: return 1;
    case Kind::T2: return 2;
    case Kind::Sigma: return 4;
    case Kind::Sum:
    case Kind::Difference: return std::max(children_[0].l_bound(), children_[1].l_bound());
    case Kind::Product: return children_[0].l_bound() + children_[1].l_bound();
    case Kind::Power: return children_[0].l_bound() * exponent_;
    case Kind::Negate: return children_[0].l_bound();
  }
  return 0;
}

HeckeExpr sigma_expr() {
  using K = HeckeExpr::Kind;
  HeckeExpr t2sq = HeckeExpr::power(HeckeExpr::atom(K::T2), 2);
  HeckeExpr t1sq = HeckeExpr::power(HeckeExpr::atom(K::T1), 2);
  HeckeExpr scale = HeckeExpr::scalar(LaurentPoly::var_p() + LaurentPoly(1));
  return HeckeExpr::binary(K::Difference, std::move(t2sq), HeckeExpr::binary(K::Product, std::move(scale), std::move(t1sq)));
}

namespace {

constexpr unsigned kMaxExponent = 64;

class HeckeParser {
 public:
  explicit HeckeParser(std::string_view text) : text_(text) {}

  HeckeExpr parse() {
    HeckeExpr e = expr();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  using K = HeckeExpr::Kind;

  HeckeExpr expr() {
    HeckeExpr lhs = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        lhs = HeckeExpr::binary(K::Sum, std::move(lhs), term());
      } else if (peek() == '-') {
        ++pos_;
        lhs = HeckeExpr::binary(K::Difference, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  HeckeExpr term() {
    HeckeExpr lhs = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') return lhs;
      ++pos_;
      lhs = HeckeExpr::binary(K::Product, std::move(lhs), factor());
    }
  }

  HeckeExpr factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return HeckeExpr::negate(factor());
    }
    HeckeExpr base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected a non-negative exponent");
    const mpz_class e = digits();
    if (e > kMaxExponent) throw ParseError(at, "exponent too large");
    return HeckeExpr::power(std::move(base), static_cast<unsigned>(e.get_ui()));
  }

  HeckeExpr primary() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '(') {
      ++pos_;
      HeckeExpr inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return HeckeExpr::scalar(LaurentPoly(digits()));
    if (!std::isalpha(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected an operand");
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "p") return HeckeExpr::scalar(LaurentPoly::var_p());
    if (word == "I") return HeckeExpr::basic(0, 0);
    if (word == "T1") return HeckeExpr::atom(K::T1);
    if (word == "T2") return HeckeExpr::atom(K::T2);
    if (word == "sigma") return HeckeExpr::atom(K::Sigma);
    if (word == "tau") {
      expect('(');
      const std::int64_t m = signed_int();
      expect(',');
      const std::int64_t l = signed_int();
      expect(')');
      return HeckeExpr::basic(m, l);
    }
    throw ParseError(start, "unknown operator '" + std::string(word) + "'");
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t signed_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected an integer");
    const std::size_t at = pos_;
    const mpz_class v = digits();
    if (v > 1000000) throw ParseError(at, "index out of range");
    return neg ? -v.get_si() : v.get_si();
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HeckeExpr parse_hecke(std::string_view text) { return HeckeParser(text).parse(); }

SatakePoly eval_expr(const HeckeExpr& e) {
  using K = HeckeExpr::Kind;
  const auto& ch = e.children();
  switch (e.kind()) {
    case K::Scalar: return SatakePoly(e.scalar_value());
    case K::Basic: return basic_transform(e.index().m, e.index().l);
    case K::T1: return basic_transform(0, 1);
    case K::T2: return basic_transform(1, 2);
    case K::Sigma: return eval_expr(sigma_expr());
    case K::Sum: return eval_expr(ch[0]) + eval_expr(ch[1]);
    case K::Difference: return eval_expr(ch[0]) - eval_expr(ch[1]);
    case K::Product: return eval_expr(ch[0]) * eval_expr(ch[1]);
    case K::Power: return pow(eval_expr(ch[0]), e.exponent());
    case K::Negate: return -eval_expr(ch[0]);
  }
  throw std::logic_error("unhandled expression kind");
}

// ---- decomposition ----------------------------------------------------------

namespace {

// Collect the p-polynomial standing in front of Y^i Z^j.
LaurentPoly yz_coefficient(const LaurentPoly& f, std::int64_t i, std::int64_t j) {
  LaurentPoly c;
  for (const auto& [mono, coeff] : f.terms())
    if (mono.y == i && mono.z == j) c.add_term({mono.p, 0, 0}, coeff);
  return c;
}

bool has_negative_p_power(const LaurentPoly& c) { return !c.is_zero() && c.min_exponents().p < 0; }

bool is_dominant_monomial(std::int64_t i, std::int64_t j) { return i <= j && 2 * i >= j; }

}  // namespace

HeckeElement decompose_greedy(const SatakePoly& s) {
  HeckeElement result;
  LaurentPoly residual = s.stored();
  while (!residual.is_zero()) {
    const Monomial lead = residual.leading().first;
    const std::int64_t l = lead.z;
    const std::int64_t m = lead.z - lead.y;
    if (m < 0 || l < 2 * m)
      throw Error(Errc::NotInSpan, "leading monomial Y^" + std::to_string(lead.y) + " Z^" + std::to_string(lead.z) +
                                       " is not dominant");
    const LaurentPoly& basis = basic_transform(m, l).stored();
    const auto& [bmono, bcoeff] = basis.leading();
    // Leading term of tau(m,l) is a single p-power times Y^(l-m) Z^l.
    const LaurentPoly target = yz_coefficient(residual, lead.y, lead.z);
    LaurentPoly coeff;
    try {
      coeff = div_exact(target, LaurentPoly::term({bmono.p, 0, 0}, bcoeff));
    } catch (const Error& e) {
      if (e.code() != Errc::NotDivisible) throw;
      throw Error(Errc::NonIntegralCoefficient, "coefficient of tau(" + std::to_string(m) + "," +
                                                    std::to_string(l) + ") is not integral");
    }
    if (has_negative_p_power(coeff))
      throw Error(Errc::NonIntegralCoefficient, "coefficient of tau(" + std::to_string(m) + "," +
                                                    std::to_string(l) + ") has negative powers of p");
    result.add({m, l}, coeff);
    residual -= coeff * basis;
  }
  return result;
}

HeckeElement decompose_linear(const SatakePoly& s, std::int64_t l_max) {
  std::vector<BasicIndex> candidates;
  for (std::int64_t l = 0; l <= l_max; ++l)
    for (std::int64_t m = 0; 2 * m <= l; ++m) candidates.push_back({m, l});

  // Rows: every dominant (Y,Z)-monomial that occurs in the input or a candidate.
  std::set<std::pair<std::int64_t, std::int64_t>> rows;
  auto collect = [&rows](const LaurentPoly& f) {
    for (const auto& [mono, c] : f.terms())
      if (is_dominant_monomial(mono.y, mono.z)) rows.insert({mono.y, mono.z});
  };
  collect(s.stored());
  for (const auto& idx : candidates) collect(basic_transform(idx.m, idx.l).stored());

  std::vector<std::vector<RationalFn>> matrix;
  std::vector<RationalFn> rhs;
  for (const auto& [i, j] : rows) {
    std::vector<RationalFn> row;
    row.reserve(candidates.size());
    for (const auto& idx : candidates) row.emplace_back(yz_coefficient(basic_transform(idx.m, idx.l).stored(), i, j));
    matrix.push_back(std::move(row));
    rhs.emplace_back(yz_coefficient(s.stored(), i, j));
  }

  std::vector<RationalFn> solution;
  try {
    solution = solve_linear(matrix, rhs);
  } catch (const Error& e) {
    if (e.code() == Errc::Inconsistent) throw Error(Errc::NotInSpan, "no combination of basic operators with l <= " + std::to_string(l_max));
    throw;
  }

  HeckeElement result;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (solution[k].is_zero()) continue;
    if (!solution[k].is_polynomial())
      throw Error(Errc::NonIntegralCoefficient, "solution has a rational coefficient in p");
    const LaurentPoly c = solution[k].reduce();
    if (has_negative_p_power(c)) throw Error(Errc::NonIntegralCoefficient, "solution has negative powers of p");
    result.add(candidates[k], c);
  }
  if (to_satake(result) != s) throw Error(Errc::NotInSpan, "input is not Weyl invariant");
  return result;
}

HeckeElement decompose(const SatakePoly& s, const DecomposeOptions& options) {
  std::int64_t l_max = 0;
  for (const auto& [mono, c] : s.stored().terms()) l_max = std::max(l_max, mono.z < 0 ? -mono.z : mono.z);
  if (options.l_max) l_max = *options.l_max;
  if (options.force_linear_solve) return decompose_linear(s, l_max);
  try {
    return decompose_greedy(s);
  } catch (const Error& e) {
    if (e.code() != Errc::NotInSpan && e.code() != Errc::NonIntegralCoefficient) throw;
  }
  return decompose_linear(s, l_max);
}

HeckeElement multiply_basis(const HeckeElement& a, const HeckeElement& b) {
  std::int64_t la = 0, lb = 0;
  for (const auto& [idx, c] : a.terms()) la = std::max(la, idx.l);
  for (const auto& [idx, c] : b.terms()) lb = std::max(lb, idx.l);
  DecomposeOptions opts;
  opts.l_max = la + lb;
  return decompose(to_satake(a) * to_satake(b), opts);
}

}  // namespace gsp4
