#include "gsp4/exact_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace gsp4 {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::Underdetermined: return "Underdetermined";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotInSpan: return "NotInSpan";
    case Errc::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case Errc::SamePrime: return "SamePrime";
    case Errc::EmptyWindow: return "EmptyWindow";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, mpz_class(constant));
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

LaurentPoly LaurentPoly::term(const Monomial& mono, const mpz_class& coeff) {
  LaurentPoly r;
  if (coeff != 0) r.terms_.emplace(mono, coeff);
  return r;
}

mpz_class LaurentPoly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool LaurentPoly::is_p_only() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.y == 0 && t.first.z == 0; });
}

Monomial LaurentPoly::min_exponents() const {
  Monomial r = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    r.p = std::min(r.p, m.p);
    r.y = std::min(r.y, m.y);
    r.z = std::min(r.z, m.z);
  }
  return r;
}

Monomial LaurentPoly::max_exponents() const {
  Monomial r = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    r.p = std::max(r.p, m.p);
    r.y = std::max(r.y, m.y);
    r.z = std::max(r.z, m.z);
  }
  return r;
}

void LaurentPoly::add_term(const Monomial& mono, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(const Monomial& mono) const {
  LaurentPoly r;
  // Multiplication by a monomial preserves the order, so hint at the end.
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
  return r;
}

mpz_class LaurentPoly::eval_p(const mpz_class& value) const {
  if (!is_p_only()) throw Error(Errc::InvalidArgument, "eval_p on a polynomial involving Y or Z");
  if (is_zero()) return 0;
  const auto lo = min_exponents().p;
  // Evaluate value^(-lo) * self as a polynomial, then divide back out.
  mpz_class acc = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(m.p - lo));
    acc += c * pw;
  }
  if (lo < 0) {
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(-lo));
    if (den == 0 || !mpz_divisible_p(acc.get_mpz_t(), den.get_mpz_t()))
      throw Error(Errc::NotDivisible, "negative powers of p do not cancel at this value");
    acc /= den;
  } else if (lo > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(lo));
    acc *= f;
  }
  return acc;
}

LaurentPoly LaurentPoly::abs_coefficients() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = abs(c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  mpz_class prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      auto [it, inserted] = r.terms_.try_emplace(ma * mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

std::string LaurentPoly::str() const { return print_canonical(*this); }

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result(1);
  LaurentPoly sq = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= sq;
    exponent >>= 1;
    if (exponent > 0) sq = sq * sq;
  }
  return result;
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return {};

  // Clear the lowest power of every variable from both operands. If a = q*b
  // then the lowest exponents of q are lo(a) - lo(b), so the shifted quotient
  // is an honest polynomial and ordinary division (which terminates on N^3
  // under the canonical order) applies.
  const Monomial lo_a = a.min_exponents();
  const Monomial lo_b = b.min_exponents();
  LaurentPoly rem = a.shifted(lo_a.inverse());
  const LaurentPoly divisor = b.shifted(lo_b.inverse());
  const auto& [lead_m, lead_c] = divisor.leading();

  LaurentPoly quotient;
  mpz_class qc;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    const Monomial qm = rm / lead_m;
    if (qm.p < 0 || qm.y < 0 || qm.z < 0)
      throw Error(Errc::NotDivisible, "leading monomial not divisible");
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      throw Error(Errc::NotDivisible, "leading coefficient not divisible");
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
    quotient.add_term(qm, qc);
    for (const auto& [dm, dc] : divisor.terms()) rem.add_term(dm * qm, -qc * dc);
  }
  return quotient.shifted(lo_a / lo_b);
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    LaurentPoly result;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      first = false;
      auto [mono, coeff] = parse_term();
      result.add_term(mono, sign * coeff);
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  std::pair<Monomial, mpz_class> parse_term() {
    skip_ws();
    mpz_class coeff = 1;
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_unsigned();
      have_any = true;
    }
    Monomial mono;
    while (true) {
      skip_ws();
      const std::size_t save = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!is_atom_start(peek())) throw ParseError(pos_, "expected p, Y or Z after '*'");
      }
      if (!is_atom_start(peek())) {
        pos_ = save;
        break;
      }
      const char var = text_[pos_++];
      std::int64_t e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        e = parse_exponent();
      }
      switch (var) {
        case 'p': mono.p += e; break;
        case 'Y': mono.y += e; break;
        default: mono.z += e; break;
      }
      have_any = true;
    }
    if (!have_any) throw ParseError(pos_, "expected a term");
    return {mono, coeff};
  }

  std::int64_t parse_exponent() {
    skip_ws();
    const bool braced = peek() == '{';
    if (braced) {
      ++pos_;
      skip_ws();
    }
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
      skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected exponent");
    const mpz_class v = parse_unsigned();
    if (v > 1000000) throw ParseError(pos_, "exponent out of range");
    if (braced) {
      skip_ws();
      if (peek() != '}') throw ParseError(pos_, "expected '}'");
      ++pos_;
    }
    const auto e = static_cast<std::int64_t>(v.get_si());
    return neg ? -e : e;
  }

  mpz_class parse_unsigned() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  static bool is_atom_start(char c) { return c == 'p' || c == 'Y' || c == 'Z'; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_var(std::string& out, char var, std::int64_t e, bool& need_star) {
  if (e == 0) return;
  if (need_star) out += '*';
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
  need_star = true;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string print_canonical(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (c < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    const mpz_class mag = abs(c);
    bool need_star = false;
    if (m.is_unit() || mag != 1) {
      out += mag.get_str();
      need_star = true;
    }
    append_var(out, 'p', m.p, need_star);
    append_var(out, 'Y', m.y, need_star);
    append_var(out, 'Z', m.z, need_star);
  }
  return out;
}

RationalFn::RationalFn(LaurentPoly n) : num(std::move(n)), den(1) {}

RationalFn::RationalFn(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
}

LaurentPoly RationalFn::reduce() const { return div_exact(num, den); }

bool RationalFn::is_polynomial() const {
  try {
    (void)reduce();
    return true;
  } catch (const Error& e) {
    if (e.code() != Errc::NotDivisible) throw;
    return false;
  }
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return {a.num * b.num, a.den * b.den};
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.num.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero rational function");
  return {a.num * b.den, a.den * b.num};
}

}  // namespace gsp4
