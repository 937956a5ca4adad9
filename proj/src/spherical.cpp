#include "gsp4/spherical.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace gsp4 {

namespace {

bool odd(std::int64_t v) { return (v % 2) != 0; }

std::pair<LaurentPoly, LaurentPoly> split_by_z_parity(const LaurentPoly& f) {
  LaurentPoly even, oddpart;
  for (const auto& [mono, c] : f.terms()) (odd(mono.z) ? oddpart : even).add_term(mono, c);
  return {even, oddpart};
}

LaurentPoly monomial_yz(const CharacterExponent& e) { return LaurentPoly::term({0, e.first, e.second}); }

// Replace x by p^-1 in a polynomial stored in the variable p.
LaurentPoly at_inverse_p(const LaurentPoly& f) {
  LaurentPoly r;
  for (const auto& [mono, c] : f.terms()) r.add_term({-mono.p, 0, 0}, c);
  return r;
}

}  // namespace

bool SatakePoly::is_weyl_invariant() const {
  for (const auto& w : weyl_generators())
    if (weyl_act(w, stored_) != stored_) return false;
  return true;
}

std::string SatakePoly::str() const {
  auto [even, oddpart] = split_by_z_parity(stored_);
  if (oddpart.is_zero()) return print_canonical(even);
  std::string half = "p^(1/2)*(" + print_canonical(oddpart) + ")";
  if (even.is_zero()) return half;
  return print_canonical(even) + "+" + half;
}

SatakePoly operator*(const SatakePoly& a, const SatakePoly& b) {
  auto [ae, ao] = split_by_z_parity(a.stored_);
  auto [be, bo] = split_by_z_parity(b.stored_);
  LaurentPoly r = ae * be + ae * bo + ao * be;
  if (!ao.is_zero() && !bo.is_zero()) r += LaurentPoly::var_p() * (ao * bo);
  return SatakePoly(std::move(r));
}

SatakePoly operator*(const LaurentPoly& c, const SatakePoly& s) {
  if (!c.is_p_only()) throw Error(Errc::InvalidArgument, "scalar must be a polynomial in p");
  return SatakePoly(c * s.stored_);
}

SatakePoly pow(const SatakePoly& base, unsigned exponent) {
  SatakePoly result(LaurentPoly(1));
  SatakePoly sq = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * sq;
    exponent >>= 1;
    if (exponent > 0) sq = sq * sq;
  }
  return result;
}

LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& f) {
  LaurentPoly r;
  for (const auto& [mono, c] : f.terms()) {
    const auto img = weyl_monomial_action(w, {mono.y, mono.z});
    r.add_term({mono.p, img.first, img.second}, c);
  }
  return r;
}

LaurentPoly poincare_Q() {
  LaurentPoly q;
  for (const auto& w : weyl_group()) q.add_term({weyl_length(w), 0, 0}, 1);
  return q;
}

LaurentPoly stabilizer_Q_t(const TorusExponent& t) {
  if (!is_positive(t)) throw Error(Errc::NotDominant, t.str() + " is not positive");
  const auto base = t.canonical();
  LaurentPoly q;
  for (const auto& w : weyl_group())
    if (weyl_apply(w, base) == base) q.add_term({weyl_length(w), 0, 0}, 1);
  return q;
}

LaurentPoly volume(const TorusExponent& t) {
  const LaurentPoly ratio = div_exact(poincare_Q(), stabilizer_Q_t(t));
  const mpq_class two_rho = 2 * rho(t);
  return at_inverse_p(ratio).shifted({two_rho.get_num().get_si(), 0, 0});
}

CFunctionTerm c_function(const WeylElement& w) {
  const WeylElement inv = w.inverse();
  const LaurentPoly p_inv = LaurentPoly::var_p(-1);
  LaurentPoly num(1), den(1);
  for (int i = 1; i <= 4; ++i) {
    const auto e = character(inv.apply_raw(coroot(i)));
    const LaurentPoly x = monomial_yz({-e.first, -e.second});
    num *= LaurentPoly(1) - p_inv * x;
    den *= LaurentPoly(1) - x;
  }
  return {w, RationalFn(num, den)};
}

SphericalValue spherical_value(const TorusExponent& t) {
  if (!is_positive(t)) throw Error(Errc::NotDominant, t.str() + " is not positive");
  const auto base = t.canonical();
  const LaurentPoly p_inv = LaurentPoly::var_p(-1);
  const Monomial unit{};
  static const CanonicalOrder before;

  // Each factor 1 - x is rewritten as -x (1 - 1/x) whenever 1/x precedes 1 in
  // the canonical order, so that every Weyl term shares one denominator made
  // of the four factors 1 - M with M leading.
  LaurentPoly total;
  LaurentPoly common_den;
  for (const auto& w : weyl_group()) {
    const WeylElement inv = w.inverse();
    LaurentPoly num = monomial_yz(weyl_monomial_action(w, character(base)));
    LaurentPoly den(1);
    for (int i = 1; i <= 4; ++i) {
      const auto e = character(inv.apply_raw(coroot(i)));
      const Monomial x{0, -e.first, -e.second};
      num *= LaurentPoly(1) - p_inv * LaurentPoly::term(x);
      if (before(x, unit)) {
        den *= LaurentPoly(1) - LaurentPoly::term(x);
      } else {
        num *= -LaurentPoly::term(x.inverse());
        den *= LaurentPoly(1) - LaurentPoly::term(x.inverse());
      }
    }
    if (common_den.is_zero()) {
      common_den = den;
    } else if (den != common_den) {
      throw std::logic_error("Weyl terms do not share a denominator");
    }
    total += num;
  }
  return {div_exact(total, common_den), at_inverse_p(poincare_Q()), rho(base)};
}

namespace {

SatakePoly compute_basic_transform(std::int64_t m, std::int64_t l) {
  const TorusExponent t{0, m, l};
  const SphericalValue sv = spherical_value(t);
  // vol * omega = weyl_sum * p^rho / Q_t(p^-1). For odd l, rho is a half
  // integer and the extra p^(1/2) is implicit in the odd Z-exponents.
  mpz_class floor_rho;
  mpz_fdiv_q(floor_rho.get_mpz_t(), sv.rho.get_num_mpz_t(), sv.rho.get_den_mpz_t());
  LaurentPoly scaled = sv.weyl_sum.shifted({floor_rho.get_si(), 0, 0});
  LaurentPoly value = div_exact(scaled, at_inverse_p(stabilizer_Q_t(t)));
  for (const auto& [mono, c] : value.terms())
    if (odd(mono.z) != odd(l)) throw std::logic_error("Z-parity of a transform differs from l");
  return SatakePoly(std::move(value));
}

}  // namespace

const SatakePoly& basic_transform(std::int64_t m, std::int64_t l) {
  if (m < 0 || l < 2 * m)
    throw Error(Errc::InvalidIndex, "need l >= 2m >= 0, got m=" + std::to_string(m) + " l=" + std::to_string(l));
  static std::map<std::pair<std::int64_t, std::int64_t>, SatakePoly> cache;
  static std::shared_mutex mutex;
  const auto key = std::make_pair(m, l);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  SatakePoly value = compute_basic_transform(m, l);
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

}  // namespace gsp4
