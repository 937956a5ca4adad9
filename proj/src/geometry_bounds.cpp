#include "gsp4/geometry_bounds.hpp"

#include <algorithm>
#include <set>

namespace gsp4 {

HNormBound HNormBound::from(LaurentPoly v) {
  HNormBound b;
  if (!v.is_zero()) b.leading_degree = v.max_exponents().p;
  b.value = std::move(v);
  return b;
}

HNormBound basic_h_bound(std::int64_t m, std::int64_t l) {
  if (m < 0 || l < 2 * m) throw Error(Errc::InvalidIndex, "need l >= 2m >= 0");
  std::set<TorusExponent> hits;
  for (const auto& w : weyl_group()) {
    const TorusExponent img = weyl_apply(w, {0, m, l});
    if (h_torus_member(img)) hits.insert(img);
  }
  LaurentPoly sum;
  for (const auto& t : hits) sum.add_term({2 * norm_star_H(t.l), 0, 0}, 1);
  return HNormBound::from(std::move(sum));
}

ElementBound element_h_bound(const HeckeElement& h, const mpz_class& p_value) {
  LaurentPoly symbolic;
  mpz_class numeric = 0;
  for (const auto& [idx, c] : h.terms()) {
    if (idx.m != 0) continue;
    const HNormBound basic = basic_h_bound(0, idx.l);
    symbolic += c.abs_coefficients() * basic.value;
    numeric += abs(c.eval_p(p_value)) * basic.value.eval_p(p_value);
  }
  return {HNormBound::from(std::move(symbolic)), numeric};
}

mpz_class cross_prime_bound(const ElementBound& at_p, const mpz_class& p, const ElementBound& at_q,
                            const mpz_class& q) {
  if (p == q) throw Error(Errc::SamePrime, "cross-prime bound needs distinct primes");
  return at_p.numeric * at_q.numeric;
}

std::vector<std::int64_t> good_primes(std::int64_t P, const mpq_class& window_factor, bool g_is_rational) {
  if (!g_is_rational) throw Error(Errc::InvalidArgument, "splitting conditions for irrational g are not implemented");
  if (P < 3) throw Error(Errc::InvalidArgument, "P must be at least 3");
  mpz_class hi_z;
  const mpq_class hi_q = window_factor * P;
  mpz_fdiv_q(hi_z.get_mpz_t(), hi_q.get_num_mpz_t(), hi_q.get_den_mpz_t());
  if (!hi_z.fits_slong_p() || hi_z > 2000000000L) throw Error(Errc::InvalidArgument, "window too large");
  const std::int64_t hi = hi_z.get_si();
  std::vector<std::int64_t> out;
  if (hi < P) return out;
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (std::int64_t i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (std::int64_t j = i * i; j <= hi; j += i) composite[j] = true;
  for (std::int64_t n = std::max<std::int64_t>(P, 2); n <= hi; ++n)
    if (!composite[n] && n % 4 == 3) out.push_back(n);
  return out;
}

}  // namespace gsp4
