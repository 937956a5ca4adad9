#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

#include "gsp4/exact_algebra.hpp"

namespace testing_support {

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Sparse polynomial with up to max_terms terms, exponents in [-e, e], coefficients in [-c, c].
inline gsp4::LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5, std::int64_t e = 3, std::int64_t c = 20) {
  gsp4::LaurentPoly f;
  const auto n = draw(rng, 0, max_terms);
  for (std::int64_t i = 0; i < n; ++i)
    f.add_term({draw(rng, -e, e), draw(rng, -e, e), draw(rng, -e, e)}, draw(rng, -c, c));
  return f;
}

inline gsp4::LaurentPoly random_p_poly(std::mt19937_64& rng, int max_terms = 4, std::int64_t deg = 4, std::int64_t c = 9) {
  gsp4::LaurentPoly f;
  const auto n = draw(rng, 1, max_terms);
  for (std::int64_t i = 0; i < n; ++i) f.add_term({draw(rng, 0, deg), 0, 0}, draw(rng, -c, c));
  return f;
}

inline mpq_class qpow(const mpq_class& base, std::int64_t e) {
  mpq_class r = 1;
  const mpq_class b = e < 0 ? mpq_class(1) / base : base;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
  return r;
}

// Evaluation at a rational point, computed term by term.
inline mpq_class evaluate(const gsp4::LaurentPoly& f, const mpq_class& p, const mpq_class& y, const mpq_class& z) {
  mpq_class acc = 0;
  for (const auto& [m, c] : f.terms()) acc += mpq_class(c) * qpow(p, m.p) * qpow(y, m.y) * qpow(z, m.z);
  return acc;
}

}  // namespace testing_support
