#include <doctest.h>

#include <set>

#include "gsp4/geometry_bounds.hpp"
#include "test_support.hpp"

using namespace gsp4;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

bool is_prime_by_trial(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Brute force: list the diagonal exponent patterns of the orbit and keep
// those of the shape (a, a, b, b).
LaurentPoly brute_bound(std::int64_t m, std::int64_t l) {
  std::set<std::pair<std::int64_t, std::int64_t>> classes;  // (a, b) up to the center
  const std::int64_t d[4] = {0, m, l, l - m};
  // Weyl group as signed permutations of (x1, x2) with x1*x3 = x2*x4 = p^l.
  const int pick[8][2] = {{0, 1}, {1, 0}, {3, 0}, {0, 3}, {2, 1}, {1, 2}, {2, 3}, {3, 2}};
  for (const auto& pk : pick) {
    const std::int64_t a = d[pk[0]], b = d[pk[1]];
    if (a == b) classes.insert({0, l - 2 * a});
  }
  LaurentPoly out;
  for (const auto& [zero, lh] : classes) out.add_term({2 * (lh < 0 ? -lh : lh), 0, 0}, 1);
  return out;
}

}  // namespace

TEST_CASE("basic bounds") {
  CHECK(basic_h_bound(0, 0).value == P("1"));
  CHECK(basic_h_bound(0, 1).value == P("2p^2"));
  CHECK(basic_h_bound(0, 4).value == P("2p^8"));
  CHECK(basic_h_bound(1, 2).is_zero());
  CHECK_FALSE(basic_h_bound(1, 2).leading_degree.has_value());
  CHECK_THROWS_AS(basic_h_bound(2, 3), Error);
  for (std::int64_t l = 0; l <= 12; ++l)
    for (std::int64_t m = 0; 2 * m <= l; ++m) {
      const HNormBound b = basic_h_bound(m, l);
      CHECK(b.value == brute_bound(m, l));
      // Only the m = 0 operators meet the subgroup torus; then the degree is 2l.
      if (m == 0) {
        REQUIRE(b.leading_degree.has_value());
        CHECK(*b.leading_degree == 2 * l);
      } else {
        CHECK(b.is_zero());
      }
    }
}

TEST_CASE("element bounds for the named operators") {
  const HeckeElement sigma = decompose(eval_expr(parse_hecke("sigma")));
  const ElementBound eb = element_h_bound(sigma, 3);
  CHECK(eb.symbolic.value == P("p^3+p^2+p+1"));
  CHECK(eb.numeric == 40);
  const ElementBound t2 = element_h_bound(decompose(eval_expr(parse_hecke("T2"))), 3);
  CHECK(t2.symbolic.is_zero());
  CHECK(t2.numeric == 0);
  const ElementBound s2 = element_h_bound(decompose(eval_expr(parse_hecke("sigma^2"))), 5);
  CHECK(s2.symbolic.leading_degree == 10);
}

TEST_CASE("subadditivity and evaluation (seeded)") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 1000; ++i) {
    HeckeElement a, b;
    for (int k = 0; k < 3; ++k) {
      const auto l = testing_support::draw(rng, 0, 6);
      a.add({0, l}, testing_support::random_p_poly(rng, 3, 3, 5));
      const auto l2 = testing_support::draw(rng, 0, 6);
      b.add({testing_support::draw(rng, 0, l2 / 2), l2}, testing_support::random_p_poly(rng, 3, 3, 5));
    }
    for (long p : {3L, 7L, 11L, 101L}) {
      const ElementBound ea = element_h_bound(a, p), eb = element_h_bound(b, p), es = element_h_bound(a + b, p);
      CHECK(es.numeric <= ea.numeric + eb.numeric);
      // The symbolic bound dominates the numeric one.
      CHECK(es.numeric <= es.symbolic.value.eval_p(p));
    }
  }
}

TEST_CASE("cross-prime bound") {
  const ElementBound a = element_h_bound(HeckeElement::basic(0, 1), 3);
  const ElementBound b = element_h_bound(HeckeElement::basic(0, 1), 7);
  CHECK(cross_prime_bound(a, 3, b, 7) == mpz_class(18) * 98);
  try {
    cross_prime_bound(a, 3, a, 3);
    FAIL("expected SamePrime");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SamePrime);
  }
}

TEST_CASE("good primes against trial division") {
  for (std::int64_t P : {3, 10, 100, 1000, 4567}) {
    std::vector<std::int64_t> expected;
    for (std::int64_t n = P; n <= 2 * P; ++n)
      if (n % 4 == 3 && is_prime_by_trial(n)) expected.push_back(n);
    CHECK(good_primes(P, 2) == expected);
  }
  CHECK(good_primes(1000, 2).size() == 68);
  CHECK(good_primes(10, mpq_class(3, 2)) == std::vector<std::int64_t>{11});
  CHECK_THROWS_AS(good_primes(1000, 2, false), Error);
  CHECK_THROWS_AS(good_primes(2, 2), Error);
}
