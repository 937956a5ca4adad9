#include <doctest.h>

#include <set>

#include "gsp4/root_datum.hpp"
#include "test_support.hpp"

using namespace gsp4;
using testing_support::draw;

namespace {

TorusExponent random_torus(std::mt19937_64& rng) {
  return {draw(rng, -3, 3), draw(rng, -3, 3), draw(rng, -6, 6)};
}

// Diagonal entries exponents of diag(p^n, p^m, p^(l-n), p^(l-m)).
std::array<std::int64_t, 4> diagonal(const TorusExponent& t) { return {t.n, t.m, t.l - t.n, t.l - t.m}; }

}  // namespace

TEST_CASE("group has order 8 and is closed") {
  const auto& W = weyl_group();
  REQUIRE(W.size() == 8);
  CHECK(W.front().is_identity());
  for (const auto& a : W) {
    for (const auto& b : W) CHECK(weyl_index(compose(a, b)) < 8);
    CHECK(compose(a, a.inverse()).is_identity());
  }
  for (const auto& g : weyl_generators()) CHECK(compose(g, g).is_identity());
  std::set<std::size_t> seen;
  for (const auto& w : W) seen.insert(weyl_index(w));
  CHECK(seen.size() == 8);
}

TEST_CASE("generators act as documented") {
  const auto& g = weyl_generators();
  const TorusExponent t{1, 2, 7};
  CHECK(g[0].apply_raw(t) == TorusExponent{2, 1, 7});
  CHECK(g[1].apply_raw(t) == TorusExponent{6, 2, 7});
  CHECK(g[2].apply_raw(t) == TorusExponent{1, 5, 7});
}

TEST_CASE("canonical form and character") {
  CHECK(TorusExponent{2, 3, 5}.canonical() == TorusExponent{0, 1, 1});
  CHECK(TorusExponent{2, 3, 5}.equivalent({-1, 0, -1}));
  CHECK(character({0, 1, 2}) == CharacterExponent{1, 2});
  CHECK(character({1, 1, 2}) == CharacterExponent{0, 0});
  CHECK(character({3, 1, 2}) == CharacterExponent{-2, -4});
}

TEST_CASE("lengths") {
  std::map<int, int> hist;
  for (const auto& w : weyl_group()) ++hist[weyl_length(w)];
  CHECK(hist == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}});
  for (const auto& g : weyl_generators()) {
    const int len = weyl_length(g);
    CHECK((len == 1 || len == 3));
  }
}

TEST_CASE("roots and coroots") {
  for (int i = 1; i <= 4; ++i) {
    CHECK(root_value(i, coroot(i)) == 2);
    CHECK(root_value(i, {1, 1, 2}) == 0);  // center
  }
  CHECK(root_value(1, {0, 1, 3}) > 0);
}

TEST_CASE("monomial action matches torus action (exhaustive small box)") {
  for (const auto& w : weyl_group()) {
    const auto winv = w.inverse();
    for (std::int64_t n = -3; n <= 3; ++n)
      for (std::int64_t m = -3; m <= 3; ++m)
        for (std::int64_t l = -6; l <= 6; ++l) {
          const TorusExponent t{n, m, l};
          // (w s)(T) = s(w^-1 T): acting on s(T)'s exponents by w must equal s of w T.
          CHECK(weyl_monomial_action(w, character(t)) == character(weyl_apply(winv, t)));
          const auto& M = weyl_monomial_matrix(w);
          const auto [i, j] = character(t);
          CHECK(weyl_monomial_action(w, {i, j}) == CharacterExponent{M[0][0] * i + M[0][1] * j, M[1][0] * i + M[1][1] * j});
        }
  }
}

TEST_CASE("each orbit has one positive element (seeded)") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const TorusExponent t = random_torus(rng);
    std::set<TorusExponent> positives;
    std::set<std::multiset<std::int64_t>> diagonals;
    for (const auto& w : weyl_group()) {
      const TorusExponent u = weyl_apply(w, t);
      if (is_positive(u)) positives.insert(u.canonical());
      // Weyl elements permute diagonal entries.
      const auto d = diagonal(w.apply_raw(t));
      diagonals.insert(std::multiset<std::int64_t>(d.begin(), d.end()));
    }
    CHECK(positives.size() == 1);
    CHECK(diagonals.size() == 1);
    CHECK(dominant_representative(t) == *positives.begin());
    CHECK(norm_star_G(t) == norm_star_G(dominant_representative(t)));
  }
}

TEST_CASE("rho and norms") {
  CHECK(rho({0, 0, 0}) == 0);
  CHECK(rho({0, 1, 2}) == 2);
  CHECK(rho({0, 0, 1}) == mpq_class(3, 2));
  // Half the sum of the positive roots.
  for (std::int64_t n = -2; n <= 2; ++n)
    for (std::int64_t m = -2; m <= 2; ++m)
      for (std::int64_t l = -4; l <= 4; ++l) {
        const TorusExponent t{n, m, l};
        mpq_class half_sum(root_value(1, t) + root_value(2, t) + root_value(3, t) + root_value(4, t), 2);
        half_sum.canonicalize();
        CHECK(rho(t) == half_sum);
      }
  CHECK(norm_star_H(-4) == 4);
  CHECK(h_torus_member({2, 2, 5}));
  CHECK_FALSE(h_torus_member({0, 1, 2}));
}
