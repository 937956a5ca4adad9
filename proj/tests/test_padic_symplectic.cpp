#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "gsp4/padic_symplectic.hpp"
#include "test_support.hpp"

using namespace gsp4;
using testing_support::draw;

namespace {

QuatMod random_quat(std::mt19937_64& rng, const Modulus& mod) {
  return QuatMod(mod, {draw(rng, 0, mod.value() - 1), draw(rng, 0, mod.value() - 1), draw(rng, 0, mod.value() - 1),
                       draw(rng, 0, mod.value() - 1)});
}

QuatMod scalar(const Modulus& mod, std::int64_t c) { return QuatMod(mod, {c, 0, 0, 0}); }

// Inverse of a quaternion with unit norm: conj / N.
QuatMod quat_inverse(const QuatMod& a) { return a.bar() * scalar(a.modulus(), a.modulus().inverse(a.norm())); }

using Block = std::array<QuatMod, 4>;

Block block_mul(const Block& x, const Block& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

std::int64_t det4(const MatMod& M) {
  // Laplace expansion; the modulus keeps the numbers small.
  const Modulus& mod = M.modulus();
  std::int64_t total = 0;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    std::int64_t prod = 1;
    for (int i = 0; i < 4; ++i) prod = mod.mul(prod, M.at(i, perm[i]));
    total = inversions % 2 ? mod.sub(total, prod) : mod.add(total, prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

MatMod random_unimodular(std::mt19937_64& rng, const Modulus& mod, std::size_t n) {
  MatMod U = MatMod::identity(mod, n);
  for (int step = 0; step < 12; ++step) {
    MatMod E = MatMod::identity(mod, n);
    const auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(n) - 1));
    if (i == j) {
      std::int64_t u = draw(rng, 1, mod.value() - 1);
      while (!mod.is_unit(u)) ++u;
      E.set(i, i, u);
    } else {
      E.set(i, j, draw(rng, 0, mod.value() - 1));
    }
    U = U * E;
  }
  return U;
}

}  // namespace

TEST_CASE("modular arithmetic") {
  const Modulus m(3, 4);
  CHECK(m.value() == 81);
  CHECK(m.reduce(-1) == 80);
  CHECK(m.mul(m.inverse(2), 2) == 1);
  CHECK(m.valuation(0) == 4);
  CHECK(m.valuation(18) == 2);
  CHECK_THROWS_AS(m.inverse(3), Error);
  CHECK_THROWS_AS(Modulus(2, 3), Error);
  CHECK_THROWS_AS(Modulus(3, 0), Error);
  const Modulus big(11, 6);
  CHECK(big.mul(big.value() - 1, big.value() - 1) == 1);
  CHECK(big.pow(11, 6) == 0);
}

TEST_CASE("quaternion involutions") {
  std::mt19937_64 rng(3);
  const Modulus mod(7, 3);
  for (int i = 0; i < 1000; ++i) {
    const QuatMod z = random_quat(rng, mod), w = random_quat(rng, mod);
    CHECK(z.star().star() == z);
    CHECK(z.bar().bar() == z);
    CHECK(z.prime() == z.bar().star());
    CHECK((z * w).bar() == w.bar() * z.bar());
    CHECK((z * w).star() == w.star() * z.star());
    CHECK(z * z.bar() == scalar(mod, z.norm()));
    CHECK((z * w).norm() == mod.mul(z.norm(), w.norm()));
  }
}

TEST_CASE("Hensel lifting") {
  const PsiParams p3 = hensel_rs(3, 1);
  CHECK(std::make_pair(p3.r, p3.s) == std::make_pair<std::int64_t, std::int64_t>(1, 1));
  const PsiParams p7 = hensel_rs(7, 1);
  CHECK(std::make_pair(p7.r, p7.s) == std::make_pair<std::int64_t, std::int64_t>(2, 3));
  for (std::int64_t p : {3, 5, 7, 11, 13, 101, 1009}) {
    const PsiParams prm = hensel_rs(p, 6);
    const Modulus& m = prm.mod;
    CHECK(m.add(m.add(m.mul(prm.r, prm.r), m.mul(prm.s, prm.s)), 1) == 0);
    // The lift agrees with the base solution mod p.
    const PsiParams base = hensel_rs(p, 1);
    CHECK(prm.r % p == base.r);
    CHECK(prm.s % p == base.s);
  }
}

TEST_CASE("psi identities (seeded, 1000 per prime)") {
  for (std::int64_t p : {3, 7, 11}) {
    const PsiParams prm = hensel_rs(p, 6);
    const Modulus& mod = prm.mod;
    std::mt19937_64 rng(static_cast<std::uint64_t>(p) * 1000003ULL);
    CHECK(psi(scalar(mod, 1), prm) == MatMod::identity(mod, 2));
    for (int i = 0; i < 1000; ++i) {
      const QuatMod a = random_quat(rng, mod), b = random_quat(rng, mod);
      const MatMod A = psi(a, prm);
      CHECK(A.det2() == a.norm());
      CHECK(psi(a.star(), prm) == A.transpose());
      CHECK(psi(a * b, prm) == A * psi(b, prm));
      CHECK(psi(a + b, prm) == A + psi(b, prm));
      // adj = N * inverse, which needs no unit assumption.
      CHECK(psi(a.bar(), prm) == A.adj2());
      CHECK(psi(a.prime(), prm) == A.adj2().transpose());
      if (mod.is_unit(a.norm())) {
        CHECK(psi(a.bar(), prm) == A.inverse2().scaled(a.norm()));
        CHECK(psi(a.prime(), prm) == A.inverse2().transpose().scaled(a.norm()));
      }
    }
  }
  const PsiParams other = hensel_rs(5, 6);
  CHECK_THROWS_AS(psi(scalar(Modulus(3, 6), 1), other), Error);
}

TEST_CASE("block images of similitudes are symplectic (seeded)") {
  for (std::int64_t p : {3, 7, 11}) {
    const PsiParams prm = hensel_rs(p, 6);
    const Modulus& mod = prm.mod;
    std::mt19937_64 rng(static_cast<std::uint64_t>(p) + 99);
    const QuatMod zero = scalar(mod, 0), one = scalar(mod, 1);
    for (int i = 0; i < 1000; ++i) {
      // Random word in the generators: translations by star-symmetric b,
      // diagonal (a, mu (a*)^-1) and the Weyl element J.
      Block g{one, zero, zero, one};
      std::int64_t mu = 1;
      for (int step = 0; step < 4; ++step) {
        switch (draw(rng, 0, 2)) {
          case 0: {
            QuatMod b = random_quat(rng, mod);
            b = QuatMod(mod, {b[0], b[1], b[2], 0});
            g = block_mul(g, draw(rng, 0, 1) ? Block{one, b, zero, one} : Block{one, zero, b, one});
            break;
          }
          case 1: {
            QuatMod a = random_quat(rng, mod);
            while (!mod.is_unit(a.norm())) a = random_quat(rng, mod);
            std::int64_t c = draw(rng, 1, mod.value() - 1);
            if (draw(rng, 0, 3) == 0) c = p;  // non-unit similitude
            g = block_mul(g, {a, zero, zero, scalar(mod, c) * quat_inverse(a.star())});
            mu = mod.mul(mu, c);
            break;
          }
          default:
            g = block_mul(g, {zero, one, scalar(mod, mod.neg(1)), zero});
        }
      }
      const MatMod M = psi_block(g, prm);
      const auto got = similitude(M);
      REQUIRE(got.has_value());
      CHECK(*got == mu);
      CHECK(det4(M) == mod.mul(mu, mu));
    }
  }
}

TEST_CASE("alpha hat against brute force") {
  CHECK(find_alpha_hat(3) == std::array<std::int64_t, 4>{1, 1, 1, 0});
  CHECK(find_alpha_hat(7) == std::array<std::int64_t, 4>{1, 1, 2, 1});
  for (std::int64_t p = 3; p < 400; p += 2) {
    std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t> best{p, p, p, p};  // (a, d, b, c)
    for (std::int64_t a = 1; a * a <= p; ++a)
      for (std::int64_t b = 0; b * b <= p; ++b)
        for (std::int64_t c = 0; c * c <= p; ++c)
          for (std::int64_t d = 0; d * d <= p; ++d)
            if (a * a + b * b + c * c + d * d == p) best = std::min(best, std::make_tuple(a, d, b, c));
    const auto [a, d, b, c] = best;
    const auto got = find_alpha_hat(p);
    CHECK(got == std::array<std::int64_t, 4>{a, b, c, d});
    CHECK(got[0] >= 1);
  }
}

TEST_CASE("Smith valuations") {
  const Modulus m3(3, 4);
  CHECK(smith_valuations(MatMod::identity(m3, 2)) == std::vector<int>{0, 0});
  const PsiParams prm = hensel_rs(3, 4);
  const QuatMod alpha(prm.mod, find_alpha_hat(3));
  CHECK(smith_valuations(psi(alpha * alpha, prm)) == std::vector<int>{0, 2});
  CHECK(smith_valuations(MatMod(m3, {{1, 0}, {0, 9}})) == std::vector<int>{0, 2});
  CHECK(smith_valuations(MatMod(m3, {{3, 0}, {0, 1}})) == std::vector<int>{0, 1});
  try {
    smith_valuations(MatMod(m3, 2));
    FAIL("expected PrecisionExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PrecisionExhausted);
  }
}

TEST_CASE("Smith valuations survive unimodular changes of basis (seeded)") {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t p = i % 3 == 0 ? 3 : (i % 3 == 1 ? 7 : 11);
    const Modulus mod(p, 6);
    const auto m = draw(rng, 0, 2), l = draw(rng, 2 * m, 5);
    MatMod D(mod, 4);
    D.set(0, 0, 1);
    D.set(1, 1, mod.pow(p, static_cast<std::uint64_t>(m)));
    D.set(2, 2, mod.pow(p, static_cast<std::uint64_t>(l)));
    D.set(3, 3, mod.pow(p, static_cast<std::uint64_t>(l - m)));
    std::vector<int> expected{0, static_cast<int>(m), static_cast<int>(l), static_cast<int>(l - m)};
    std::sort(expected.begin(), expected.end());
    const MatMod M = random_unimodular(rng, mod, 4) * D * random_unimodular(rng, mod, 4);
    CHECK(smith_valuations(M) == expected);
  }
}

TEST_CASE("dictionary") {
  const DictionaryReport a = verify_dictionary(3, 1, 2, 6);
  CHECK(a.pass);
  CHECK(a.similitude_valuation == 2);
  CHECK(a.smith == std::vector<int>{0, 1, 1, 2});
  const DictionaryReport b = verify_dictionary(7, 0, 1, 4);
  CHECK(b.pass);
  CHECK(b.smith == std::vector<int>{0, 0, 1, 1});
  CHECK(verify_dictionary(3, 0, 0).smith == std::vector<int>{0, 0, 0, 0});
  for (std::int64_t p : {3, 7, 11})
    for (std::int64_t l = 0; l <= 4; ++l)
      for (std::int64_t m = 0; 2 * m <= l; ++m) CHECK(verify_dictionary(p, m, l, 6).pass);
  CHECK_THROWS_AS(verify_dictionary(3, 0, 6, 6), Error);
  CHECK_THROWS_AS(verify_dictionary(3, 2, 3, 6), Error);
}
