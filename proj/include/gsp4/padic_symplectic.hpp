#pragma once

// Quaternions and matrices modulo p^k, the isomorphism psi from 2x2 matrices
// over the quaternions to GSp4, and p-adic Smith normal form.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gsp4/errors.hpp"

namespace gsp4 {

class Modulus {
 public:
  // Throws InvalidArgument for even p, k < 1, or p^k beyond 2^62.
  Modulus(std::int64_t p, int k);

  std::int64_t p() const { return p_; }
  int k() const { return k_; }
  std::int64_t value() const { return pk_; }

  std::int64_t reduce(std::int64_t x) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const { return sub(0, a); }
  std::int64_t pow(std::int64_t a, std::uint64_t e) const;
  // Throws DivisionByZero when a is not a unit.
  std::int64_t inverse(std::int64_t a) const;
  bool is_unit(std::int64_t a) const { return reduce(a) % p_ != 0; }
  // p-adic valuation of a residue; k for zero.
  int valuation(std::int64_t a) const;

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.p_ == b.p_ && a.k_ == b.k_; }

 private:
  std::int64_t p_;
  int k_;
  std::int64_t pk_;
};

// a0 + a1 i + a2 j + a3 k with i^2 = j^2 = -1, ij = k.
class QuatMod {
 public:
  QuatMod(const Modulus& mod, std::array<std::int64_t, 4> coeffs);

  const Modulus& modulus() const { return mod_; }
  std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  QuatMod star() const;   // flips k
  QuatMod bar() const;    // flips i, j, k
  QuatMod prime() const;  // flips i, j
  std::int64_t norm() const;
  std::int64_t re() const { return c_[0]; }

  friend QuatMod operator+(const QuatMod& a, const QuatMod& b);
  friend QuatMod operator*(const QuatMod& a, const QuatMod& b);
  friend bool operator==(const QuatMod& a, const QuatMod& b) { return a.mod_ == b.mod_ && a.c_ == b.c_; }

 private:
  Modulus mod_;
  std::array<std::int64_t, 4> c_;
};

QuatMod pow(const QuatMod& base, unsigned exponent);

class MatMod {
 public:
  MatMod(const Modulus& mod, std::size_t n);
  MatMod(const Modulus& mod, const std::vector<std::vector<std::int64_t>>& rows);
  static MatMod identity(const Modulus& mod, std::size_t n);

  const Modulus& modulus() const { return mod_; }
  std::size_t size() const { return n_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { a_[i * n_ + j] = mod_.reduce(v); }

  MatMod transpose() const;
  MatMod scaled(std::int64_t c) const;
  // 2x2 only.
  std::int64_t det2() const;
  MatMod adj2() const;
  MatMod inverse2() const;

  friend MatMod operator*(const MatMod& a, const MatMod& b);
  friend MatMod operator+(const MatMod& a, const MatMod& b);
  friend bool operator==(const MatMod& a, const MatMod& b) {
    return a.mod_ == b.mod_ && a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  Modulus mod_;
  std::size_t n_;
  std::vector<std::int64_t> a_;
};

struct PsiParams {
  Modulus mod;
  std::int64_t r;
  std::int64_t s;
};

// r^2 + s^2 = -1 mod p^k, lexicographically minimal mod p, Hensel lifted.
PsiParams hensel_rs(std::int64_t p, int k);

// Throws ModulusMismatch.
MatMod psi(const QuatMod& alpha, const PsiParams& params);

// 2x2 matrix of quaternions [[a, b], [c, d]] to the 4x4 block matrix of psi images.
MatMod psi_block(const std::array<QuatMod, 4>& entries, const PsiParams& params);

// J = [[0, I], [-I, 0]] in 2x2 blocks.
MatMod symplectic_form(const Modulus& mod);
// mu with M J M^t = mu J, if it exists.
std::optional<std::int64_t> similitude(const MatMod& M);

// Integer quaternion of norm p with positive real part: smallest (a, d, b, c)
// in lexicographic order among a >= 1, b, c, d >= 0.
std::array<std::int64_t, 4> find_alpha_hat(std::int64_t p);

// Sorted valuations of the elementary divisors. Throws PrecisionExhausted.
std::vector<int> smith_valuations(const MatMod& M);

struct DictionaryReport {
  std::int64_t p = 0;
  std::int64_t m = 0;
  std::int64_t l = 0;
  int k = 0;
  bool symplectic = false;
  int similitude_valuation = -1;
  std::vector<int> smith;
  std::vector<int> expected;
  bool pass = false;
};

// psi applied to diag(alpha_hat^m, p^(l-m) alpha_hat'^m). Requires l >= 2m >= 0 and k > l.
DictionaryReport verify_dictionary(std::int64_t p, std::int64_t m, std::int64_t l, int k = 6);

}  // namespace gsp4
