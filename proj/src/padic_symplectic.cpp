#include "gsp4/padic_symplectic.hpp"

#include <algorithm>
#include <limits>

namespace gsp4 {

// ---- Modulus ----------------------------------------------------------------

Modulus::Modulus(std::int64_t p, int k) : p_(p), k_(k), pk_(1) {
  if (p < 3 || p % 2 == 0) throw Error(Errc::InvalidArgument, "p must be an odd prime");
  if (k < 1) throw Error(Errc::InvalidArgument, "precision must be at least 1");
  for (int i = 0; i < k; ++i) {
    if (pk_ > (std::int64_t{1} << 62) / p) throw Error(Errc::InvalidArgument, "p^k too large");
    pk_ *= p;
  }
}

std::int64_t Modulus::reduce(std::int64_t x) const {
  const std::int64_t r = x % pk_;
  return r < 0 ? r + pk_ : r;
}

std::int64_t Modulus::add(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) + reduce(b)); }
std::int64_t Modulus::sub(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) - reduce(b)); }

std::int64_t Modulus::mul(std::int64_t a, std::int64_t b) const {
  const __int128 prod = static_cast<__int128>(reduce(a)) * reduce(b);
  return static_cast<std::int64_t>(prod % pk_);
}

std::int64_t Modulus::pow(std::int64_t a, std::uint64_t e) const {
  std::int64_t result = reduce(1);
  std::int64_t base = reduce(a);
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::int64_t Modulus::inverse(std::int64_t a) const {
  if (!is_unit(a)) throw Error(Errc::DivisionByZero, "residue is not a unit");
  // Extended Euclid on (a, p^k).
  __int128 old_r = reduce(a), r = pk_, old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  return reduce(static_cast<std::int64_t>(old_s % pk_));
}

int Modulus::valuation(std::int64_t a) const {
  std::int64_t x = reduce(a);
  if (x == 0) return k_;
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

// ---- QuatMod ----------------------------------------------------------------

QuatMod::QuatMod(const Modulus& mod, std::array<std::int64_t, 4> coeffs) : mod_(mod), c_(coeffs) {
  for (auto& x : c_) x = mod_.reduce(x);
}

QuatMod QuatMod::star() const { return QuatMod(mod_, {c_[0], c_[1], c_[2], -c_[3]}); }
QuatMod QuatMod::bar() const { return QuatMod(mod_, {c_[0], -c_[1], -c_[2], -c_[3]}); }
QuatMod QuatMod::prime() const { return QuatMod(mod_, {c_[0], -c_[1], -c_[2], c_[3]}); }

std::int64_t QuatMod::norm() const {
  std::int64_t n = 0;
  for (auto x : c_) n = mod_.add(n, mod_.mul(x, x));
  return n;
}

QuatMod operator+(const QuatMod& a, const QuatMod& b) {
  if (!(a.mod_ == b.mod_)) throw Error(Errc::ModulusMismatch, "quaternions over different moduli");
  const auto& m = a.mod_;
  return QuatMod(m, {m.add(a[0], b[0]), m.add(a[1], b[1]), m.add(a[2], b[2]), m.add(a[3], b[3])});
}

QuatMod operator*(const QuatMod& a, const QuatMod& b) {
  if (!(a.mod_ == b.mod_)) throw Error(Errc::ModulusMismatch, "quaternions over different moduli");
  const auto& m = a.mod_;
  auto dot = [&m](std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms, std::initializer_list<int> signs) {
    std::int64_t acc = 0;
    auto s = signs.begin();
    for (const auto& [x, y] : terms) {
      const std::int64_t t = m.mul(x, y);
      acc = *s++ > 0 ? m.add(acc, t) : m.sub(acc, t);
    }
    return acc;
  };
  return QuatMod(m, {
                        dot({{a[0], b[0]}, {a[1], b[1]}, {a[2], b[2]}, {a[3], b[3]}}, {1, -1, -1, -1}),
                        dot({{a[0], b[1]}, {a[1], b[0]}, {a[2], b[3]}, {a[3], b[2]}}, {1, 1, 1, -1}),
                        dot({{a[0], b[2]}, {a[1], b[3]}, {a[2], b[0]}, {a[3], b[1]}}, {1, -1, 1, 1}),
                        dot({{a[0], b[3]}, {a[1], b[2]}, {a[2], b[1]}, {a[3], b[0]}}, {1, 1, -1, 1}),
                    });
}

QuatMod pow(const QuatMod& base, unsigned exponent) {
  QuatMod result(base.modulus(), {1, 0, 0, 0});
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

// ---- MatMod -----------------------------------------------------------------

MatMod::MatMod(const Modulus& mod, std::size_t n) : mod_(mod), n_(n), a_(n * n, 0) {}

MatMod::MatMod(const Modulus& mod, const std::vector<std::vector<std::int64_t>>& rows)
    : mod_(mod), n_(rows.size()), a_(rows.size() * rows.size(), 0) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw Error(Errc::InvalidArgument, "matrix must be square");
    for (std::size_t j = 0; j < n_; ++j) set(i, j, rows[i][j]);
  }
}

MatMod MatMod::identity(const Modulus& mod, std::size_t n) {
  MatMod r(mod, n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i, 1);
  return r;
}

MatMod MatMod::transpose() const {
  MatMod r(mod_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.a_[j * n_ + i] = at(i, j);
  return r;
}

MatMod MatMod::scaled(std::int64_t c) const {
  MatMod r = *this;
  for (auto& x : r.a_) x = mod_.mul(x, c);
  return r;
}

std::int64_t MatMod::det2() const {
  if (n_ != 2) throw Error(Errc::InvalidArgument, "det2 needs a 2x2 matrix");
  return mod_.sub(mod_.mul(at(0, 0), at(1, 1)), mod_.mul(at(0, 1), at(1, 0)));
}

MatMod MatMod::adj2() const {
  if (n_ != 2) throw Error(Errc::InvalidArgument, "adj2 needs a 2x2 matrix");
  return MatMod(mod_, {{at(1, 1), mod_.neg(at(0, 1))}, {mod_.neg(at(1, 0)), at(0, 0)}});
}

MatMod MatMod::inverse2() const { return adj2().scaled(mod_.inverse(det2())); }

MatMod operator*(const MatMod& a, const MatMod& b) {
  if (!(a.mod_ == b.mod_) || a.n_ != b.n_) throw Error(Errc::ModulusMismatch, "incompatible matrices");
  const auto& m = a.mod_;
  MatMod r(m, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < a.n_; ++k) acc = m.add(acc, m.mul(a.at(i, k), b.at(k, j)));
      r.a_[i * a.n_ + j] = acc;
    }
  return r;
}

MatMod operator+(const MatMod& a, const MatMod& b) {
  if (!(a.mod_ == b.mod_) || a.n_ != b.n_) throw Error(Errc::ModulusMismatch, "incompatible matrices");
  MatMod r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.mod_.add(a.a_[i], b.a_[i]);
  return r;
}

// ---- psi --------------------------------------------------------------------

PsiParams hensel_rs(std::int64_t p, int k) {
  const Modulus mod(p, k);
  const Modulus base(p, 1);
  std::int64_t r = -1, s = -1;
  for (std::int64_t x = 0; x < p && r < 0; ++x)
    for (std::int64_t y = 0; y < p; ++y)
      if (base.add(base.add(base.mul(x, x), base.mul(y, y)), 1) == 0) {
        r = x;
        s = y;
        break;
      }
  if (r < 0) throw std::logic_error("no solution of r^2 + s^2 = -1 mod p");
  // Newton steps on f = r^2 + s^2 + 1 in whichever variable is a unit.
  const bool lift_s = s % p != 0;
  std::int64_t& var = lift_s ? s : r;
  for (int step = 0; step < k; ++step) {
    const std::int64_t f = mod.add(mod.add(mod.mul(r, r), mod.mul(s, s)), 1);
    if (f == 0) break;
    var = mod.sub(var, mod.mul(f, mod.inverse(mod.mul(2, var))));
  }
  return {mod, mod.reduce(r), mod.reduce(s)};
}

MatMod psi(const QuatMod& alpha, const PsiParams& params) {
  if (!(alpha.modulus() == params.mod)) throw Error(Errc::ModulusMismatch, "quaternion and psi parameters differ in (p, k)");
  const auto& m = params.mod;
  const std::int64_t r = params.r, s = params.s;
  const std::int64_t a0 = alpha[0], a1 = alpha[1], a2 = alpha[2], a3 = alpha[3];
  return MatMod(m, {{m.add(a0, m.add(m.mul(a1, r), m.mul(a2, s))), m.add(m.sub(a3, m.mul(a2, r)), m.mul(a1, s))},
                    {m.add(m.sub(m.neg(a3), m.mul(a2, r)), m.mul(a1, s)), m.sub(m.sub(a0, m.mul(a1, r)), m.mul(a2, s))}});
}

MatMod psi_block(const std::array<QuatMod, 4>& entries, const PsiParams& params) {
  MatMod out(params.mod, 4);
  for (std::size_t b = 0; b < 4; ++b) {
    const MatMod blk = psi(entries[b], params);
    const std::size_t r0 = (b / 2) * 2, c0 = (b % 2) * 2;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) out.set(r0 + i, c0 + j, blk.at(i, j));
  }
  return out;
}

MatMod symplectic_form(const Modulus& mod) {
  return MatMod(mod, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
}

std::optional<std::int64_t> similitude(const MatMod& M) {
  if (M.size() != 4) throw Error(Errc::InvalidArgument, "similitude needs a 4x4 matrix");
  const MatMod J = symplectic_form(M.modulus());
  const MatMod form = M * J * M.transpose();
  const std::int64_t mu = form.at(0, 2);
  if (form == J.scaled(mu)) return mu;
  return std::nullopt;
}

std::array<std::int64_t, 4> find_alpha_hat(std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw Error(Errc::InvalidArgument, "p must be odd");
  for (std::int64_t a = 1; a * a <= p; ++a)
    for (std::int64_t d = 0; a * a + d * d <= p; ++d)
      for (std::int64_t b = 0; a * a + d * d + b * b <= p; ++b) {
        const std::int64_t rest = p - a * a - d * d - b * b;
        std::int64_t c = 0;
        while (c * c < rest) ++c;
        if (c * c == rest) return {a, b, c, d};
      }
  throw std::logic_error("no four-square representation with positive real part");
}

std::vector<int> smith_valuations(const MatMod& M) {
  const Modulus& mod = M.modulus();
  const std::size_t n = M.size();
  MatMod a = M;
  std::vector<int> vals;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = t, pc = t;
    int best = mod.k();
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const int v = mod.valuation(a.at(i, j));
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (best >= mod.k()) throw Error(Errc::PrecisionExhausted, "elementary divisor not visible modulo p^" + std::to_string(mod.k()));
    for (std::size_t j = 0; j < n; ++j) {  // swap rows
      const auto x = a.at(t, j);
      a.set(t, j, a.at(pr, j));
      a.set(pr, j, x);
    }
    for (std::size_t i = 0; i < n; ++i) {  // swap columns
      const auto x = a.at(i, t);
      a.set(i, t, a.at(i, pc));
      a.set(i, pc, x);
    }
    std::int64_t pv = 1;
    for (int e = 0; e < best; ++e) pv *= mod.p();
    const std::int64_t unit_inv = mod.inverse(a.at(t, t) / pv);
    for (std::size_t i = t + 1; i < n; ++i) {
      const std::int64_t f = mod.mul(a.at(i, t) / pv, unit_inv);
      for (std::size_t j = t; j < n; ++j) a.set(i, j, mod.sub(a.at(i, j), mod.mul(f, a.at(t, j))));
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      const std::int64_t f = mod.mul(a.at(t, j) / pv, unit_inv);
      for (std::size_t i = t; i < n; ++i) a.set(i, j, mod.sub(a.at(i, j), mod.mul(f, a.at(i, t))));
    }
    vals.push_back(best);
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

DictionaryReport verify_dictionary(std::int64_t p, std::int64_t m, std::int64_t l, int k) {
  if (m < 0 || l < 2 * m) throw Error(Errc::InvalidIndex, "need l >= 2m >= 0");
  if (k <= l) throw Error(Errc::InvalidArgument, "precision k must exceed l");
  const PsiParams params = hensel_rs(p, k);
  const Modulus& mod = params.mod;
  const QuatMod alpha(mod, find_alpha_hat(p));
  const QuatMod am = pow(alpha, static_cast<unsigned>(m));
  const QuatMod zero(mod, {0, 0, 0, 0});
  const QuatMod lower = pow(alpha.prime(), static_cast<unsigned>(m)) * QuatMod(mod, {mod.pow(p, static_cast<std::uint64_t>(l - m)), 0, 0, 0});
  const MatMod M = psi_block({am, zero, zero, lower}, params);

  DictionaryReport rep;
  rep.p = p;
  rep.m = m;
  rep.l = l;
  rep.k = k;
  const auto mu = similitude(M);
  rep.symplectic = mu.has_value();
  if (mu) rep.similitude_valuation = mod.valuation(*mu);
  rep.smith = smith_valuations(M);
  rep.expected = {0, static_cast<int>(m), static_cast<int>(l - m), static_cast<int>(l)};
  std::sort(rep.expected.begin(), rep.expected.end());
  rep.pass = rep.symplectic && rep.similitude_valuation == l && rep.smith == rep.expected;
  return rep;
}

}  // namespace gsp4
