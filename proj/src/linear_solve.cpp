#include "gsp4/exact_algebra.hpp"

#include <utility>

namespace gsp4 {

namespace {

using Row = std::vector<LaurentPoly>;

// Scale a row of fractions by the product of its denominators.
Row clear_denominators(const std::vector<RationalFn>& row, const RationalFn& rhs) {
  LaurentPoly common(1);
  for (const auto& x : row) common *= x.den;
  common *= rhs.den;
  Row out;
  out.reserve(row.size() + 1);
  for (const auto& x : row) out.push_back(div_exact(x.num * common, x.den));
  out.push_back(div_exact(rhs.num * common, rhs.den));
  return out;
}

RationalFn tidy(RationalFn x) {
  if (x.num.is_zero()) return RationalFn(LaurentPoly{});
  try {
    return RationalFn(div_exact(x.num, x.den));
  } catch (const Error& e) {
    if (e.code() != Errc::NotDivisible) throw;
  }
  // Normalise the sign so the denominator's leading coefficient is positive.
  if (x.den.leading().second < 0) return {-x.num, -x.den};
  return x;
}

}  // namespace

std::vector<RationalFn> solve_linear(const std::vector<std::vector<RationalFn>>& matrix,
                                     const std::vector<RationalFn>& rhs) {
  if (matrix.size() != rhs.size())
    throw Error(Errc::InvalidArgument, "matrix and right-hand side have different row counts");
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows == 0 ? 0 : matrix.front().size();
  for (const auto& r : matrix)
    if (r.size() != cols) throw Error(Errc::InvalidArgument, "ragged matrix");
  if (rows < cols) throw Error(Errc::Underdetermined, "fewer equations than unknowns");

  std::vector<Row> a;
  a.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) a.push_back(clear_denominators(matrix[i], rhs[i]));

  LaurentPoly prev(1);
  for (std::size_t k = 0; k < cols; ++k) {
    std::size_t pivot = k;
    // Prefer the sparsest nonzero pivot; it keeps intermediate sizes down.
    for (std::size_t i = k; i < rows; ++i) {
      if (a[i][k].is_zero()) continue;
      if (a[pivot][k].is_zero() || a[i][k].size() < a[pivot][k].size()) pivot = i;
    }
    if (a[pivot][k].is_zero()) throw Error(Errc::Underdetermined, "matrix does not have full column rank");
    std::swap(a[k], a[pivot]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j <= cols; ++j)
        a[i][j] = div_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = LaurentPoly{};
    }
    prev = a[k][k];
  }
  for (std::size_t i = cols; i < rows; ++i)
    if (!a[i][cols].is_zero()) throw Error(Errc::Inconsistent, "overdetermined system has no solution");

  std::vector<RationalFn> x(cols);
  for (std::size_t ii = cols; ii-- > 0;) {
    RationalFn acc(a[ii][cols]);
    for (std::size_t j = ii + 1; j < cols; ++j)
      if (!a[ii][j].is_zero()) acc = tidy(acc - RationalFn(a[ii][j]) * x[j]);
    x[ii] = tidy(acc / RationalFn(a[ii][ii]));
  }
  return x;
}

}  // namespace gsp4
