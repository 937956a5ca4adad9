#include "gsp4/root_datum.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsp4/errors.hpp"

namespace gsp4 {

std::string TorusExponent::str() const {
  return "T(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(l) + ")";
}

CharacterExponent character(const TorusExponent& t) { return {t.m - t.n, t.l - 2 * t.n}; }

WeylElement::WeylElement() : action_{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}} {}

WeylElement::WeylElement(const Matrix3& action) : action_(action) {}

bool WeylElement::is_identity() const { return *this == WeylElement(); }

TorusExponent WeylElement::apply_raw(const TorusExponent& t) const {
  const std::array<std::int64_t, 3> v{t.n, t.m, t.l};
  std::array<std::int64_t, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += action_[i][j] * v[j];
  return {r[0], r[1], r[2]};
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement::Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a.action_[i][k] * b.action_[k][j];
  return WeylElement(r);
}

WeylElement WeylElement::inverse() const {
  for (const auto& w : weyl_group())
    if (compose(*this, w).is_identity()) return w;
  throw std::logic_error("Weyl element without inverse");
}

const std::array<WeylElement, 3>& weyl_generators() {
  static const std::array<WeylElement, 3> gens{
      WeylElement({{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}),
      WeylElement({{{-1, 0, 1}, {0, 1, 0}, {0, 0, 1}}}),
      WeylElement({{{1, 0, 0}, {0, -1, 1}, {0, 0, 1}}}),
  };
  return gens;
}

const std::vector<WeylElement>& weyl_group() {
  static const std::vector<WeylElement> group = [] {
    std::vector<WeylElement> elems{WeylElement()};
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : weyl_generators()) {
        WeylElement next = compose(g, elems[head]);
        if (std::find(elems.begin(), elems.end(), next) == elems.end()) elems.push_back(next);
      }
    }
    return elems;
  }();
  return group;
}

std::size_t weyl_index(const WeylElement& w) {
  const auto& g = weyl_group();
  auto it = std::find(g.begin(), g.end(), w);
  if (it == g.end()) throw Error(Errc::InvalidArgument, "not an element of the Weyl group");
  return static_cast<std::size_t>(it - g.begin());
}

TorusExponent weyl_apply(const WeylElement& w, const TorusExponent& t) {
  return w.apply_raw(t).canonical();
}

namespace {

std::vector<WeylElement::Matrix2> build_monomial_matrices() {
  std::vector<WeylElement::Matrix2> out;
  for (const auto& w : weyl_group()) {
    const WeylElement inv = w.inverse();
    // Columns are the images of Y = s(T_{0,1,0}) and Z = s(T_{0,0,1}).
    const auto cy = character(inv.apply_raw({0, 1, 0}));
    const auto cz = character(inv.apply_raw({0, 0, 1}));
    out.push_back({{{cy.first, cz.first}, {cy.second, cz.second}}});
  }
  return out;
}

}  // namespace

const WeylElement::Matrix2& weyl_monomial_matrix(const WeylElement& w) {
  static const std::vector<WeylElement::Matrix2> mats = build_monomial_matrices();
  return mats[weyl_index(w)];
}

CharacterExponent weyl_monomial_action(const WeylElement& w, const CharacterExponent& mono) {
  const auto& a = weyl_monomial_matrix(w);
  return {a[0][0] * mono.first + a[0][1] * mono.second, a[1][0] * mono.first + a[1][1] * mono.second};
}

std::int64_t root_value(int index, const TorusExponent& t) {
  switch (index) {
    case 1: return t.m - t.n;
    case 2: return t.l - 2 * t.n;
    case 3: return t.l - t.n - t.m;
    case 4: return t.l - 2 * t.m;
    default: throw Error(Errc::InvalidIndex, "root index must be 1..4");
  }
}

TorusExponent coroot(int index) {
  switch (index) {
    case 1: return {-1, 1, 0};
    case 2: return {-1, 0, 0};
    case 3: return {-1, -1, 0};
    case 4: return {0, -1, 0};
    default: throw Error(Errc::InvalidIndex, "coroot index must be 1..4");
  }
}

bool is_positive(const TorusExponent& t) {
  const auto c = t.canonical();
  return 0 <= c.m && 2 * c.m <= c.l;
}

TorusExponent dominant_representative(const TorusExponent& t) {
  for (const auto& w : weyl_group()) {
    const auto img = weyl_apply(w, t);
    if (is_positive(img)) return img;
  }
  throw std::logic_error("Weyl orbit without a positive element");
}

int weyl_length(const WeylElement& w) {
  static const TorusExponent probe{0, 1, 3};
  const auto img = w.apply_raw(probe);
  int count = 0;
  for (int i = 1; i <= 4; ++i)
    if (root_value(i, img) < 0) ++count;
  return count;
}

mpq_class rho(const TorusExponent& t) {
  mpq_class r(3 * t.l - 2 * t.m - 4 * t.n, 2);
  r.canonicalize();
  return r;
}

mpq_class norm_star_G(const TorusExponent& t) {
  mpq_class best = rho(t);
  for (const auto& w : weyl_group()) best = std::max(best, rho(w.apply_raw(t)));
  return best;
}

std::int64_t norm_star_H(std::int64_t l) { return l < 0 ? -l : l; }

bool h_torus_member(const TorusExponent& t) { return t.n == t.m; }

}  // namespace gsp4
