#include "rtp/series.hpp"

#include <cassert>
#include <utility>

namespace rtp {

Series::Series(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  assert(!c_.empty() && "a series carries at least its constant term");
}

Series Series::constant(Rat value, int order) {
  assert(order >= 0);
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  c[0] = std::move(value);
  return Series(std::move(c));
}

Series Series::variable(int order) {
  assert(order >= 1);
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  c[1] = 1;
  return Series(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
  os << '(';
  for (int n = 0; n <= s.order(); ++n) {
    if (n) os << ',';
    os << rat_to_string(s.coeff(n));
  }
  return os << ')';
}

RationalGF::RationalGF(std::vector<Rat> num_coeffs, std::vector<Rat> den_coeffs)
    : num(poly_trim(std::move(num_coeffs))),
      den(poly_trim(std::move(den_coeffs))) {
  if (den.empty()) throw Error("rational generating function with zero denominator");
}

RationalGF RationalGF::from_ints(std::vector<long> num_coeffs,
                                 std::vector<long> den_coeffs) {
  std::vector<Rat> n(num_coeffs.begin(), num_coeffs.end());
  std::vector<Rat> d(den_coeffs.begin(), den_coeffs.end());
  return RationalGF(std::move(n), std::move(d));
}

RationalGF RationalGF::reduced() const {
  if (den[0] == 0)
    throw ExpansionAtPole("cannot normalize: denominator vanishes at t = 0");
  Poly n = num, d = den;
  if (!poly_is_zero(n)) {
    Poly g = poly_gcd(n, d);
    if (poly_degree(g) > 0) {
      n = poly_divmod(n, g).first;
      d = poly_divmod(d, g).first;
    }
  }
  const Rat c = d[0];
  for (auto& v : n) v /= c;
  for (auto& v : d) v /= c;
  return RationalGF(std::move(n), std::move(d));
}

Series expand(const RationalGF& gf, int order) {
  assert(order >= 0);
  if (gf.den[0] == 0)
    throw ExpansionAtPole("denominator vanishes at t = 0; no power series at the origin");
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  for (int n = 0; n <= order; ++n) {
    Rat acc = n < static_cast<int>(gf.num.size()) ? gf.num[n] : Rat(0);
    const int top = std::min<int>(n, static_cast<int>(gf.den.size()) - 1);
    for (int j = 1; j <= top; ++j) acc -= gf.den[j] * c[n - j];
    c[n] = acc / gf.den[0];
  }
  return Series(std::move(c));
}

Series add(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[n] = a.coeff(n) + b.coeff(n);
  return Series(std::move(c));
}

Series sub(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[n] = a.coeff(n) - b.coeff(n);
  return Series(std::move(c));
}

Series mul(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= order; ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  }
  return Series(std::move(c));
}

Series pow(const Series& a, int k) {
  assert(k >= 0);
  Series acc = Series::one(a.order());
  for (int i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

Series recip(const Series& a) {
  if (a.coeff(0) == 0)
    throw NonUnitConstantTerm("reciprocal needs a nonzero constant term");
  const int order = a.order();
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  c[0] = Rat(1) / a.coeff(0);
  for (int n = 1; n <= order; ++n) {
    Rat acc = 0;
    for (int j = 1; j <= n; ++j) acc += a.coeff(j) * c[n - j];
    c[n] = -acc / a.coeff(0);
  }
  return Series(std::move(c));
}

Series compose(const Series& outer, const Series& inner) {
  if (inner.coeff(0) != 0)
    throw NonzeroInnerConstant("formal substitution needs inner(0) = 0");
  const int order = std::min(outer.order(), inner.order());
  // Horner over series: inner has valuation >= 1, so outer terms past
  // the truncation order cannot reach any kept coefficient.
  Series acc = Series::constant(outer.coeff(order), order);
  Series inner_cut(std::vector<Rat>(inner.coeffs().begin(),
                                    inner.coeffs().begin() + order + 1));
  for (int k = order - 1; k >= 0; --k) {
    acc = mul(acc, inner_cut);
    acc = add(acc, Series::constant(outer.coeff(k), order));
  }
  return acc;
}

Series revert(const Series& h) {
  if (h.order() < 1 || h.coeff(0) != 0 || h.coeff(1) == 0)
    throw NotRevertible("compositional inverse needs h(0) = 0, h'(0) != 0 and order >= 1");
  const int order = h.order();
  std::vector<Rat> g(static_cast<std::size_t>(order) + 1, Rat(0));
  g[1] = Rat(1) / h.coeff(1);
  // Term-by-term: with g known below n, [t^n] h(g) is linear in g_n
  // with coefficient h_1.
  for (int n = 2; n <= order; ++n) {
    const Series partial = compose(h, Series(g));
    g[n] = -partial.coeff(n) / h.coeff(1);
  }
  return Series(std::move(g));
}

}  // namespace rtp
