#pragma once

#include <ostream>
#include <vector>

#include "rtp/polynomial.hpp"
#include "rtp/rat.hpp"

namespace rtp {

// A truncated formal power series: coefficients c_0..c_N are known
// exactly, everything beyond the truncation order N is unknown.
// Operations return the minimum order they can vouch for; nothing is
// ever padded with unverified zeros.
class Series {
 public:
  explicit Series(std::vector<Rat> coeffs);
  static Series constant(Rat value, int order);
  static Series one(int order) { return constant(Rat(1), order); }
  static Series zero(int order) { return constant(Rat(0), order); }
  static Series variable(int order);  // t

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int n) const { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const Series&) const = default;

 private:
  std::vector<Rat> c_;  // size order+1
};

std::ostream& operator<<(std::ostream& os, const Series& s);

// A rational generating function num(t)/den(t). Trailing zero
// coefficients are trimmed on construction; den must be a nonzero
// polynomial. den(0) may be zero here -- expand() is what refuses it.
struct RationalGF {
  RationalGF(std::vector<Rat> num_coeffs, std::vector<Rat> den_coeffs);
  static RationalGF from_ints(std::vector<long> num_coeffs,
                              std::vector<long> den_coeffs);

  // Lowest terms with den(0) = 1; requires den(0) != 0.
  RationalGF reduced() const;

  std::vector<Rat> num, den;

  bool operator==(const RationalGF&) const = default;
};

// Unique S with num = den * S + O(t^{order+1}). Throws ExpansionAtPole
// when den(0) = 0.
Series expand(const RationalGF& gf, int order);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);

// Cauchy product, truncated to min(a.order, b.order).
Series mul(const Series& a, const Series& b);

// k-fold product; pow(a, 0) is the constant 1 at a's order.
Series pow(const Series& a, int k);

// Multiplicative inverse: mul(a, recip(a)) = 1 + O(t^{order+1}).
// Throws NonUnitConstantTerm when a(0) = 0.
Series recip(const Series& a);

// Formal substitution outer(inner(t)), truncated to the minimum of the
// two orders. Throws NonzeroInnerConstant when inner(0) != 0.
Series compose(const Series& outer, const Series& inner);

// Compositional inverse: compose(h, revert(h)) = t + O(t^{order+1}).
// Requires h(0) = 0, h'(0) != 0 and order >= 1, else NotRevertible.
Series revert(const Series& h);

}  // namespace rtp
