#pragma once

#include <utility>
#include <vector>

#include "rtp/rat.hpp"

namespace rtp {

// Dense univariate polynomials over the rationals, ascending powers.
// The zero polynomial is the empty vector (or any all-zero vector);
// helpers tolerate trailing zeros and trim where it matters.
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial
bool poly_is_zero(const Poly& p);

Rat poly_eval(const Poly& p, const Rat& x);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& p, const Rat& c);
Poly poly_derivative(const Poly& p);

// Euclidean division; divisor must be nonzero. Returns (quotient, remainder).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd over Q; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// p / gcd(p, p'), monic: same roots, each with multiplicity one.
Poly poly_squarefree_part(const Poly& p);

// Number of leading zero coefficients, i.e. the multiplicity of the
// root t = 0. Zero polynomial yields 0.
int poly_valuation(const Poly& p);

// --- Sturm machinery -------------------------------------------------
//
// The chain is the classic p, p', -rem, ... with every element scaled
// by a positive rational to a primitive integer polynomial, which
// keeps coefficient growth flat without touching any sign.

struct SturmChain {
  std::vector<Poly> seq;  // seq[0] is squarefree
};

SturmChain sturm_chain(const Poly& squarefree);

int sturm_sign_changes_at(const SturmChain& chain, const Rat& x);
int sturm_sign_changes_at_neg_inf(const SturmChain& chain);
int sturm_sign_changes_at_pos_inf(const SturmChain& chain);

// Distinct real roots of chain's polynomial in the open interval
// (lo, hi); neither endpoint may be a root.
int sturm_count_roots(const SturmChain& chain, const Rat& lo, const Rat& hi);

// Exceeds the magnitude of every complex root strictly. At least 1.
Rat cauchy_root_bound(const Poly& p);

// An isolating interval for one real root: lo == hi when the root is
// rational and was pinned exactly, otherwise lo < root < hi with no
// other root of the polynomial in [lo, hi].
struct IsolatedRoot {
  Rat lo, hi;
  int multiplicity = 1;
  bool exact() const { return lo == hi; }
};

// Distinct real roots of p inside the open interval (lo, hi), sorted
// ascending, each with its multiplicity in p. Endpoints must not be
// roots of p. p must be nonzero.
std::vector<IsolatedRoot> isolate_roots(const Poly& p, const Rat& lo,
                                        const Rat& hi);

}  // namespace rtp
