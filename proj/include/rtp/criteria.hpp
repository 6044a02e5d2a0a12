#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtp/matrix.hpp"
#include "rtp/polynomial.hpp"
#include "rtp/riordan.hpp"
#include "rtp/series.hpp"

namespace rtp {

// Exact real-root census of a polynomial: Sturm counts on the
// squarefree part, so every root is counted once regardless of
// multiplicity.
struct RootSignCounts {
  bool real_rooted = false;  // every complex root is real
  int distinct_real = 0;
  int negative = 0;  // distinct roots in (-inf, 0)
  int zero = 0;      // 1 when t = 0 is a root
  int positive = 0;  // distinct roots in (0, inf)
};

// p must be nonzero.
RootSignCounts sturm_real_rooted(const Poly& p);

enum class PFStatus { PF, NOT_PF, CONSISTENT_UP_TO };

// Witness that a generating function has the Polya frequency shape
//   C t^k prod_j (1 + alpha_j t) / prod_j (1 - beta_j t)
// with C > 0 and every alpha_j, beta_j > 0. Roots are reported as
// isolating intervals (exact when rational); list lengths count
// multiplicity, so alphas.size() summed over multiplicities equals
// deg(num) - k and likewise betas covers deg(den).
struct PFFactorization {
  Rat constant;  // C
  int shift = 0;  // k
  std::vector<IsolatedRoot> alphas, betas;
};

// Why a decisive check refused: which side failed and its root census.
struct RootCertificate {
  std::string reason;
  std::optional<RootSignCounts> num_counts, den_counts;
};

struct PFVerdict {
  PFStatus status = PFStatus::CONSISTENT_UP_TO;
  // Truncation order used; absent for decisive (polynomial/rational)
  // verdicts, which do not rest on a truncation.
  std::optional<int> order;
  std::optional<PFFactorization> factorization;  // present when PF
  std::optional<TPWitness> witness;              // truncated refutation
  std::optional<RootCertificate> roots;          // decisive refutation

  bool pf() const { return status == PFStatus::PF; }
  bool refuted() const { return status == PFStatus::NOT_PF; }
};

// Decisive check for a polynomial sequence: PF iff p != 0, every
// coefficient is >= 0 and p is real-rooted (the roots then lie in
// (-inf, 0] automatically).
PFVerdict pf_check_poly(const Poly& p);

// Decisive check for a rational generating function, which the
// Schoenberg--Edrei shape reduces to root locations: numerator as in
// pf_check_poly, denominator real-rooted with every root in (0, inf).
// gf must be in lowest terms (NotReduced otherwise); den(0) != 0.
PFVerdict pf_check_rational(const RationalGF& gf);

// Necessary-condition check from finitely many coefficients: runs the
// Toeplitz truncation of s through is_tp with the given minor cap.
// A negative minor refutes PF outright; otherwise the data stays
// consistent with PF up to the truncation order.
PFVerdict pf_check_truncated(const Series& s, int max_minor_order);

enum class Criterion { PF_GF, PRODUCT_MATRIX, HESSENBERG };
enum class Certified { YES_UP_TO, NO, INAPPLICABLE };

struct CriterionReport {
  Criterion criterion = Criterion::PF_GF;
  bool applicable = true;
  Certified certified = Certified::NO;
  // For YES_UP_TO: true when the certificate is theorem-grade (exact
  // PF decisions, or a fully enumerated H/P truncation). False only
  // for the PF criterion's consistent-at-truncation branch, which
  // certifies nothing by itself. For NO it records that the refusal
  // is exact.
  bool decisive = true;
  int order = 0;
  std::string reason;
  std::optional<PFVerdict> pf_d, pf_h;  // PF criterion detail
  std::optional<TPReport> tp;           // H / P criterion detail

  bool certifies() const {
    return certified == Certified::YES_UP_TO && decisive;
  }
};

// Theorem-grade sufficiency checks, each sound at truncation scale:
// a decisive YES implies the array truncation of matching order is
// totally positive.
CriterionReport criterion_pf(const RiordanSpec& spec, int order);
CriterionReport criterion_product(const RiordanSpec& spec, int order);
CriterionReport criterion_hessenberg(const RiordanSpec& spec, int order);

struct CertificationSummary {
  int order = 0;
  std::vector<CriterionReport> criteria;  // PF, product, Hessenberg
  TPReport direct;  // exhaustive enumeration on the order x order truncation
};

// Runs all three criteria plus the direct enumeration. The direct
// check is ground truth: a sound criterion certifying a truncation the
// enumeration refutes is an internal bug and throws std::logic_error.
CertificationSummary certify_all(const RiordanSpec& spec, int order);

const char* to_string(PFStatus s);
const char* to_string(Criterion c);
const char* to_string(Certified c);
const char* to_string(TPVerdict v);

}  // namespace rtp
