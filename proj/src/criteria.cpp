#include "rtp/criteria.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace rtp {

const char* to_string(PFStatus s) {
  switch (s) {
    case PFStatus::PF: return "PF";
    case PFStatus::NOT_PF: return "NOT_PF";
    case PFStatus::CONSISTENT_UP_TO: return "CONSISTENT_UP_TO";
  }
  return "?";
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::PF_GF: return "PF_GF";
    case Criterion::PRODUCT_MATRIX: return "PRODUCT_MATRIX";
    case Criterion::HESSENBERG: return "HESSENBERG";
  }
  return "?";
}

const char* to_string(Certified c) {
  switch (c) {
    case Certified::YES_UP_TO: return "YES_UP_TO";
    case Certified::NO: return "NO";
    case Certified::INAPPLICABLE: return "INAPPLICABLE";
  }
  return "?";
}

const char* to_string(TPVerdict v) {
  switch (v) {
    case TPVerdict::TP_UP_TO: return "TP_UP_TO";
    case TPVerdict::NOT_TP: return "NOT_TP";
  }
  return "?";
}

RootSignCounts sturm_real_rooted(const Poly& p) {
  Poly q = poly_trim(p);
  assert(!q.empty() && "root census of the zero polynomial");
  RootSignCounts counts;
  const int val = poly_valuation(q);
  if (val > 0) {
    counts.zero = 1;
    q.erase(q.begin(), q.begin() + val);
  }
  const int deg = poly_degree(q);
  if (deg == 0) {
    counts.real_rooted = true;
    counts.distinct_real = counts.zero;
    return counts;
  }
  const Poly s = poly_squarefree_part(q);
  const SturmChain chain = sturm_chain(s);
  const Rat bound = cauchy_root_bound(s);
  // q(0) != 0 after stripping the valuation, and the Cauchy bound is
  // strict, so all four evaluation points are off the roots.
  counts.negative = sturm_count_roots(chain, -bound, Rat(0));
  counts.positive = sturm_count_roots(chain, Rat(0), bound);
  counts.distinct_real = counts.negative + counts.positive + counts.zero;
  counts.real_rooted = counts.negative + counts.positive == poly_degree(s);
  return counts;
}

namespace {

// Maps isolating intervals of polynomial roots r to intervals of the
// corresponding PF parameters: alpha = -1/r for negative roots,
// beta = 1/r for positive ones. Both maps are increasing on their
// half-lines, so endpoints just swap through the reciprocal.
std::vector<IsolatedRoot> alphas_from_negative_roots(
    const std::vector<IsolatedRoot>& roots) {
  std::vector<IsolatedRoot> out;
  out.reserve(roots.size());
  for (const auto& r : roots) {
    IsolatedRoot a;
    a.multiplicity = r.multiplicity;
    if (r.exact()) {
      a.lo = a.hi = -1 / r.lo;
    } else {
      a.lo = -1 / r.lo;
      a.hi = -1 / r.hi;
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<IsolatedRoot> betas_from_positive_roots(
    const std::vector<IsolatedRoot>& roots) {
  std::vector<IsolatedRoot> out;
  out.reserve(roots.size());
  for (const auto& r : roots) {
    IsolatedRoot b;
    b.multiplicity = r.multiplicity;
    if (r.exact()) {
      b.lo = b.hi = 1 / r.lo;
    } else {
      b.lo = 1 / r.hi;
      b.hi = 1 / r.lo;
    }
    out.push_back(std::move(b));
  }
  return out;
}

int total_multiplicity(const std::vector<IsolatedRoot>& roots) {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

PFVerdict not_pf_roots(std::string reason, RootSignCounts num_counts,
                       std::optional<RootSignCounts> den_counts = {}) {
  PFVerdict v;
  v.status = PFStatus::NOT_PF;
  v.roots = RootCertificate{std::move(reason), num_counts, den_counts};
  return v;
}

}  // namespace

PFVerdict pf_check_poly(const Poly& p) {
  const Poly q = poly_trim(p);
  if (q.empty()) {
    PFVerdict v;
    v.status = PFStatus::NOT_PF;
    v.roots = RootCertificate{"zero polynomial", {}, {}};
    return v;
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0) {
      const RootSignCounts counts = sturm_real_rooted(q);
      std::string reason = "negative coefficient at index " + std::to_string(i);
      if (counts.real_rooted && counts.positive > 0)
        reason += " (equivalently, a real root in (0, inf))";
      PFVerdict v;
      v.status = PFStatus::NOT_PF;
      v.roots = RootCertificate{std::move(reason), counts, {}};
      return v;
    }
  }
  const RootSignCounts counts = sturm_real_rooted(q);
  if (!counts.real_rooted)
    return not_pf_roots("polynomial is not real-rooted", counts);

  // Nonnegative coefficients and real roots put every root in
  // (-inf, 0]: the factorization C t^k prod(1 + alpha_j t) exists.
  PFFactorization f;
  f.shift = poly_valuation(q);
  f.constant = q[f.shift];
  if (poly_degree(q) > f.shift) {
    Poly stripped(q.begin() + f.shift, q.end());
    const Rat bound = cauchy_root_bound(stripped);
    f.alphas = alphas_from_negative_roots(isolate_roots(stripped, -bound, Rat(0)));
  }
  if (total_multiplicity(f.alphas) != poly_degree(q) - f.shift)
    throw std::logic_error("PF factorization lost a numerator root");
  PFVerdict v;
  v.status = PFStatus::PF;
  v.factorization = std::move(f);
  return v;
}

PFVerdict pf_check_rational(const RationalGF& gf) {
  if (gf.den[0] == 0)
    throw ExpansionAtPole("PF check needs a series at the origin: den(0) != 0");
  if (!poly_is_zero(gf.num) && poly_degree(poly_gcd(gf.num, gf.den)) > 0)
    throw NotReduced("numerator and denominator share a polynomial factor");

  // Normalize den(0) = 1; this only rescales C.
  Poly num = gf.num, den = gf.den;
  const Rat d0 = den[0];
  for (auto& c : num) c /= d0;
  for (auto& c : den) c /= d0;

  PFVerdict num_verdict = pf_check_poly(num);
  if (num_verdict.status == PFStatus::NOT_PF) {
    num_verdict.roots->reason = "numerator: " + num_verdict.roots->reason;
    if (!poly_is_zero(num))
      num_verdict.roots->num_counts = sturm_real_rooted(num);
    return num_verdict;
  }

  if (poly_degree(den) > 0) {
    const RootSignCounts den_counts = sturm_real_rooted(den);
    if (!den_counts.real_rooted)
      return not_pf_roots("denominator is not real-rooted",
                          sturm_real_rooted(num), den_counts);
    if (den_counts.negative > 0 || den_counts.zero > 0)
      return not_pf_roots(
          "denominator has a root outside (0, inf); the 1/(1 - beta t) "
          "factors require positive roots",
          sturm_real_rooted(num), den_counts);
    const Rat bound = cauchy_root_bound(den);
    num_verdict.factorization->betas =
        betas_from_positive_roots(isolate_roots(den, Rat(0), bound));
    if (total_multiplicity(num_verdict.factorization->betas) != poly_degree(den))
      throw std::logic_error("PF factorization lost a denominator root");
  }
  return num_verdict;
}

PFVerdict pf_check_truncated(const Series& s, int max_minor_order) {
  const int n = s.order() + 1;
  const TPReport report = is_tp(toeplitz(s.coeffs(), n, n), max_minor_order);
  PFVerdict v;
  v.order = s.order();
  if (report.verdict == TPVerdict::NOT_TP) {
    v.status = PFStatus::NOT_PF;
    v.witness = report.witness;
  } else {
    v.status = PFStatus::CONSISTENT_UP_TO;
  }
  return v;
}

CriterionReport criterion_pf(const RiordanSpec& spec, int order) {
  CriterionReport report;
  report.criterion = Criterion::PF_GF;
  report.order = order;

  if (spec.d.kind() == SeriesSource::Kind::Rational &&
      spec.h.kind() == SeriesSource::Kind::Rational) {
    report.pf_d = pf_check_rational(spec.d.rational_gf()->reduced());
    report.pf_h = pf_check_rational(spec.h.rational_gf()->reduced());
    report.decisive = true;
    if (report.pf_d->pf() && report.pf_h->pf()) {
      report.certified = Certified::YES_UP_TO;
      report.reason = "d(t) and h(t) are Polya frequency series (exact decision)";
    } else {
      report.certified = Certified::NO;
      report.reason = std::string(!report.pf_d->pf() ? "d(t)" : "h(t)") +
                      " is not a Polya frequency series";
      if (report.pf_d->refuted() && report.pf_d->roots)
        report.reason += ": " + report.pf_d->roots->reason;
      else if (report.pf_h->refuted() && report.pf_h->roots)
        report.reason += ": " + report.pf_h->roots->reason;
    }
    return report;
  }

  // Non-rational sources admit only truncated necessary checks.
  report.pf_d = pf_check_truncated(spec.d.expand(order), order);
  report.pf_h = pf_check_truncated(spec.h.expand(order), order);
  if (report.pf_d->refuted() || report.pf_h->refuted()) {
    report.certified = Certified::NO;
    report.decisive = true;  // a negative Toeplitz minor refutes PF outright
    report.reason = std::string(report.pf_d->refuted() ? "d(t)" : "h(t)") +
                    " is not PF (negative Toeplitz minor)";
  } else {
    report.certified = Certified::YES_UP_TO;
    report.decisive = false;
    report.reason =
        "both coefficient prefixes are consistent with PF up to order " +
        std::to_string(order) + " (necessary checks only, not a certificate)";
  }
  return report;
}

CriterionReport criterion_product(const RiordanSpec& spec, int order) {
  assert(order >= 1);
  CriterionReport report;
  report.criterion = Criterion::PRODUCT_MATRIX;
  report.order = order;

  if (!is_proper(spec)) {
    const Series d = spec.d.expand(0);
    const Series h = spec.h.expand(1);
    report.applicable = false;
    report.certified = Certified::INAPPLICABLE;
    report.reason = "A/Z sequences exist for proper arrays only: ";
    if (d.coeff(0) == 0) report.reason += "d0 = 0";
    else if (h.coeff(0) != 0) report.reason += "h0 != 0";
    else report.reason += "h1 = 0";
    return report;
  }

  // The row induction that transfers total positivity from P to the
  // array pivots on a nonnegative first row (d0, 0, ...); a negative
  // d0 is already a negative 1x1 minor of the array.
  const Rat d0 = spec.d.expand(0).coeff(0);
  if (d0 < 0) {
    report.certified = Certified::NO;
    report.reason = "d0 < 0: the array has a negative entry";
    return report;
  }

  const Mat truncation = build(spec, 2 * order, order + 1);
  const AZ az = extract_az(truncation, order);
  const TPReport tp = is_tp_full(product_matrix(az, order));
  report.tp = tp;
  if (tp.tp()) {
    report.certified = Certified::YES_UP_TO;
    report.reason = "product matrix P is TP at truncation " +
                    std::to_string(tp.n_rows) + "x" + std::to_string(tp.n_cols);
  } else {
    report.certified = Certified::NO;
    report.reason = "product matrix P has a negative minor";
  }
  return report;
}

CriterionReport criterion_hessenberg(const RiordanSpec& spec, int order) {
  assert(order >= 1);
  CriterionReport report;
  report.criterion = Criterion::HESSENBERG;
  report.order = order;
  const TPReport tp = is_tp_full(hessenberg(spec, order));
  report.tp = tp;
  if (tp.tp()) {
    report.certified = Certified::YES_UP_TO;
    report.reason = "Hessenberg matrix H is TP at truncation " +
                    std::to_string(tp.n_rows) + "x" + std::to_string(tp.n_cols);
  } else {
    report.certified = Certified::NO;
    report.reason = "Hessenberg matrix H has a negative minor";
  }
  return report;
}

CertificationSummary certify_all(const RiordanSpec& spec, int order) {
  assert(order >= 1);
  CertificationSummary summary;
  summary.order = order;
  summary.criteria.push_back(criterion_pf(spec, order));
  summary.criteria.push_back(criterion_product(spec, order));
  summary.criteria.push_back(criterion_hessenberg(spec, order));
  summary.direct = is_tp_full(build(spec, order, order));

  // Each criterion is sound at truncation scale, so a decisive YES
  // against a refuting enumeration can only mean a bug in here.
  if (summary.direct.verdict == TPVerdict::NOT_TP) {
    for (const auto& c : summary.criteria) {
      if (c.certifies())
        throw std::logic_error(
            std::string("internal soundness violation: criterion ") +
            to_string(c.criterion) +
            " certified a truncation the direct enumeration refutes");
    }
  }
  return summary;
}

}  // namespace rtp
