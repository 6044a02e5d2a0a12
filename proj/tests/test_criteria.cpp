#include <doctest.h>

#include "rtp/catalog.hpp"
#include "rtp/criteria.hpp"
#include "rtp/sampler.hpp"

using namespace rtp;

namespace {

Poly P(std::initializer_list<long> coeffs) {
  Poly p;
  for (long v : coeffs) p.emplace_back(v);
  return p;
}

RationalGF gf(std::initializer_list<long> num, std::initializer_list<long> den) {
  return RationalGF::from_ints(num, den);
}

const CriterionReport& pf_of(const CertificationSummary& s) { return s.criteria[0]; }
const CriterionReport& product_of(const CertificationSummary& s) { return s.criteria[1]; }
const CriterionReport& hessenberg_of(const CertificationSummary& s) { return s.criteria[2]; }

}  // namespace

TEST_SUITE("criteria") {

TEST_CASE("pf_check_poly") {
  const PFVerdict sq = pf_check_poly(P({1, 2, 1}));
  CHECK(sq.status == PFStatus::PF);
  REQUIRE(sq.factorization.has_value());
  CHECK(sq.factorization->shift == 0);
  CHECK(sq.factorization->constant == 1);
  REQUIRE(sq.factorization->alphas.size() == 1);
  CHECK(sq.factorization->alphas[0].multiplicity == 2);

  CHECK(pf_check_poly(P({1, 1, 1})).status == PFStatus::NOT_PF);

  const PFVerdict t2 = pf_check_poly(P({0, 0, 1}));
  CHECK(t2.status == PFStatus::PF);
  CHECK(t2.factorization->shift == 2);
  CHECK(t2.factorization->alphas.empty());

  CHECK(pf_check_poly(P({1, -1})).status == PFStatus::NOT_PF);
  CHECK(pf_check_poly(Poly{}).status == PFStatus::NOT_PF);
}

TEST_CASE("pf_check_rational on the reference functions") {
  const PFVerdict lucas_d = pf_check_rational(gf({2, -1}, {1, -1}));
  CHECK(lucas_d.status == PFStatus::NOT_PF);
  REQUIRE(lucas_d.roots.has_value());
  // the numerator 2 - t has its root at +2
  CHECK(lucas_d.roots->num_counts->positive == 1);
  CHECK(lucas_d.roots->num_counts->real_rooted);

  const PFVerdict lucas_h = pf_check_rational(gf({0, 0, 1}, {1, -1}));
  CHECK(lucas_h.status == PFStatus::PF);
  CHECK(lucas_h.factorization->shift == 2);
  REQUIRE(lucas_h.factorization->betas.size() == 1);
  CHECK(lucas_h.factorization->betas[0].lo == 1);
  CHECK(lucas_h.factorization->betas[0].hi == 1);

  const PFVerdict geometric = pf_check_rational(gf({1}, {1, -1}));
  CHECK(geometric.status == PFStatus::PF);

  // denominator root at -1: outside (0, inf)
  CHECK(pf_check_rational(gf({1}, {1, 1})).status == PFStatus::NOT_PF);
  // denominator 1 - t - t^2 has a negative root: Fibonacci is not PF
  CHECK(pf_check_rational(gf({1}, {1, -1, -1})).status == PFStatus::NOT_PF);
  // complex denominator roots
  CHECK(pf_check_rational(gf({1}, {1, 1, 1})).status == PFStatus::NOT_PF);

  CHECK_THROWS_AS(pf_check_rational(gf({1, -1}, {1, -1})), NotReduced);
}

TEST_CASE("pf_check_poly equals pf_check_rational on polynomials") {
  SpecSampler sampler(12001);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p;
    const int deg = static_cast<int>(sampler.draw(0, 4));
    for (int i = 0; i <= deg; ++i) p.emplace_back(sampler.draw(-2, 3));
    if (poly_is_zero(p)) continue;
    const PFVerdict as_poly = pf_check_poly(p);
    const PFVerdict as_rational = pf_check_rational(RationalGF(p, {Rat(1)}));
    CHECK(as_poly.status == as_rational.status);
  }
}

TEST_CASE("pf_check_truncated") {
  const PFVerdict ones = pf_check_truncated(Series(rats({1, 1, 1, 1, 1})), 5);
  CHECK(ones.status == PFStatus::CONSISTENT_UP_TO);
  CHECK(ones.order == 4);

  const PFVerdict lucas_d = pf_check_truncated(Series(rats({2, 1, 1, 1})), 4);
  CHECK(lucas_d.status == PFStatus::NOT_PF);
  REQUIRE(lucas_d.witness.has_value());
  CHECK(lucas_d.witness->rows == std::vector<int>{1, 2});
  CHECK(lucas_d.witness->cols == std::vector<int>{0, 1});
  CHECK(lucas_d.witness->value == -1);

  CHECK(pf_check_truncated(Series(rats({1, 0, 0, 0})), 4).status ==
        PFStatus::CONSISTENT_UP_TO);
}

TEST_CASE("decisive PF verdicts agree with truncated refutations") {
  SpecSampler sampler(12002);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const RationalGF g = sampler.random_gf();
    const PFVerdict exact = pf_check_rational(g);
    const PFVerdict truncated = pf_check_truncated(expand(g, 8), 8);
    // NOT_PF from a truncation refutes outright; PF can never coexist
    // with a negative Toeplitz minor.
    if (truncated.status == PFStatus::NOT_PF) {
      CHECK(exact.status == PFStatus::NOT_PF);
      ++checked;
    }
    if (exact.status == PFStatus::PF)
      CHECK(truncated.status == PFStatus::CONSISTENT_UP_TO);
  }
  CHECK(checked > 20);
}

TEST_CASE("criterion_pf") {
  const CertificationSummary pascal = certify_all(catalog_get("pascal").spec, 8);
  CHECK(pf_of(pascal).certified == Certified::YES_UP_TO);
  CHECK(pf_of(pascal).decisive);

  const CertificationSummary lucas = certify_all(catalog_get("lucas").spec, 8);
  CHECK(pf_of(lucas).certified == Certified::NO);

  const CertificationSummary id = certify_all(catalog_get("identity").spec, 8);
  CHECK(pf_of(id).certified == Certified::YES_UP_TO);
  CHECK(pf_of(id).decisive);

  // non-rational sources: only the consistency check, flagged as such
  const CertificationSummary catalan = certify_all(catalog_get("catalan").spec, 6);
  CHECK(pf_of(catalan).certified == Certified::NO);  // Catalan numbers are not PF
}

TEST_CASE("criterion_pf is non-decisive on coefficient sources") {
  const RiordanSpec staircase{
      SeriesSource::coefficients(rats({1, 1, 1, 1, 1, 1, 1, 1, 1})),
      SeriesSource::coefficients(rats({0, 0, 1}))};
  const CriterionReport r = criterion_pf(staircase, 8);
  CHECK(r.certified == Certified::YES_UP_TO);
  CHECK_FALSE(r.decisive);
  CHECK_FALSE(r.certifies());
}

TEST_CASE("criterion_product") {
  const CriterionReport pascal = criterion_product(catalog_get("pascal").spec, 8);
  CHECK(pascal.certified == Certified::YES_UP_TO);

  const CriterionReport lucas = criterion_product(catalog_get("lucas").spec, 8);
  CHECK(lucas.certified == Certified::INAPPLICABLE);
  CHECK_FALSE(lucas.applicable);
  CHECK(lucas.reason.find("h1") != std::string::npos);

  const CriterionReport id = criterion_product(catalog_get("identity").spec, 8);
  CHECK(id.certified == Certified::YES_UP_TO);

  // proper but with a negative leading entry: P may be TP, the array
  // is not, and the criterion must not certify
  const RiordanSpec negative_d{SeriesSource::rational(gf({-1}, {1, -1})),
                               SeriesSource::rational(gf({0, 1}, {1, -1}))};
  const CriterionReport neg = criterion_product(negative_d, 6);
  CHECK(neg.certified == Certified::NO);
}

TEST_CASE("criterion_hessenberg") {
  CHECK(criterion_hessenberg(catalog_get("lucas").spec, 8).certified ==
        Certified::YES_UP_TO);
  CHECK(criterion_hessenberg(catalog_get("pascal").spec, 8).certified ==
        Certified::YES_UP_TO);
  const RiordanSpec negative{SeriesSource::coefficients(rats({1})),
                             SeriesSource::coefficients(rats({0, 1, -1}))};
  CHECK(criterion_hessenberg(negative, 6).certified == Certified::NO);
}

TEST_CASE("certify_all: the Lucas narrative") {
  const CertificationSummary s = certify_all(catalog_get("lucas").spec, 8);
  CHECK(pf_of(s).certified == Certified::NO);
  CHECK(product_of(s).certified == Certified::INAPPLICABLE);
  CHECK(hessenberg_of(s).certified == Certified::YES_UP_TO);
  CHECK(s.direct.verdict == TPVerdict::TP_UP_TO);
}

TEST_CASE("certify_all: Pascal passes everywhere, a negative entry fails the direct check") {
  const CertificationSummary pascal = certify_all(catalog_get("pascal").spec, 8);
  CHECK(pf_of(pascal).certified == Certified::YES_UP_TO);
  CHECK(product_of(pascal).certified == Certified::YES_UP_TO);
  CHECK(hessenberg_of(pascal).certified == Certified::YES_UP_TO);
  CHECK(pascal.direct.verdict == TPVerdict::TP_UP_TO);

  const RiordanSpec bad{SeriesSource::coefficients(rats({1, -1})),
                        SeriesSource::coefficients(rats({0, 1}))};
  const CertificationSummary s = certify_all(bad, 5);
  CHECK(pf_of(s).certified == Certified::NO);
  CHECK(s.direct.verdict == TPVerdict::NOT_TP);
  for (const auto& c : s.criteria) CHECK_FALSE(c.certifies());
}

TEST_CASE("soundness: hessenberg-TP specs have TP truncations") {
  SpecSampler sampler(12003);
  int certified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    RiordanSpec spec;
    if (trial % 3 == 0) {  // Bell type: H is the Toeplitz matrix of h/t
      const SeriesSource h = sampler.random_pf_spec(1).h;
      spec = RiordanSpec{h.shifted_down(), h};
    } else if (trial % 3 == 1) {
      spec = sampler.random_pf_spec(trial % 2 ? 1 : 2);
    } else {
      spec = sampler.random_spec();
    }
    const CriterionReport h = criterion_hessenberg(spec, 6);
    if (h.certified != Certified::YES_UP_TO) continue;
    ++certified;
    for (int n = 2; n <= 6; ++n)
      CHECK(is_tp_full(build(spec, 6, n)).verdict == TPVerdict::TP_UP_TO);
  }
  CHECK(certified >= 15);
}

TEST_CASE("soundness: product-TP proper specs have TP truncations") {
  SpecSampler sampler(12004);
  int certified = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const RiordanSpec spec = trial % 3 == 0 ? sampler.random_pascal_like()
                             : trial % 3 == 1 ? sampler.random_pf_spec(1)
                                              : sampler.random_proper_spec();
    const CriterionReport p = criterion_product(spec, 6);
    if (p.certified != Certified::YES_UP_TO) continue;
    ++certified;
    CHECK(is_tp_full(build(spec, 6, 6)).verdict == TPVerdict::TP_UP_TO);
  }
  CHECK(certified >= 12);
}

TEST_CASE("soundness: decisive PF specs have TP truncations") {
  SpecSampler sampler(12005);
  for (int trial = 0; trial < 25; ++trial) {
    const RiordanSpec spec = sampler.random_pf_spec(static_cast<int>(sampler.draw(1, 2)));
    const CriterionReport pf = criterion_pf(spec, 6);
    REQUIRE(pf.certified == Certified::YES_UP_TO);
    REQUIRE(pf.decisive);
    CHECK(is_tp_full(build(spec, 6, 6)).verdict == TPVerdict::TP_UP_TO);
  }
}

TEST_CASE("remark chain: PF-certified proper specs route through the Bell factor") {
  // Wherever the PF criterion certifies a proper spec decisively, the
  // Hessenberg criterion certifies the Bell factor R(h/t, h), the
  // Toeplitz factor R(d, t) is TP, and the array splits as their
  // product.
  SpecSampler sampler(12006);
  int seen = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const RiordanSpec spec = sampler.random_pf_spec(1);
    if (!is_proper(spec)) continue;
    const CriterionReport pf = criterion_pf(spec, 6);
    if (!pf.certifies()) continue;
    ++seen;
    const RiordanSpec bell{spec.h.shifted_down(), spec.h};
    CHECK(criterion_hessenberg(bell, 6).certified == Certified::YES_UP_TO);
    const RiordanSpec toeplitz_factor{spec.d, SeriesSource::coefficients(rats({0, 1}))};
    CHECK(is_tp_full(build(toeplitz_factor, 6, 6)).verdict == TPVerdict::TP_UP_TO);
    CHECK(verify_decomposition(spec, 6, 6));
  }
  CHECK(seen >= 15);
}

}  // TEST_SUITE
