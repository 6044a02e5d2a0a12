#include "rtp/sampler.hpp"

namespace rtp {

long SpecSampler::draw(long lo, long hi) {
  return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

RationalGF SpecSampler::random_gf(bool require_nonzero_num) {
  for (;;) {
    std::vector<Rat> num, den;
    const int dn = static_cast<int>(draw(0, 3));
    const int dd = static_cast<int>(draw(0, 3));
    for (int i = 0; i <= dn; ++i) num.emplace_back(draw(-2, 3));
    for (int i = 0; i <= dd; ++i) den.emplace_back(draw(-2, 3));
    if (den.empty() || poly_is_zero(den) || den[0] == 0) continue;
    if (require_nonzero_num && poly_is_zero(num)) continue;
    RationalGF gf(std::move(num), std::move(den));
    return gf.reduced();
  }
}

RiordanSpec SpecSampler::random_spec() {
  return {SeriesSource::rational(random_gf()),
          SeriesSource::rational(random_gf())};
}

RiordanSpec SpecSampler::random_proper_spec() {
  for (;;) {
    RationalGF d = random_gf();
    if (d.num.empty() || d.num[0] == 0) continue;  // need d(0) != 0
    // h: valuation exactly 1, den(0) != 0. Reduction cannot cancel the
    // t factor because the denominator has a nonzero constant term.
    std::vector<Rat> hnum{Rat(0)};
    const int dn = static_cast<int>(draw(1, 3));
    for (int i = 1; i <= dn; ++i) hnum.emplace_back(draw(-2, 3));
    if (hnum[1] == 0) continue;
    std::vector<Rat> hden;
    const int dd = static_cast<int>(draw(0, 3));
    for (int i = 0; i <= dd; ++i) hden.emplace_back(draw(-2, 3));
    if (poly_is_zero(hden) || hden[0] == 0) continue;
    RationalGF h(std::move(hnum), std::move(hden));
    return {SeriesSource::rational(std::move(d)),
            SeriesSource::rational(h.reduced())};
  }
}

RationalGF SpecSampler::random_pf_gf(int shift) {
  static const long kNumerators[] = {1, 1, 1, 2, 3};
  static const long kDenominators[] = {1, 2, 3, 2, 1};
  auto small_positive = [&]() {
    const int i = static_cast<int>(draw(0, 4));
    return Rat(kNumerators[i]) / Rat(kDenominators[i]);
  };
  Poly num{small_positive()};  // C > 0
  const int n_alphas = static_cast<int>(draw(0, 2));
  for (int i = 0; i < n_alphas; ++i)
    num = poly_mul(num, Poly{Rat(1), small_positive()});
  for (int i = 0; i < shift; ++i) num.insert(num.begin(), Rat(0));
  Poly den{Rat(1)};
  const int n_betas = static_cast<int>(draw(0, 2));
  for (int i = 0; i < n_betas; ++i)
    den = poly_mul(den, Poly{Rat(1), -small_positive()});
  return RationalGF(std::move(num), std::move(den)).reduced();
}

RiordanSpec SpecSampler::random_pf_spec(int h_shift) {
  return {SeriesSource::rational(random_pf_gf(0)),
          SeriesSource::rational(random_pf_gf(h_shift))};
}

RiordanSpec SpecSampler::random_pascal_like() {
  static const long kValues[] = {1, 2, 3};
  const Rat b(kValues[draw(0, 2)]);
  const Rat c(kValues[draw(0, 2)]);
  RationalGF d({Rat(1)}, {Rat(1), -c});
  RationalGF h({Rat(0), b}, {Rat(1), -c});
  return {SeriesSource::rational(std::move(d)),
          SeriesSource::rational(std::move(h))};
}

}  // namespace rtp
