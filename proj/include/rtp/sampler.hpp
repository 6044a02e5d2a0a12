#pragma once

#include <cstdint>
#include <random>

#include "rtp/riordan.hpp"
#include "rtp/series.hpp"

namespace rtp {

// Deterministic sampler over rational-GF Riordan specs with
// small-integer coefficients: numerators and denominators of degree
// <= 3 with coefficients in {-2..3}, den(0) != 0, reduced to lowest
// terms. Identical seeds give identical streams on every platform
// (bounded draws avoid std::uniform_int_distribution on purpose).
class SpecSampler {
 public:
  explicit SpecSampler(std::uint64_t seed) : rng_(seed) {}

  long draw(long lo, long hi);  // uniform-ish on [lo, hi]

  // den(0) != 0, lowest terms. With require_nonzero_num the numerator
  // is nonzero.
  RationalGF random_gf(bool require_nonzero_num = true);

  RiordanSpec random_spec();         // both sources rational
  RiordanSpec random_proper_spec();  // d(0) != 0, h(0) = 0, h'(0) != 0

  // d and h assembled from Polya-frequency building blocks
  //   C t^k prod (1 + alpha t) / prod (1 - beta t)
  // with small positive rational alpha, beta: both are decisively PF,
  // so these populate the interesting side of criterion filters.
  // h_shift: valuation of h (1 keeps the spec proper, 2 makes it
  // improper the way the Lucas array is).
  RiordanSpec random_pf_spec(int h_shift);

  // R(1/(1-c t), b t/(1-c t)) with b, c > 0: proper, with A = (b, c)
  // and Z = (c), so the product-matrix criterion always certifies.
  RiordanSpec random_pascal_like();

 private:
  RationalGF random_pf_gf(int shift);
  std::mt19937_64 rng_;
};

}  // namespace rtp
