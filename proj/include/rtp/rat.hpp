#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rtp/errors.hpp"

namespace rtp {

// Exact scalars. Every quantity in the toolkit is a rational number;
// there is no floating point anywhere on a result path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }
inline int sign_of(const Int& n) { return n < 0 ? -1 : (n > 0 ? 1 : 0); }

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

// "p" for integers, "p/q" otherwise. Never a decimal.
inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q" with optional leading sign on either part.
// The result is canonical: reduced, positive denominator.
Rat rat_from_string(std::string_view text);

// Convenience for literal-heavy test and catalog code.
inline std::vector<Rat> rats(std::initializer_list<long> values) {
  std::vector<Rat> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace rtp
