#include "rtp/rat.hpp"

#include <cctype>

namespace rtp {

namespace {

bool parse_int(std::string_view text, Int& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return false;
  Int value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
  }
  out = neg ? -value : value;
  return true;
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  const auto slash = text.find('/');
  Int num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num))
      throw ParseError("invalid rational literal: '" + std::string(text) + "'");
  } else {
    if (!parse_int(text.substr(0, slash), num) ||
        !parse_int(text.substr(slash + 1), den))
      throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    if (den == 0)
      throw ParseError("zero denominator in rational literal: '" +
                       std::string(text) + "'");
  }
  return Rat(num) / Rat(den);
}

}  // namespace rtp
