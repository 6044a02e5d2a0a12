#pragma once

#include <string>
#include <vector>

#include "rtp/matrix.hpp"
#include "rtp/riordan.hpp"

namespace rtp {

struct CatalogEntry {
  std::string name;
  RiordanSpec spec;
  std::string notes;
};

// Built-in arrays: lucas, pascal, identity, fibonacci, catalan,
// motzkin. Throws UnknownName (listing the available names) otherwise.
const CatalogEntry& catalog_get(const std::string& name);
std::vector<std::string> catalog_names();

// Lucas coefficient triangle computed straight from the polynomial
// recurrence L_{n+1}(x) = L_n(x) + x L_{n-1}(x), L_0 = 2, L_1 = 1 --
// deliberately independent of the Riordan construction so the two can
// cross-check each other. Result is n_rows x (floor((n_rows-1)/2)+1).
Mat lucas_entries(int n_rows);

// Catalan and Motzkin coefficient prefixes from their defining
// convolution recurrences, exact at every order.
std::vector<Rat> catalan_coefficients(int order);
std::vector<Rat> motzkin_coefficients(int order);

// Spec files are JSON documents with fields "d" and "h", each one of
//   {"rational": {"num": [...], "den": [...]}}
//   {"coeffs": [...]}
//   {"catalog": "<name>"}   (takes that entry's d resp. h)
// Coefficient lists are ascending powers; entries are integers or
// "p/q" strings. Throws ParseError with a field path, or
// ZeroDenominatorConstant when a rational gf has den(0) = 0.
RiordanSpec parse_spec(const std::string& text);

// Inverse of parse_spec on everything the toolkit can emit;
// parse_spec(render_spec(s)) == s for all catalog entries.
std::string render_spec(const RiordanSpec& spec);

}  // namespace rtp
