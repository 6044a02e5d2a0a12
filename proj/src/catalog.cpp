#include "rtp/catalog.hpp"

#include <json.hpp>

#include <cassert>
#include <utility>

namespace rtp {

namespace {

using nlohmann::json;

SeriesSource catalan_source() {
  return SeriesSource::generated("catalan", catalan_coefficients);
}

SeriesSource motzkin_source() {
  return SeriesSource::generated("motzkin", motzkin_coefficients);
}

SeriesSource shifted_up(const std::string& name,
                        std::vector<Rat> (*coeffs)(int)) {
  return SeriesSource::generated("t*" + name, [coeffs](int order) {
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
    if (order >= 1) {
      std::vector<Rat> base = coeffs(order - 1);
      for (int i = 0; i < order; ++i) c[i + 1] = base[i];
    }
    return c;
  });
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back(
      {"lucas",
       {SeriesSource::rational(RationalGF::from_ints({2, -1}, {1, -1})),
        SeriesSource::rational(RationalGF::from_ints({0, 0, 1}, {1, -1}))},
       "Lucas polynomial triangle: d = (2-t)/(1-t), h = t^2/(1-t); improper"});
  entries.push_back(
      {"pascal",
       {SeriesSource::rational(RationalGF::from_ints({1}, {1, -1})),
        SeriesSource::rational(RationalGF::from_ints({0, 1}, {1, -1}))},
       "binomial coefficients: d = 1/(1-t), h = t/(1-t)"});
  entries.push_back(
      {"identity",
       {SeriesSource::rational(RationalGF::from_ints({1}, {1})),
        SeriesSource::rational(RationalGF::from_ints({0, 1}, {1}))},
       "identity matrix: d = 1, h = t"});
  entries.push_back(
      {"fibonacci",
       {SeriesSource::rational(RationalGF::from_ints({1}, {1, -1, -1})),
        SeriesSource::rational(RationalGF::from_ints({0, 1}, {1}))},
       "Toeplitz array of the Fibonacci numbers: d = 1/(1-t-t^2), h = t"});
  entries.push_back(
      {"catalan",
       {catalan_source(), shifted_up("catalan", catalan_coefficients)},
       "Catalan triangle (Bell type): d = C(t), h = t C(t); "
       "C from c_{n+1} = sum c_i c_{n-i}"});
  entries.push_back(
      {"motzkin",
       {motzkin_source(), shifted_up("motzkin", motzkin_coefficients)},
       "Motzkin triangle (Bell type): d = M(t), h = t M(t); "
       "M from m_{n+1} = m_n + sum m_i m_{n-1-i}"});
  return entries;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

}  // namespace

const CatalogEntry& catalog_get(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  std::string msg = "unknown catalog entry '" + name + "'; available:";
  for (const auto& e : catalog()) msg += " " + e.name;
  throw UnknownName(msg);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  return names;
}

Mat lucas_entries(int n_rows) {
  assert(n_rows >= 1);
  // Row n holds the coefficients of L_n(x); degree grows by one every
  // second row.
  std::vector<std::vector<Rat>> rows;
  rows.push_back({Rat(2)});
  if (n_rows > 1) rows.push_back({Rat(1)});
  for (int n = 2; n < n_rows; ++n) {
    const auto& prev = rows[n - 1];
    const auto& prev2 = rows[n - 2];
    std::vector<Rat> row(prev2.size() + 1, Rat(0));
    for (std::size_t i = 0; i < prev.size(); ++i) row[i] += prev[i];
    for (std::size_t i = 0; i < prev2.size(); ++i) row[i + 1] += prev2[i];
    rows.push_back(std::move(row));
  }
  const int n_cols = (n_rows - 1) / 2 + 1;
  Mat m(n_rows, n_cols);
  for (int i = 0; i < n_rows; ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, static_cast<int>(j)) = rows[i][j];
  return m;
}

std::vector<Rat> catalan_coefficients(int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  c[0] = 1;
  for (int n = 0; n < order; ++n) {
    Rat acc = 0;
    for (int i = 0; i <= n; ++i) acc += c[i] * c[n - i];
    c[n + 1] = acc;
  }
  return c;
}

std::vector<Rat> motzkin_coefficients(int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  c[0] = 1;
  for (int n = 0; n < order; ++n) {
    Rat acc = c[n];
    for (int i = 0; i <= n - 1; ++i) acc += c[i] * c[n - 1 - i];
    c[n + 1] = acc;
  }
  return c;
}

namespace {

Rat parse_rat_value(const json& v, const std::string& where) {
  if (v.is_number_integer())
    return Rat(static_cast<long long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return rat_from_string(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

std::vector<Rat> parse_rat_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Rat> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(parse_rat_value(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

SeriesSource parse_source(const json& v, const std::string& field) {
  if (!v.is_object())
    throw ParseError(field + ": expected an object with one of the keys "
                             "\"rational\", \"coeffs\", \"catalog\"");
  if (v.contains("rational")) {
    const json& r = v["rational"];
    if (!r.is_object() || !r.contains("num") || !r.contains("den"))
      throw ParseError(field + ".rational: expected {\"num\": [...], \"den\": [...]}");
    std::vector<Rat> num = parse_rat_list(r["num"], field + ".rational.num");
    std::vector<Rat> den = parse_rat_list(r["den"], field + ".rational.den");
    if (poly_is_zero(den))
      throw ParseError(field + ".rational.den: denominator is zero");
    if (den[0] == 0)
      throw ZeroDenominatorConstant(
          field + ".rational.den: constant term is zero, the function has no "
                  "power series at t = 0");
    return SeriesSource::rational(RationalGF(std::move(num), std::move(den)));
  }
  if (v.contains("coeffs"))
    return SeriesSource::coefficients(parse_rat_list(v["coeffs"], field + ".coeffs"));
  if (v.contains("catalog")) {
    const json& name = v["catalog"];
    if (!name.is_string()) throw ParseError(field + ".catalog: expected a name string");
    const CatalogEntry& entry = catalog_get(name.get<std::string>());
    return field == "d" ? entry.spec.d : entry.spec.h;
  }
  throw ParseError(field + ": expected one of the keys \"rational\", "
                           "\"coeffs\", \"catalog\"");
}

json render_rat_list(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rat_to_string(r));
  return out;
}

json render_source(const SeriesSource& s) {
  switch (s.kind()) {
    case SeriesSource::Kind::Rational:
      return {{"rational",
               {{"num", render_rat_list(s.rational_gf()->num)},
                {"den", render_rat_list(s.rational_gf()->den)}}}};
    case SeriesSource::Kind::Coefficients:
      return {{"coeffs", render_rat_list(s.coefficient_list())}};
    case SeriesSource::Kind::Generated: {
      // Generators round-trip through the catalog entry that owns them.
      for (const auto& e : catalog()) {
        if (e.spec.d == s || e.spec.h == s)
          return {{"catalog", e.name}};
      }
      throw Error("cannot render a generated source outside the catalog: " +
                  s.generator_name());
    }
  }
  throw Error("unreachable");
}

}  // namespace

RiordanSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("spec document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("h"))
    throw ParseError("spec document needs fields \"d\" and \"h\"");
  RiordanSpec spec{parse_source(doc["d"], "d"), parse_source(doc["h"], "h")};
  return spec;
}

std::string render_spec(const RiordanSpec& spec) {
  json doc;
  doc["d"] = render_source(spec.d);
  doc["h"] = render_source(spec.h);
  return doc.dump(2);
}

}  // namespace rtp
