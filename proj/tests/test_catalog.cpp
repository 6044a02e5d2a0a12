#include <doctest.h>

#include "rtp/catalog.hpp"
#include "rtp/series.hpp"

using namespace rtp;

TEST_SUITE("catalog") {

TEST_CASE("lucas_entries from the polynomial recurrence") {
  const Mat l = lucas_entries(8);
  REQUIRE(l.n_rows() == 8);
  REQUIRE(l.n_cols() == 4);
  const long expected[8][4] = {{2, 0, 0, 0}, {1, 0, 0, 0}, {1, 2, 0, 0},
                               {1, 3, 0, 0}, {1, 4, 2, 0}, {1, 5, 5, 0},
                               {1, 6, 9, 2}, {1, 7, 14, 7}};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 4; ++j) CHECK(l.at(i, j) == expected[i][j]);

  CHECK(lucas_entries(1).at(0, 0) == 2);
  const Mat six = lucas_entries(6);
  CHECK(six.at(5, 0) == 1);
  CHECK(six.at(5, 1) == 5);
  CHECK(six.at(5, 2) == 5);
}

TEST_CASE("lucas_entries agrees with the Riordan construction") {
  const RiordanSpec lucas = catalog_get("lucas").spec;
  for (int m : {1, 5, 12, 20}) {
    const Mat direct = lucas_entries(m);
    const Mat via_gf = build(lucas, m, direct.n_cols());
    CHECK(direct == via_gf);
  }
}

TEST_CASE("catalog_get") {
  const CatalogEntry& lucas = catalog_get("lucas");
  REQUIRE(lucas.spec.d.kind() == SeriesSource::Kind::Rational);
  CHECK(lucas.spec.d.rational_gf()->num == rats({2, -1}));
  CHECK(lucas.spec.d.rational_gf()->den == rats({1, -1}));
  CHECK(lucas.spec.h.rational_gf()->num == rats({0, 0, 1}));

  const CatalogEntry& id = catalog_get("identity");
  CHECK(id.spec.d.expand(3) == Series(rats({1, 0, 0, 0})));
  CHECK(id.spec.h.expand(3) == Series(rats({0, 1, 0, 0})));

  const CatalogEntry& pascal = catalog_get("pascal");
  CHECK(build(pascal.spec, 3, 3) ==
        Mat::from_rows({rats({1, 0, 0}), rats({1, 1, 0}), rats({1, 2, 1})}));

  CHECK_THROWS_AS(catalog_get("no-such-array"), UnknownName);
  try {
    catalog_get("no-such-array");
  } catch (const UnknownName& e) {
    CHECK(std::string(e.what()).find("lucas") != std::string::npos);
  }
}

TEST_CASE("catalan and motzkin satisfy their defining equations") {
  const int order = 12;
  // C = 1 + t C^2
  const Series c = catalog_get("catalan").spec.d.expand(order);
  Series rhs = mul(c, c);
  std::vector<Rat> shifted(rhs.coeffs());
  shifted.insert(shifted.begin(), Rat(1));
  shifted.resize(order + 1);
  CHECK(c == Series(shifted));
  CHECK(c.coeff(5) == 42);

  // M = 1 + t M + t^2 M^2
  const Series m = catalog_get("motzkin").spec.d.expand(order);
  const Series m2 = mul(m, m);
  for (int n = 1; n <= order; ++n) {
    Rat expected = m.coeff(n - 1);
    if (n >= 2) expected += m2.coeff(n - 2);
    CHECK(m.coeff(n) == expected);
  }
  CHECK(m.coeff(5) == 21);

  // h = t * d for both Bell-type entries
  for (const char* name : {"catalan", "motzkin"}) {
    const RiordanSpec spec = catalog_get(name).spec;
    const Series d = spec.d.expand(order - 1);
    const Series h = spec.h.expand(order);
    CHECK(h.coeff(0) == 0);
    for (int n = 0; n < order; ++n) CHECK(h.coeff(n + 1) == d.coeff(n));
  }
}

TEST_CASE("parse_spec") {
  const RiordanSpec lucas = parse_spec(R"({
    "d": {"rational": {"num": [2, -1], "den": [1, -1]}},
    "h": {"rational": {"num": [0, 0, 1], "den": [1, -1]}}
  })");
  CHECK(lucas == catalog_get("lucas").spec);

  const RiordanSpec id = parse_spec(R"({
    "d": {"coeffs": [1]},
    "h": {"coeffs": [0, 1]}
  })");
  CHECK(build(id, 4, 4) == Mat::identity(4));

  const RiordanSpec mixed = parse_spec(R"({
    "d": {"rational": {"num": ["1/2", 1], "den": [1]}},
    "h": {"catalog": "pascal"}
  })");
  CHECK(mixed.d.expand(1) == Series({Rat(1) / 2, Rat(1)}));
  CHECK(mixed.h == catalog_get("pascal").spec.h);
}

TEST_CASE("parse_spec diagnostics") {
  CHECK_THROWS_AS(parse_spec("not json"), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"d": {"coeffs": [1]}})"), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"d": {"coeffs": [1]}, "h": {"weird": 1}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"d": {"coeffs": ["x"]}, "h": {"coeffs": [0,1]}})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_spec(R"({"d": {"rational": {"num": [1], "den": [0, 1]}}, "h": {"coeffs": [0,1]}})"),
      ZeroDenominatorConstant);
  try {
    parse_spec(R"({"d": {"coeffs": [1]}, "h": {"coeffs": [0, "3/x"]}})");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("h.coeffs[1]") != std::string::npos);
  }
}

TEST_CASE("render_spec round-trips every catalog entry") {
  for (const auto& name : catalog_names()) {
    const RiordanSpec spec = catalog_get(name).spec;
    const RiordanSpec back = parse_spec(render_spec(spec));
    CHECK(back == spec);
    // and the round-tripped spec expands identically
    CHECK(back.d.expand(16) == spec.d.expand(16));
    CHECK(back.h.expand(16) == spec.h.expand(16));
  }
}

}  // TEST_SUITE
