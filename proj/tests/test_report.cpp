#include "doctest.h"

#include "jaclab/errors.hpp"
#include "jaclab/report/report.hpp"

using namespace jaclab;

namespace {

bool has_keys(const Json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys)
    if (!j.contains(k)) return false;
  return true;
}

}  // namespace

TEST_CASE("value serialization") {
  JsonWriter w;
  CHECK(w.value(Value(Rational(3, 4))) == "3/4");
  auto roots = Value::all_roots({2, 0, 1});
  REQUIRE(roots.size() == 2);
  Json j = w.value(roots[0]);
  CHECK(j["minpoly"] == "z^2 + 2");
  CHECK(j["box"].size() == 4);

  JsonWriter d(3);
  Json r = d.value(Value(Rational(1, 2)));
  CHECK(r["exact"] == "1/2");
  CHECK(r["decimal"] == "0.500");
  CHECK(d.value(roots[1])["decimal"] == "0.000+1.414i");
  CHECK(d.value(roots[1]).contains("minpoly"));
}

TEST_CASE("analyze-poly document") {
  Json j = analyze_poly("y^2 - x^3", {});
  CHECK(has_keys(j, {"normalization", "types", "critical_values", "type_critical_values", "exceptional_set",
                     "generic_chi", "suzuki", "primitivity"}));
  CHECK(j["exceptional_set"] == Json::array({"0"}));
  CHECK(j["generic_chi"] == -1);
  CHECK(j["suzuki"]["holds"] == true);
  const Json& s = j["types"][0]["series"];
  CHECK(has_keys(s, {"m", "terms", "parameter_exponent"}));
  CHECK(s["parameter_exponent"] == -3);
  CHECK(j["suzuki"]["fibers"][0]["singular_points"][0] == Json({{"x", "0"}, {"y", "0"}, {"mu", 2}}));

  Json b = analyze_poly("x + x^2*y", {});
  CHECK(b["critical_values"].empty());
  CHECK(b["exceptional_set"] == Json::array({"0"}));
  CHECK(b["normalization"]["description"] == "x -> x + y, y -> y");

  RunConfig c;
  c.order = 3;
  CHECK(analyze_poly("y^2 - x", c)["order"] == 3);
  CHECK_THROWS_AS(analyze_poly("x +", {}), ParseError);
}

TEST_CASE("analyze-map document") {
  Json j = analyze_map("y", "x*y + 1", {});
  CHECK(j["jacobian"] == "-y");
  REQUIRE(j["nonproper"]["components"].size() == 1);
  const Json& c = j["nonproper"]["components"][0];
  CHECK(has_keys(c, {"series", "p", "q", "implicit"}));
  CHECK(c["implicit"] == "u");
  CHECK(j["nonproper"]["agree"] == true);
  CHECK(j["theorem1"]["holds"].is_null());

  Json a = analyze_map("x + (y + x^2)^2", "y + x^2", {});
  CHECK(a["jacobian"] == "1");
  CHECK(a["nonproper"]["components"].empty());
  CHECK(a["lemma6"]["all_pass"] == true);
  Json t1 = a["theorem1"];
  CHECK(has_keys(t1, {"hypothesis_met", "E_P", "tangency", "vertical_components", "holds"}));
  CHECK(t1["holds"] == true);

  CHECK_THROWS_AS(analyze_map("y", "y^2", {}), DegenerateInput);
}

TEST_CASE("component lists and curve samples") {
  auto comps = parse_components("t^2|t^3; t|t^2 + 1");
  REQUIRE(comps.size() == 2);
  CHECK(comps[1].second == QPoly{1, 0, 1});
  CHECK_THROWS_AS(parse_components("t^2"), ParseError);
  CHECK_THROWS_AS(parse_components("t^2|x"), ParseError);
  try {
    parse_components("t|t^2; t|t^^2");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() > 8);
  }
  CHECK_THROWS_AS(theorem2("", {}), ParseError);

  auto rows = sample_curve("t^2|t^3", {Rational(-1), Rational(0), Rational(1)});
  CHECK(samples_csv(rows) == "t,u,v\n-1,1,-1\n0,0,0\n1,1,1\n");
  CHECK(samples_csv(sample_curve("t|t^2+1", {Rational(1, 2)})) == "t,u,v\n1/2,1/2,5/4\n");
  CHECK(parameter_grid(Rational(0), Rational(1), 3) == std::vector<Rational>{0, Rational(1, 2), 1});
  CHECK(samples_json(rows)[0] == Json({{"t", "-1"}, {"u", "1"}, {"v", "-1"}}));
}
