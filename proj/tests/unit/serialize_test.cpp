#include <gtest/gtest.h>

#include "chowmod/random.hpp"
#include "chowmod/serialize.hpp"

using namespace chowmod;

TEST(Serialize, CycleRoundTrip) {
  Rng rng(12);
  for (const auto& k : {Field::prime(5), Field::rationals(), Field::finite(2, 2)}) {
    for (int i = 0; i < 20; ++i) {
      HypersurfaceCycle z = random_admissible_cycle(rng, k, 2, 2);
      ModulusDatum d = ModulusDatum::monomial(k, {1, 2});
      Json j = cycle_to_json(z, &d);
      CycleInput back = cycle_from_json(Json::parse(j.dump()));
      EXPECT_EQ(back.cycle, z);
      ASSERT_TRUE(back.modulus.has_value());
      EXPECT_EQ(back.modulus->divisor, d.divisor);
      EXPECT_EQ(cycle_to_json(back.cycle, &*back.modulus).dump(), j.dump());
    }
  }
}

TEST(Serialize, DocumentedCycleSchema) {
  Json j = Json::parse(R"j({"field":{"spec":"Fp:7"},"model":"PSI","r":2,"n":1,"modulus":{"exponents":[1,1]},
                            "terms":[{"mult":1,"poly":"1 - t1*t2*(3*y1 + 2)"}]})j");
  CycleInput in = cycle_from_json(j);
  EXPECT_EQ(in.cycle.r(), 2u);
  EXPECT_EQ(in.cycle.n(), 1u);
  EXPECT_EQ(in.cycle.terms().size(), 1u);
  Json k = cycle_to_json(in.cycle, &*in.modulus);
  std::vector<std::string> keys;
  for (auto it = k.begin(); it != k.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"field", "model", "r", "n", "modulus", "terms"}));
}

TEST(Serialize, ZeroCycleRoundTrip) {
  FieldPtr k = Field::prime(7);
  FieldPtr big = Field::finite(7, 2);
  ZeroCycle z(k, 2, 1, Model::Original);
  z.add(ClosedPoint{k, {k->from_int(2), k->from_int(3)}, {k->from_int(4)}}, 3);
  z.add(ClosedPoint{big, {big->generator(), big->one()}, {big->from_int(5)}}, -1);
  Json j = zero_cycle_to_json(z);
  ZeroCycleInput back = zero_cycle_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.cycle, z);
  EXPECT_EQ(zero_cycle_to_json(back.cycle).dump(), j.dump());
  Json doc = Json::parse(R"({"field":{"spec":"Fp:7"},"r":2,"n":1,"points":[{"t":["2","3"],"y":["4"]}]})");
  EXPECT_EQ(zero_cycle_from_json(doc).cycle.degree(), 1);
}

TEST(Serialize, SymbolsPlacesAndCurves) {
  FieldPtr k = Field::prime(5);
  MilnorElement s = make_symbol(k, {k->from_int(2), k->from_int(3)}, 2) - make_symbol(k, {k->from_int(4), k->from_int(4)});
  EXPECT_EQ(symbol_from_json(Json::parse(symbol_to_json(s).dump())), s);

  RatFunc t = RatFunc::param(k);
  FunctionMilnorElement fs = make_function_symbol(k, {t, (t + RatFunc::constant(k->one())).inverse()});
  EXPECT_EQ(function_symbol_from_json(Json::parse(function_symbol_to_json(fs).dump())), fs);

  UPoly quad(k, {k->from_int(2), k->zero(), k->one()});
  for (const Place& v : {Place::infinity(k), Place::rational(k->from_int(3)), Place::finite(quad)})
    EXPECT_EQ(place_from_json(Json::parse(place_to_json(v).dump()), k), v);

  ParamCurve c = totaro_mult_curve(k, {k->from_int(1)}, k->from_int(2), k->from_int(3));
  ParamCurve back = curve_from_json(Json::parse(curve_to_json(c).dump()));
  EXPECT_EQ(curve_to_json(back).dump(), curve_to_json(c).dump());
  EXPECT_EQ(param_curve_boundary(back), param_curve_boundary(c));
}

TEST(Serialize, ErrorObjects) {
  try {
    parse_poly("1 + (t1", Field::rationals(), VarSet{1, 0, false});
    FAIL();
  } catch (const Error& e) {
    Json j = error_to_json(e);
    EXPECT_EQ(j["error"]["code"], "SyntaxError");
    EXPECT_TRUE(j["error"].contains("position"));
  }
}
