#include <gtest/gtest.h>

#include "chowmod/random.hpp"
#include "chowmod/serialize.hpp"

using namespace chowmod;

namespace {

Element el(const FieldPtr& k, long v) { return k->from_int(v); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Milnor, SymbolsWithAnEntryOneVanish) {
  FieldPtr k = Field::rationals();
  EXPECT_TRUE(make_symbol(k, {el(k, 1), el(k, 5)}).is_zero());
  EXPECT_EQ(code_of([&] { make_symbol(k, {el(k, 0), el(k, 5)}); }), ErrorCode::ZeroElement);
}

TEST(Milnor, ReduceStatuses) {
  FieldPtr f7 = Field::prime(7);
  MilnorElement k1 = make_symbol(f7, {el(f7, 2)}) + make_symbol(f7, {el(f7, 3)});
  ReduceResult r1 = symbol_reduce(k1);
  EXPECT_EQ(r1.status, "exact");
  EXPECT_EQ(r1.value, make_symbol(f7, {el(f7, 6)}));

  MilnorElement k2 = make_symbol(f7, {el(f7, 2), el(f7, 3)});
  ReduceResult r2 = symbol_reduce(k2);
  EXPECT_TRUE(r2.value.is_zero());
  EXPECT_EQ(r2.status, "theorem-backed (Steinberg)");
  ReduceResult r3 = symbol_reduce(k2, true);
  EXPECT_TRUE(r3.value.is_zero());
  EXPECT_EQ(r3.status, "oracle-certified (K2 presentation)");

  FieldPtr q = Field::rationals();
  ReduceResult r4 = symbol_reduce(make_symbol(q, {el(q, 3), el(q, 2)}));
  EXPECT_EQ(r4.value, make_symbol(q, {el(q, 2), el(q, 3)}, -1));
}

TEST(Milnor, TameSymbolSignConvention) {
  FieldPtr k = Field::prime(7);
  FunctionMilnorElement s = make_function_symbol(k, {RatFunc::param(k), RatFunc::constant(el(k, 3))});
  EXPECT_EQ(tame_symbol(Place::rational(k->zero()), s), make_symbol(k, {el(k, 3)}, -1));
  EXPECT_EQ(tame_symbol(Place::infinity(k), s), make_symbol(k, {el(k, 3)}));
  EXPECT_TRUE(tame_symbol(Place::rational(el(k, 1)), s).is_zero());
}

TEST(Milnor, TameSymbolLengthThree) {
  // d_v {u1, u2, pi} = {u1(v), u2(v)} and d_v {pi, u1, u2} = {u1(v), u2(v)}.
  FieldPtr k = Field::prime(5);
  RatFunc t = RatFunc::param(k);
  RatFunc u1 = t + RatFunc::constant(el(k, 1)), u2 = RatFunc::constant(el(k, 3));
  Place v = Place::rational(el(k, 2));
  RatFunc pi = v.uniformizer();
  MilnorElement expected = make_symbol(k, {el(k, 3), el(k, 3)});
  EXPECT_EQ(tame_symbol(v, make_function_symbol(k, {u1, u2, pi})), expected);
  EXPECT_EQ(tame_symbol(v, make_function_symbol(k, {pi, u1, u2})), expected);
  EXPECT_EQ(tame_symbol(v, make_function_symbol(k, {u1, pi, u2})), expected.scaled(-1));
}

TEST(Milnor, WeilReciprocityOnRandomPairs) {
  Rng rng(31);
  for (const auto& k : {Field::prime(5), Field::prime(7), Field::prime(11)}) {
    for (int i = 0; i < 40; ++i) {
      RatFunc f = random_ratfunc(rng, k, 4), g = random_ratfunc(rng, k, 4);
      EXPECT_TRUE(weil_product(f, g).is_one()) << f.to_string() << ", " << g.to_string();
    }
  }
}

TEST(Milnor, WeilOverNonPrimeBaseNeedsRationalPlaces) {
  FieldPtr k = Field::finite(2, 2);
  RatFunc t = RatFunc::param(k);
  RatFunc f = t * (t + RatFunc::constant(k->one())), g = t + RatFunc::constant(k->generator());
  EXPECT_TRUE(weil_product(f, g).is_one());
  RatFunc irred = t * t * t + t + RatFunc::constant(k->one());
  EXPECT_EQ(code_of([&] { weil_product(irred, g); }), ErrorCode::UnsupportedExtension);
}

TEST(Milnor, NormToThePrimeField) {
  FieldPtr k = Field::finite(3, 2);
  Element a = k->generator();
  MilnorElement s(k, 1);
  s.add({a});
  EXPECT_EQ(norm_k1_to_base(s, Field::prime(3)), (a * a.frobenius()).to_prime_field());
  FieldPtr q = parse_field_spec("Q:u^2 + 1");
  MilnorElement sq(q, 1);
  sq.add({q->generator() + q->one()});
  EXPECT_EQ(code_of([&] { norm_k1_to_base(sq, Field::rationals()); }), ErrorCode::NormNotImplemented);
}

TEST(Milnor, K2OracleRejectsBadOrders) {
  EXPECT_EQ(code_of([] { k2_presentation_oracle(6); }), ErrorCode::NotPrimePower);
  EXPECT_EQ(code_of([] { k2_presentation_oracle(1); }), ErrorCode::NotPrimePower);
  EXPECT_EQ(code_of([] { k2_presentation_oracle(67); }), ErrorCode::TooLarge);
}

TEST(Milnor, PhiInvertsPsiOnRationalPoints) {
  FieldPtr k = Field::prime(7);
  ClosedPoint x{k, {el(k, 2)}, {}};
  MilnorElement s = make_symbol(k, {el(k, 3), el(k, 5)});
  ZeroCycle z = psi_map(x, s);
  ZeroCycle expected(k, 1, 2, Model::Original);
  expected.add(ClosedPoint{k, {el(k, 2)}, {el(k, 3), el(k, 5)}});
  EXPECT_EQ(z, expected);
  auto phi = phi_map(z);
  ASSERT_EQ(phi.size(), 1u);
  EXPECT_EQ(phi.begin()->second, s);
}

TEST(Milnor, PhiTakesNormsFromClosedPoints) {
  FieldPtr big = Field::finite(5, 2);
  Element a = big->generator();
  ZeroCycle z(Field::prime(5), 0, 1, Model::Original);
  z.add(ClosedPoint{big, {}, {a}});
  auto phi = phi_map(z);
  ASSERT_EQ(phi.size(), 1u);
  EXPECT_EQ(k1_value(phi.begin()->second), norm_k1_finite(a));
}

TEST(Milnor, ThetaNeedsAGraph) {
  FieldPtr k = Field::prime(5);
  RatFunc t = RatFunc::param(k);
  ParamCurve bad{k, Model::Original, {t * t}, {t, t + RatFunc::constant(el(k, 1))}};
  EXPECT_EQ(code_of([&] { theta_map(bad); }), ErrorCode::NotAGraph);
}
