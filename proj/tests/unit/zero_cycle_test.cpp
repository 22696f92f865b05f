#include <gtest/gtest.h>

#include "chowmod/random.hpp"
#include "chowmod/serialize.hpp"

using namespace chowmod;

namespace {

ClosedPoint pt(const FieldPtr& k, std::vector<long> t, std::vector<long> y) {
  ClosedPoint p{k, {}, {}};
  for (long v : t) p.t.push_back(k->from_int(v));
  for (long v : y) p.y.push_back(k->from_int(v));
  return p;
}

}  // namespace

TEST(ZeroCycle, ArithmeticAndDegree) {
  FieldPtr k = Field::prime(7);
  ZeroCycle z(k, 1, 1, Model::Original);
  z.add(pt(k, {2}, {3}), 2);
  z.add(pt(k, {5}, {4}), -1);
  EXPECT_EQ(z.degree(), 1);
  EXPECT_TRUE((z - z).is_zero());
  EXPECT_EQ(z.scaled(3).degree(), 3);
}

TEST(ZeroCycle, ConjugatePointsCollapse) {
  FieldPtr k = Field::finite(7, 2);
  Element a = k->generator();
  ClosedPoint p{k, {a}, {}}, q{k, {a.frobenius()}, {}};
  EXPECT_EQ(canonical_point(p), canonical_point(q));
  ZeroCycle z(Field::prime(7), 1, 0, Model::Original);
  z.add(p);
  z.add(q);
  ASSERT_EQ(z.terms().size(), 1u);
  EXPECT_EQ(z.terms().begin()->second, 2);
  EXPECT_EQ(z.degree(), 4);
}

TEST(ZeroCycle, ModulusAndFaces) {
  FieldPtr k = Field::prime(5);
  ModulusDatum d = ModulusDatum::monomial(k, {1, 2});
  ZeroCycle off(k, 2, 1, Model::Original), on(k, 2, 1, Model::Original);
  off.add(pt(k, {1, 3}, {2}));
  on.add(pt(k, {1, 0}, {2}));
  EXPECT_TRUE(check_modulus_zerocycle(off, d));
  EXPECT_FALSE(check_modulus_zerocycle(on, d));
  EXPECT_TRUE(check_face_condition(off).pass);
  ZeroCycle face(k, 2, 1, Model::Original);
  face.add(pt(k, {1, 3}, {0}));
  EXPECT_FALSE(check_face_condition(face).pass);
}

TEST(ZeroCycle, ModelConversionRoundTrip) {
  Rng rng(9);
  for (const auto& k : {Field::prime(7), Field::rationals()}) {
    for (int i = 0; i < 30; ++i) {
      ClosedPoint p{k, {random_nonzero(rng, k)}, {random_unit_not_one(rng, k), random_unit_not_one(rng, k)}};
      ClosedPoint q = convert_point(p, Model::Original, Model::Psi);
      EXPECT_EQ(convert_point(q, Model::Psi, Model::Original), p);
    }
  }
}

TEST(ZeroCycle, PushforwardAlongAGraph) {
  FieldPtr k = Field::prime(7);
  VarSet v{1, 0, false};
  Embedding e{k, 1, {MultiPoly::variable(k, v, 0), parse_poly("t1^2", k, v)}};
  ZeroCycle z(k, 1, 1, Model::Original);
  z.add(pt(k, {3}, {5}), 2);
  ZeroCycle expected(k, 2, 1, Model::Original);
  expected.add(pt(k, {3, 2}, {5}), 2);
  EXPECT_EQ(pushforward(z, e), expected);
  EXPECT_EQ(pushforward(z, Embedding::identity(k, 1)), z);
}
