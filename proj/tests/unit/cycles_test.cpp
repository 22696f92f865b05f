#include <gtest/gtest.h>

#include "chowmod/random.hpp"

using namespace chowmod;

namespace {

HypersurfaceCycle one(const FieldPtr& k, unsigned r, unsigned n, Model m, const char* text, long mult = 1) {
  HypersurfaceCycle z(k, r, n, m);
  z.add(parse_poly(text, k, z.vars()), mult);
  return z;
}

}  // namespace

TEST(Cycles, ComponentsAreNormalized) {
  FieldPtr k = Field::prime(7);
  HypersurfaceCycle a = one(k, 2, 1, Model::Psi, "3 - 3*t1*t2*y1");
  HypersurfaceCycle b = one(k, 2, 1, Model::Psi, "1 - t1*t2*y1");
  EXPECT_EQ(a, b);
  EXPECT_TRUE((a - b).is_zero());
  EXPECT_EQ((a + b).terms().begin()->second, 2);
}

TEST(Cycles, LevelOneBoundaryInPsi) {
  FieldPtr k = Field::prime(7);
  HypersurfaceCycle z = one(k, 2, 1, Model::Psi, "1 - t1*t2*(3*y1 + 2)");
  HypersurfaceCycle expected = one(k, 2, 0, Model::Psi, "1 - 5*t1*t2") - one(k, 2, 0, Model::Psi, "1 - 2*t1*t2");
  EXPECT_EQ(boundary(z, {false, SignConvention::Native}), expected);
  EXPECT_EQ(boundary(z, {false, SignConvention::Reversed}), expected.scaled(-1));
  EXPECT_TRUE(boundary(z, {true, SignConvention::Native}).is_zero());
}

TEST(Cycles, LevelTwoBoundaryMatchesFaces) {
  FieldPtr k = Field::prime(5);
  HypersurfaceCycle z = one(k, 1, 2, Model::Psi, "1 - t1*(y1 + 2*y2 + y1*y2)");
  // -(F1^0 - F1^1) + (F2^0 - F2^1).
  HypersurfaceCycle expected = one(k, 1, 1, Model::Psi, "1 - t1*(1 + 3*y1)") -
                               one(k, 1, 1, Model::Psi, "1 - t1*2*y1") + one(k, 1, 1, Model::Psi, "1 - t1*y1") -
                               one(k, 1, 1, Model::Psi, "1 - t1*(2 + 2*y1)");
  EXPECT_EQ(boundary(z, {false, SignConvention::Native}), expected);
}

TEST(Cycles, OriginalFacesAreInfinityAndZero) {
  FieldPtr k = Field::rationals();
  HypersurfaceCycle z = one(k, 1, 1, Model::Original, "1 - t1*(2*y1 + 3)");
  // -(F^inf - F^0): the leading y1 coefficient is -2*t1, which is degenerate
  // only at level >= 1; at level 0 it is the divisor V(t1).
  HypersurfaceCycle expected = one(k, 1, 0, Model::Original, "1 - 3*t1") - one(k, 1, 0, Model::Original, "t1");
  EXPECT_EQ(boundary(z, {false, SignConvention::Native}), expected);
}

TEST(Cycles, OriginalComponentsDropTheHyperplaneAtOne) {
  FieldPtr k = Field::prime(5);
  HypersurfaceCycle a = one(k, 1, 2, Model::Original, "(y1 - 1)^2*(1 + t1*y2)");
  EXPECT_EQ(a, one(k, 1, 2, Model::Original, "1 + t1*y2"));
  EXPECT_TRUE(one(k, 1, 1, Model::Original, "3*y1 - 3").is_zero());
}

TEST(Cycles, BoundarySquaredVanishes) {
  Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    FieldPtr k = i % 2 ? Field::prime(7) : Field::rationals();
    unsigned n = 2 + static_cast<unsigned>(i % 3 == 0);
    HypersurfaceCycle z = random_admissible_cycle(rng, k, 2, n);
    for (bool flag : {false, true}) {
      ComplexOptions o{flag, SignConvention::Native};
      EXPECT_TRUE(boundary(boundary(z, o), o).is_zero()) << z.to_string();
      HypersurfaceCycle zo = psi_convert(z, Model::Original);
      EXPECT_TRUE(boundary(boundary(zo, o), o).is_zero()) << zo.to_string();
    }
  }
}

TEST(Cycles, ConversionIsAnInvolutionPair) {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    HypersurfaceCycle z = random_admissible_cycle(rng, Field::prime(5), 2, 2);
    EXPECT_EQ(psi_convert(psi_convert(z, Model::Original), Model::Psi), z);
  }
}

TEST(Cycles, FaceConditionDetectsContainedFaces) {
  FieldPtr k = Field::prime(7);
  FaceReport bad = check_face_condition(one(k, 1, 2, Model::Psi, "y1*(1 - t1*y2)"));
  EXPECT_FALSE(bad.pass);
  ASSERT_FALSE(bad.violations.empty());
  EXPECT_TRUE(check_face_condition(one(k, 1, 2, Model::Psi, "1 - t1*y1*y2")).pass);
  try {
    face_restrict(one(k, 1, 1, Model::Psi, "y1"), 1, FaceValue::Zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ImproperFaceIntersection);
  }
}

TEST(Cycles, ModulusVerdicts) {
  FieldPtr k = Field::prime(7);
  ModulusDatum d = ModulusDatum::monomial(k, {1, 1});
  EXPECT_EQ(check_modulus_codim1(one(k, 2, 1, Model::Psi, "1 - t1*t2*(3*y1 + 2)"), d).verdict,
            ModulusVerdict::Certified);
  EXPECT_EQ(check_modulus_codim1(one(k, 2, 1, Model::Psi, "1 - t1*t2*(3*y1^2 + 2)"), d).verdict,
            ModulusVerdict::ViolatesNecessary);
  ModulusDatum d2 = ModulusDatum::monomial(k, {2, 1});
  EXPECT_NE(check_modulus_codim1(one(k, 2, 1, Model::Psi, "1 - t1*t2*y1"), d2).verdict, ModulusVerdict::Certified);
  EXPECT_EQ(check_modulus_codim1(one(k, 2, 1, Model::Psi, "1 - t1^2*t2*y1"), d2).verdict, ModulusVerdict::Certified);
}

TEST(Cycles, GeneratorCycleZ3) {
  FieldPtr k = Field::prime(7);
  HypersurfaceCycle z = one(k, 3, 1, Model::Psi, "1 - 3*t1*t2*t3*y1");
  EXPECT_TRUE(check_face_condition(z).pass);
  EXPECT_EQ(check_modulus_codim1(z, ModulusDatum::monomial(k, {1, 1, 1})).verdict, ModulusVerdict::Certified);
}
