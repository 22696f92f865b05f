#include <gtest/gtest.h>

#include "chowmod/random.hpp"
#include "chowmod/witness.hpp"

using namespace chowmod;

namespace {

HypersurfaceCycle one(const FieldPtr& k, unsigned r, unsigned n, const char* text) {
  HypersurfaceCycle z(k, r, n, Model::Psi);
  z.add(parse_poly(text, k, z.vars()));
  return z;
}

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

TEST(Rho, CoefficientOfY1) {
  FieldPtr k = Field::prime(7);
  EXPECT_EQ(rho(one(k, 2, 1, "1 - t1*t2*(3*y1 + 2)")).to_string(), "3");
  FieldPtr q = Field::rationals();
  HypersurfaceCycle z = one(q, 2, 1, "1 - t1*t2*(1/2*y1 + 4 + t1*y1)");
  z.add(parse_poly("1 - 5*t1*t2*y1", q, z.vars()), -2);
  EXPECT_EQ(rho(z).to_string(), "-19/2");
}

TEST(Rho, Preconditions) {
  FieldPtr k = Field::prime(5);
  EXPECT_EQ(code_of([&] { rho(one(k, 2, 2, "1 - t1*t2*y1*y2")); }), ErrorCode::WrongLevel);
  EXPECT_EQ(code_of([&] { rho(one(k, 2, 1, "1 - t1*y1")); }), ErrorCode::NotNormalized);
  EXPECT_EQ(code_of([&] { rho(one(k, 2, 1, "1 - t1*t2*y1^2")); }), ErrorCode::DegreeTooHigh);
  HypersurfaceCycle orig(k, 2, 1, Model::Original);
  orig.add(parse_poly("1 - t1*t2*y1", k, orig.vars()));
  EXPECT_EQ(code_of([&] { rho(orig); }), ErrorCode::WrongModel);
}

TEST(Rho, ReciprocityCertificate) {
  FieldPtr k = Field::prime(5);
  HypersurfaceCycle w = one(k, 2, 2, "1 - t1*t2*(2*y1 + 3*y2 + y1*y2 + 1)");
  Certificate c = verify_rho_reciprocity(w, ModulusDatum::monomial(k, {1, 1}));
  EXPECT_TRUE(c.valid()) << c.transcript.dump();
  EXPECT_TRUE(verify_certificate(c.to_json()));
}

TEST(Rho, GeneratorCycles) {
  for (std::uint64_t p : {5u, 7u}) {
    FieldPtr k = Field::prime(p);
    for (std::uint64_t i = 0; i < p; ++i)
      for (unsigned r : {2u, 3u}) {
        GeneratorResult g = generator_cycle(k->element_at(i), r);
        EXPECT_EQ(rho(g.cycle), k->element_at(i));
        EXPECT_TRUE(g.certificate.valid());
      }
  }
}

TEST(Witness, BoundingSurface) {
  FieldPtr k = Field::rationals();
  HypersurfaceCycle z = one(k, 2, 0, "1 - t1*t2*(3 + t1)");
  ModulusDatum d = ModulusDatum::monomial(k, {1, 1});
  for (SignConvention s : {SignConvention::Native, SignConvention::Reversed}) {
    Certificate c = bounding_surface(z, d, s);
    EXPECT_TRUE(c.valid()) << c.transcript.dump();
    EXPECT_TRUE(verify_certificate(c.to_json()));
  }
  EXPECT_EQ(code_of([&] { bounding_surface(one(k, 2, 0, "1 - t1*(3 + t2)"), d); }), ErrorCode::NotPresentable);
}

TEST(Witness, ZeroCycleLevelZero) {
  FieldPtr k = Field::prime(7);
  ClosedPoint z{k, {k->from_int(2), k->from_int(3)}, {}};
  Certificate c = zero_cycle_vanishing_witness(z, ModulusDatum::monomial(k, {2, 3}));
  EXPECT_TRUE(c.valid()) << c.transcript.dump();
  EXPECT_TRUE(verify_certificate(c.to_json()));
  ClosedPoint on{k, {k->from_int(0), k->from_int(3)}, {}};
  EXPECT_EQ(code_of([&] { zero_cycle_vanishing_witness(on, ModulusDatum::monomial(k, {1, 1})); }),
            ErrorCode::PointOnModulus);
}

TEST(Witness, ZeroCycleHigherLevelReportsTheSymbol) {
  FieldPtr k = Field::prime(5);
  ClosedPoint z{k, {k->from_int(2), k->from_int(3)}, {k->from_int(2), k->from_int(3)}};
  Certificate c = zero_cycle_vanishing_witness(z, ModulusDatum::monomial(k, {1, 1}));
  EXPECT_TRUE(c.valid()) << c.transcript.dump();
  EXPECT_TRUE(verify_certificate(c.to_json()));
  ClosedPoint y{k, {k->from_int(2), k->from_int(3), k->from_int(4)}, {k->from_int(2)}};
  Certificate p = zero_cycle_vanishing_witness(y, ModulusDatum::monomial(k, {1, 1, 1}), ZeroCycleVariant::ProductBase, 1);
  EXPECT_TRUE(p.valid()) << p.transcript.dump();
  EXPECT_TRUE(verify_certificate(p.to_json()));
}

TEST(Witness, TamperedCertificatesFail) {
  FieldPtr k = Field::prime(7);
  GeneratorResult g = generator_cycle(k->from_int(3), 2);
  Json good = g.certificate.to_json();
  ASSERT_TRUE(verify_certificate(good));

  Json claim = good;
  claim["claim"]["a"] = "4";
  EXPECT_FALSE(verify_certificate(claim));

  Json status = good;
  status["transcript"][0]["status"] = "fail";
  EXPECT_FALSE(verify_certificate(status));

  Json witness = good;
  witness["witnesses"][0]["cycle"]["terms"][0]["poly"] = "1 - 2*t1*t2*y1";
  EXPECT_FALSE(verify_certificate(witness));
}

TEST(Witness, MalformedCertificates) {
  EXPECT_EQ(code_of([] { verify_certificate(Json::object()); }), ErrorCode::MalformedCertificate);
  EXPECT_EQ(code_of([] { verify_certificate(Json{{"claim", {{"kind", "nonsense"}}}}); }),
            ErrorCode::MalformedCertificate);
}
