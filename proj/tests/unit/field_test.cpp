#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "chowmod/random.hpp"
#include "chowmod/serialize.hpp"

using namespace chowmod;

namespace {

std::vector<FieldPtr> sample_fields() {
  return {Field::prime(5),        Field::prime(7),        Field::finite(2, 2),
          Field::finite(3, 2),    Field::finite(2, 4),    Field::rationals(),
          parse_field_spec("Q:u^2 + 1")};
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

TEST(Field, RingAxiomsOnRandomElements) {
  Rng rng(7);
  for (const auto& k : sample_fields()) {
    for (int i = 0; i < 200; ++i) {
      Element a = random_element(rng, k), b = random_element(rng, k), c = random_element(rng, k);
      EXPECT_EQ((a + b) + c, a + (b + c)) << k->spec_string();
      EXPECT_EQ(a * (b + c), a * b + a * c) << k->spec_string();
      EXPECT_EQ((a * b) * c, a * (b * c)) << k->spec_string();
      EXPECT_EQ(a + (-a), k->zero());
      EXPECT_EQ(a - b + b, a);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one()) << a.to_string();
        EXPECT_EQ(a * b / a, b);
      }
    }
  }
}

TEST(Field, FermatHoldsForEveryElement) {
  for (auto [p, d] : {std::pair{2u, 2u}, {2u, 4u}, {3u, 2u}, {5u, 2u}, {7u, 1u}}) {
    FieldPtr k = Field::finite(p, d);
    mpz_class q = k->order();
    for (std::uint64_t i = 0; i < q.get_ui(); ++i) {
      Element x = k->element_at(i);
      EXPECT_EQ(x.pow(q), x);
      EXPECT_EQ(k->index_of(x), i);
      Element f = x;
      for (unsigned j = 0; j < d; ++j) f = f.frobenius();
      EXPECT_EQ(f, x);
    }
  }
}

TEST(Field, PrimitiveRootGeneratesTheUnits) {
  for (auto [p, d] : {std::pair{2u, 3u}, {3u, 2u}, {13u, 1u}, {2u, 4u}}) {
    FieldPtr k = Field::finite(p, d);
    std::set<std::uint64_t> seen;
    Element g = k->primitive_root(), x = k->one();
    for (std::uint64_t e = 0; e + 1 < k->order().get_ui(); ++e) {
      seen.insert(k->index_of(x));
      EXPECT_EQ(discrete_log(x), e);
      x *= g;
    }
    EXPECT_EQ(seen.size(), k->order().get_ui() - 1);
    EXPECT_TRUE(x.is_one());
  }
}

TEST(Field, NormIsTheProductOfConjugates) {
  FieldPtr k = Field::finite(3, 2);
  for (std::uint64_t i = 1; i < 9; ++i) {
    Element x = k->element_at(i);
    Element n = norm_k1_finite(x);
    EXPECT_EQ(n.lift(k), x * x.frobenius());
    EXPECT_EQ(*n.field(), *Field::prime(3));
  }
}

TEST(Field, RationalsAreKeptInLowestTerms) {
  FieldPtr q = Field::rationals();
  EXPECT_TRUE(q->from_rational(mpq_class(4, 4)).is_one());
  EXPECT_EQ(q->from_rational(mpq_class(6, -4)).to_string(), "-3/2");
}

TEST(Field, SpecRoundTrip) {
  for (const auto& k : sample_fields()) EXPECT_EQ(*parse_field_spec(k->spec_string()), *k) << k->spec_string();
  EXPECT_EQ(parse_field_spec("Fq:2:u^2 + u + 1")->order(), 4);
}

TEST(Field, SpecErrors) {
  EXPECT_EQ(code_of([] { parse_field_spec("Fp:6"); }), ErrorCode::NonPrimeCharacteristic);
  EXPECT_EQ(code_of([] { parse_field_spec("Fq:2:u^2 + 1"); }), ErrorCode::ReducibleExtensionPolynomial);
  EXPECT_EQ(code_of([] { parse_field_spec("R"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { Field::prime(5)->zero().inverse(); }), ErrorCode::ZeroElement);
}
