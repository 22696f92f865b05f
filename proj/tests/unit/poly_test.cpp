#include <gtest/gtest.h>

#include "chowmod/factor.hpp"
#include "chowmod/random.hpp"
#include "chowmod/smith.hpp"
#include "oracles/oracles.hpp"

using namespace chowmod;

namespace {

UPoly from_code(const FieldPtr& k, std::uint64_t code, unsigned d) {
  std::vector<Element> c;
  std::uint64_t p = k->characteristic();
  for (unsigned i = 0; i < d; ++i) {
    c.push_back(k->from_int(static_cast<long>(code % p)));
    code /= p;
  }
  c.push_back(k->one());
  return UPoly(k, c);
}

}  // namespace

TEST(Factor, IrreducibleCountsMatchGauss) {
  for (auto [p, maxd] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 3u}}) {
    FieldPtr k = Field::prime(p);
    for (unsigned d = 1; d <= maxd; ++d) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < d; ++i) total *= p;
      long count = 0;
      for (std::uint64_t code = 0; code < total; ++code) count += is_irreducible(from_code(k, code, d));
      EXPECT_EQ(count, oracle::gauss_count(p, static_cast<int>(d))) << "p=" << p << " d=" << d;
    }
  }
}

TEST(Factor, FactorizationExpandsBack) {
  Rng rng(11);
  for (const auto& k : {Field::prime(5), Field::prime(7), Field::finite(2, 2), Field::rationals()}) {
    for (int i = 0; i < 60; ++i) {
      RatFunc f = random_ratfunc(rng, k, 5);
      if (f.num().is_constant()) continue;
      Factorization fac = factor_univariate(f.num());
      EXPECT_EQ(fac.expand(), f.num());
      if (k->is_finite()) {
        EXPECT_TRUE(fac.complete());
        for (const auto& part : fac.factors) EXPECT_TRUE(is_irreducible(part.poly));
      }
    }
  }
}

TEST(Factor, RationalRootsOverQ) {
  FieldPtr q = Field::rationals();
  UPoly f = UPoly::linear_root(q->from_rational(mpq_class(1, 2))) * UPoly::linear_root(q->from_int(-3)).pow(2);
  auto roots = rational_roots(f * q->from_int(6));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].first.to_string(), "-3");
  EXPECT_EQ(roots[0].second, 2u);
  EXPECT_EQ(roots[1].first.to_string(), "1/2");
}

TEST(UPoly, DivmodAndGcd) {
  Rng rng(3);
  FieldPtr k = Field::prime(7);
  for (int i = 0; i < 100; ++i) {
    UPoly a = random_ratfunc(rng, k, 6).num(), b = random_ratfunc(rng, k, 3).num();
    auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    XGcd x = xgcd(a, b);
    EXPECT_EQ(x.s * a + x.t * b, x.g);
    EXPECT_TRUE((a % x.g).is_zero());
    EXPECT_TRUE((b % x.g).is_zero());
  }
}

TEST(MultiPoly, ParseAndPrintRoundTrip) {
  FieldPtr k = Field::prime(7);
  VarSet vars{2, 2, false};
  for (const char* text : {"1 - t1*t2*(3*y1 + 2)", "(t1 + y2)^3 - 2*y1*y2", "5", "t1^2*t2 - 6*t2*y1*y2 + 1"}) {
    MultiPoly f = parse_poly(text, k, vars);
    EXPECT_EQ(parse_poly(f.to_string(), k, vars), f) << text;
  }
  EXPECT_EQ(parse_poly("1 - t1*t2*(3*y1+2)", k, vars).to_string(), "4*t1*t2*y1 + 5*t1*t2 + 1");
}

TEST(MultiPoly, ParseErrorsCarryPositions) {
  FieldPtr k = Field::rationals();
  VarSet vars{1, 1, false};
  try {
    parse_poly("1 + t1*(y1", k, vars);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  try {
    parse_poly("t3 + 1", k, vars);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVariable);
  }
}

TEST(MultiPoly, ExactDivision) {
  FieldPtr k = Field::prime(5);
  VarSet vars{2, 1, false};
  MultiPoly a = parse_poly("t1 + y1 + 2", k, vars), b = parse_poly("t1*t2 - 3*y1", k, vars);
  EXPECT_EQ((a * b).exact_div(b), a);
  EXPECT_TRUE((a * b).divisible_by(a));
  EXPECT_FALSE(a.divisible_by(b));
  try {
    a.exact_div(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InexactDivision);
  }
}

TEST(Smith, KnownInvariants) {
  IntMatrix m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  std::vector<mpz_class> d = smith_diagonal(m);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0], 2);
  EXPECT_EQ(d[1], 6);
  EXPECT_EQ(d[2], 12);
  // Z^2 / <(2, 0), (0, 3)> = Z/6.
  std::vector<mpz_class> inv = abelian_invariants({{2, 0}, {0, 3}}, 2);
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_EQ(inv[0], 6);
}
