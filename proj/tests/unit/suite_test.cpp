#include <gtest/gtest.h>

#include "chowmod/suite.hpp"

using namespace chowmod;

TEST(Suite, NamesAreSortedAndUnique) {
  const auto& s = property_suites();
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s[i - 1].name, s[i].name);
}

TEST(Suite, ParallelAndSerialReportsAgree) {
  SuiteOptions o;
  o.seed = 7;
  for (const auto& s : property_suites()) o.sizes[s.name] = 6;
  EXPECT_EQ(run_suites(o).to_json().dump(), run_suites_serial(o).to_json().dump());
}

TEST(Suite, SeedChangesTheCorpus) {
  EXPECT_NE(derive_seed(1, "rho_reciprocity", 0), derive_seed(2, "rho_reciprocity", 0));
  EXPECT_NE(derive_seed(1, "rho_reciprocity", 0), derive_seed(1, "rho_generator", 0));
  EXPECT_NE(derive_seed(1, "rho_reciprocity", 0), derive_seed(1, "rho_reciprocity", 1));
}

TEST(Suite, SignFlipBreaksOnlyBoundarySuites) {
  SuiteOptions o;
  o.mutation = Mutation::BoundarySignFlip;
  o.sizes["boundary_squared"] = 30;
  o.sizes["face_containment"] = 30;
  SuiteReport r = run_suites(o, {"boundary_squared", "face_containment"});
  ASSERT_EQ(r.suites.size(), 2u);
  EXPECT_LT(r.suites[0].passed, r.suites[0].total);
  EXPECT_EQ(r.suites[1].passed, r.suites[1].total);
}

TEST(Suite, UnknownSuiteIsAnError) {
  try {
    run_suites(SuiteOptions{}, {"no_such_suite"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}
