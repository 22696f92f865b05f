#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "chowmod/cli.hpp"
#include "chowmod/suite.hpp"

using namespace chowmod;

namespace {

struct CliRun {
  int code;
  Json out;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  int code = run_cli(args, out);
  return {code, Json::parse(out.str())};
}

std::string temp_file(const std::string& name, const Json& j) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << j.dump(2);
  return path;
}

}  // namespace

TEST(Cli, RhoInline) {
  CliRun r = run({"rho", "--inline", "1 - t1*t2*(3*y1+2)", "--field", "Fp:7", "--modulus", "1,1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, Json::parse(R"({"rho":"3"})"));
}

TEST(Cli, GeneratorThenCheckCycleAndVerify) {
  CliRun g = run({"generator", "--a", "3", "--field", "Fp:7", "--r", "3"});
  ASSERT_EQ(g.code, kExitOk);
  CycleInput z3 = cycle_from_json(g.out["cycle"]);
  EXPECT_EQ(cycle_to_json(z3.cycle, &*z3.modulus), g.out["cycle"]);

  CliRun c = run({"check-cycle", "--file", temp_file("z3.json", g.out["cycle"])});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_EQ(c.out, Json::parse(R"({"face":"pass","modulus":"Certified"})"));

  CliRun v = run({"verify", "--file", temp_file("cert.json", g.out["certificate"])});
  EXPECT_EQ(v.code, kExitOk);
  Json tampered = g.out["certificate"];
  tampered["claim"]["a"] = "5";
  CliRun t = run({"verify", "--file", temp_file("bad.json", tampered)});
  EXPECT_EQ(t.code, kExitVerificationFailure);
  EXPECT_EQ(t.out["valid"], false);
}

TEST(Cli, K2Table) {
  CliRun r = run({"ktheory", "k2-table", "--max-q", "9"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out["all_trivial"], true);
  std::vector<int> qs;
  for (const auto& row : r.out["table"]) qs.push_back(row["q"].get<int>());
  EXPECT_EQ(qs, (std::vector<int>{2, 3, 4, 5, 7, 8, 9}));
}

TEST(Cli, BoundaryRoundTrips) {
  CliRun r = run({"boundary", "--inline", "1 - t1*t2*(3*y1+2)", "--field", "Fp:7", "--level0-degeneracy", "off"});
  ASSERT_EQ(r.code, kExitOk);
  CycleInput b = cycle_from_json(r.out);
  EXPECT_EQ(cycle_to_json(b.cycle), r.out);
  EXPECT_EQ(b.cycle.terms().size(), 2u);
  CliRun on = run({"boundary", "--inline", "1 - t1*t2*(3*y1+2)", "--field", "Fp:7"});
  EXPECT_TRUE(cycle_from_json(on.out).cycle.is_zero());
}

TEST(Cli, ConvertModelRoundTrips) {
  CliRun o = run({"convert-model", "--inline", "1 - t1*t2*(y1 + 2*y2 + y1*y2)", "--field", "Fp:5", "--model", "original"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out["model"], "ORIGINAL");
  CliRun back = run({"convert-model", "--file", temp_file("orig.json", o.out), "--model", "psi"});
  ASSERT_EQ(back.code, kExitOk);
  HypersurfaceCycle z(Field::prime(5), 2, 2, Model::Psi);
  z.add(parse_poly("1 - t1*t2*(y1 + 2*y2 + y1*y2)", z.field(), z.vars()));
  EXPECT_EQ(cycle_from_json(back.out).cycle, z);
}

TEST(Cli, WitnessCommands) {
  CliRun b = run({"witness-bounding", "--inline", "1 - t1*t2*(2 + t2)", "--field", "Q"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_TRUE(verify_certificate(b.out));
  CliRun z = run({"witness-zero-cycle", "--point", "2,3;", "--field", "Fp:5", "--modulus", "2,1"});
  EXPECT_EQ(z.code, kExitOk);
  ASSERT_EQ(z.out["certificates"].size(), 1u);
  EXPECT_TRUE(verify_certificate(z.out["certificates"][0]["certificate"]));
  CliRun on = run({"witness-zero-cycle", "--point", "0,3;", "--field", "Fp:5"});
  EXPECT_EQ(on.code, kExitInputError);
  EXPECT_EQ(on.out["error"]["code"], "PointOnModulus");
}

TEST(Cli, KTheoryCommands) {
  CliRun red = run({"ktheory", "reduce", "--entries", "2,3", "--field", "Fp:7", "--certificate"});
  EXPECT_EQ(red.code, kExitOk);
  EXPECT_EQ(red.out["status"], "oracle-certified (K2 presentation)");
  EXPECT_TRUE(symbol_from_json(red.out["value"]).is_zero());

  CliRun tame = run({"ktheory", "tame", "--entries", "t1,3", "--field", "Fp:7", "--place", "t1"});
  EXPECT_EQ(tame.code, kExitOk);
  FieldPtr k = Field::prime(7);
  EXPECT_EQ(symbol_from_json(tame.out["value"]), make_symbol(k, {k->from_int(3)}, -1));

  CliRun delta = run({"ktheory", "delta", "--entries", "t1,(1 - t1)", "--field", "Fp:5"});
  EXPECT_EQ(delta.code, kExitOk);
  EXPECT_EQ(delta.out["places"].size(), 3u);
}

TEST(Cli, CurveCommands) {
  CliRun st = run({"curves", "totaro", "--kind", "steinberg", "--f1", "3", "--field", "Fp:7"});
  EXPECT_EQ(st.code, kExitOk);
  EXPECT_EQ(st.out["ok"], true);
  EXPECT_EQ(zero_cycle_from_json(st.out["boundary"]).cycle, zero_cycle_from_json(st.out["expected"]).cycle);

  CliRun lit = run({"curves", "totaro", "--kind", "steinberg", "--f1", "3", "--field", "Fp:7", "--literal"});
  EXPECT_EQ(lit.code, kExitInputError);
  EXPECT_EQ(lit.out["error"]["code"], "ImproperBoundary");

  CliRun m = run({"curves", "totaro", "--kind", "mult", "--f", "2", "--g", "3", "--x", "1", "--field", "Q"});
  EXPECT_EQ(m.code, kExitOk);

  CliRun xi = run({"curves", "xi", "--f", "(t1 - 1)/(t1 - 2)", "--u", "3", "--pi", "t1", "--r", "2", "--field", "Fp:5"});
  EXPECT_EQ(xi.code, kExitOk);
  EXPECT_EQ(xi.out["ok"], true);

  CliRun bd = run({"curves", "boundary", "--file", temp_file("curve.json", st.out["curve"])});
  EXPECT_EQ(bd.code, kExitOk);
  EXPECT_EQ(zero_cycle_from_json(bd.out["boundary"]).cycle, zero_cycle_from_json(st.out["boundary"]).cycle);
}

TEST(Cli, InputErrorsExitTwo) {
  CliRun syntax = run({"rho", "--inline", "1 - t1*(", "--field", "Fp:7"});
  EXPECT_EQ(syntax.code, kExitInputError);
  EXPECT_EQ(syntax.out["error"]["code"], "SyntaxError");
  CliRun field = run({"rho", "--inline", "1 - t1*t2*y1", "--field", "Fp:9"});
  EXPECT_EQ(field.code, kExitInputError);
  EXPECT_EQ(field.out["error"]["code"], "NonPrimeCharacteristic");
  CliRun flag = run({"rho", "--bogus"});
  EXPECT_EQ(flag.code, kExitInputError);
  CliRun none = run({});
  EXPECT_EQ(none.code, kExitInputError);
}

TEST(Cli, SuiteAndOutFile) {
  std::string path = ::testing::TempDir() + "suite.json";
  std::ostringstream quiet;
  int code = run_cli({"suite", "--seed", "42", "--only", "k2_steinberg", "--only", "totaro_mult", "--out", path}, quiet);
  EXPECT_EQ(code, kExitOk);
  EXPECT_TRUE(quiet.str().empty());
  Json rep = Json::parse(std::ifstream(path));
  EXPECT_EQ(rep["suites"].size(), 2u);
  EXPECT_EQ(rep["all_pass"], true);
  CliRun mut = run({"suite", "--only", "boundary_squared", "--size", "boundary_squared=20", "--mutate",
                 "boundary-sign-flip"});
  EXPECT_EQ(mut.code, kExitVerificationFailure);
  std::remove(path.c_str());
}
