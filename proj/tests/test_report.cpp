#include "doctest.h"
#include "para/errors.hpp"
#include "para/report.hpp"
#include "test_support.hpp"

using namespace para;

TEST_CASE("analysis of a flat nilpotent example") {
  AnalyzeReport r = analyze(parse_salamon("0,0,0,12", "n4"));
  CHECK(r.name == "n4");
  CHECK(r.salamon == "0,0,0,12");
  CHECK(r.dim == 4);
  CHECK(r.jacobi);
  CHECK(r.nilpotent);
  CHECK(r.unimodular);
  CHECK(r.torsion_class == "W2");
  CHECK(r.components.at("tau2") == "2⊗12");
  CHECK(r.components.at("tau1") == "0");
  CHECK(r.components.at("f4") == "0");
  CHECK(!r.paracomplex);
  CHECK(!r.parakahler);
  CHECK(!r.strict_nearly_parakahler);
  CHECK(r.flat);
  CHECK(r.ricci_flat);
  CHECK(r.einstein);
  CHECK(r.einstein_s == "0");
  CHECK(r.s == "0");
  CHECK(r.ricci == "0");
  CHECK(r.riemann == "0");
  CHECK(r.agree_ric_prime);
  CHECK(r.agree_ric_second);
  CHECK(r.agree_scalar);
  CHECK(r.agree());
  CHECK(r.version == version_string());
}

TEST_CASE("flag derivation across examples") {
  AnalyzeReport pk = analyze(parse_salamon("24,0,0,0,0,35"));
  CHECK(pk.parakahler);
  CHECK(pk.paracomplex);
  CHECK(!pk.strict_nearly_parakahler);
  CHECK(pk.ricci_flat);
  CHECK(!pk.flat);

  AnalyzeReport w1 = analyze(parse_salamon("0,0,0,-1/3*23,1/3*13,-1/3*12"));
  CHECK(w1.torsion_class == "W1");
  CHECK(w1.strict_nearly_parakahler);
  CHECK(!w1.parakahler);

  AnalyzeReport ab = analyze(para::testing::abelian(4));
  CHECK(ab.torsion_class == "0");
  CHECK(ab.parakahler);
  CHECK(ab.flat);
}

TEST_CASE("analysis respects an alternative coframe") {
  LieAlgebra L = parse_salamon("14,25,36,14,25,36");
  AnalyzeReport base = analyze(L);
  QMatrix M = QMatrix::identity(6);
  for (int i = 0; i < 3; ++i) M.at(i, i) = Scalar(-1);
  AnalyzeReport flipped = analyze(L, M);
  CHECK(base.torsion_class == flipped.torsion_class);
  CHECK(base.s == "2");
  CHECK(flipped.s == "-2");
  CHECK(flipped.agree());
}

TEST_CASE("analysis preconditions") {
  CHECK_THROWS_AS(analyze(para::testing::abelian(5)), PreconditionError);
  CHECK_THROWS_AS(analyze(parse_salamon("23,31,12,14")), PreconditionError);
}

TEST_CASE("json reports round-trip exactly") {
  for (const char* sal : {"0,0,0,12", "24,0,0,0,0,35", "0,0,0,0,45,46"}) {
    AnalyzeReport r = analyze(parse_salamon(sal, sal));
    std::string text = analyze_json(r);
    CHECK(parse_analyze_json(text) == r);
    // top-level sections of the schema
    for (const char* key : {"\"algebra\"", "\"torsion\"", "\"curvature\"", "\"agreement\"", "\"meta\""})
      CHECK(text.find(key) != std::string::npos);
  }
  CHECK_THROWS_AS(parse_analyze_json("{"), ParseError);
  CHECK_THROWS_AS(parse_analyze_json("[1,2]"), ParseError);
}

TEST_CASE("text report carries the headline facts") {
  std::string text = analyze_text(analyze(parse_salamon("0,0,0,12", "n4")));
  CHECK(text.find("n4") != std::string::npos);
  CHECK(text.find("W2") != std::string::npos);
  CHECK(text.find("ricci-flat yes") != std::string::npos);
  CHECK(text.find("agreement") != std::string::npos);
}
