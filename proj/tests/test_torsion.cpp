#include "doctest.h"
#include "para/ricforms.hpp"
#include "para/torsion.hpp"
#include "test_support.hpp"

using namespace para;
using para::testing::abelian;

namespace {

Structure structure_of(const std::string& salamon) {
  return standard_structure(parse_salamon(salamon));
}

}  // namespace

TEST_CASE("pure tau3 example: one block, one entry") {
  Structure S = structure_of("0,0,0,0,0,45");
  TorsionComponents tc = intrinsic_torsion(S);
  CHECK(torsion_text(tc.tau3) == "1/2*3⊗45");
  CHECK(tc.tau3.coeff({3, 4, 5}) == scalar_of(1, 2));
  for (int k : {1, 2, 4, 5, 6, 7, 8}) CHECK(tc.tau(k).zero());
  CHECK(tc.f4.zero());
  CHECK(tc.f8.zero());
  CHECK(tc.lambda.zero());
  CHECK(classify(S).text() == "W3");
}

TEST_CASE("eight-dimensional tau3 example") {
  TorsionComponents tc = intrinsic_torsion(structure_of("0,0,0,0,0,0,56,57"));
  CHECK(torsion_text(tc.tau3) == "1/2*3⊗56+1/2*4⊗57");
  CHECK(classify(tc, 4).text() == "W3");
}

TEST_CASE("mixed tau2 + tau6 example") {
  Structure S = structure_of("0,0,46,0,12,0");
  TorsionComponents tc = intrinsic_torsion(S);
  Tensor t2 = torsion_block(6, 3);
  t2.add_term({2, 1, 2}, Scalar(1));
  Tensor t6 = torsion_block(6, 1);
  t6.add_term({6, 4, 6}, Scalar(1));
  CHECK(tc.tau2 == t2);
  CHECK(tc.tau6 == t6);
  CHECK(classify(S).text() == "W2+W6");
}

TEST_CASE("trace blocks carry f4 and the lambda flags") {
  Structure S = structure_of("0,0,0,0,45,46");
  TorsionComponents tc = intrinsic_torsion(S);
  CHECK(tc.f4 == KForm::basis(6, {4}) * scalar_of(-1, 2));
  CHECK(tc.f8.zero());
  CHECK(torsion_text(tc.tau4) == "1/2*2⊗45+1/2*3⊗46");
  CHECK(tc.lambda == KForm::basis(6, {4}) * scalar_of(1, 3));
  TorsionClass c = classify(S);
  CHECK(c.text() == "W4 [l01]");
  CHECK(c.w[3]);
  CHECK(c.lambda01);
  CHECK(!c.lambda10);

  // adding d e^1 = -e^{14} cancels the trace of the differential but not tau4
  TorsionClass cv = classify(structure_of("-14,0,0,0,45,46"));
  CHECK(cv.text() == "W4");
  CHECK(!cv.lambda01);
}

TEST_CASE("classification flags and subset test") {
  TorsionClass zero;
  CHECK(zero.text() == "0");
  CHECK(zero.within(zero));

  TorsionClass w1;
  w1.w[0] = true;
  CHECK(w1.text() == "W1");
  CHECK(zero.within(w1));
  CHECK(!w1.within(zero));

  TorsionClass w1l = w1;
  w1l.lambda10 = true;
  CHECK(w1l.text() == "W1 [l10]");
  CHECK(w1l.within(w1));  // lambda flags do not enter the subset test

  CHECK(classify(structure_of("0,0,0,12")).text() == "W2");
  CHECK(classify(structure_of("0,0,0,-1/3*23,1/3*13,-1/3*12")).text() == "W1");
  CHECK(classify(standard_structure(abelian(6))).text() == "0");
}

TEST_CASE("nijenhuis blocks are four times the alternated torsion traces") {
  Structure S = structure_of("0,0,0,12");
  auto [NH, NV] = nijenhuis(S);
  CHECK(NH.coeff({1, 2, 2}) == -4);
  CHECK(NH.text() == "-4*12⊗2");
  CHECK(NV.zero());

  for (const char* sal : {"0,0,0,12", "0,0,46,0,12,0", "0,0,0,0,45,46", "24,0,0,0,0,35"}) {
    Structure T = structure_of(sal);
    TorsionComponents tc = intrinsic_torsion(T);
    auto [nh, nv] = nijenhuis(T);
    CHECK(nh == partial_map(tc.tau12(), T.n()) * Scalar(4));
    CHECK(nv == partial_map(tc.tau56(), T.n()) * Scalar(4));
  }
}

TEST_CASE("paracomplex iff both nijenhuis blocks vanish") {
  // class W2 obstructs the vertical distribution: not paracomplex
  auto [nh2, nv2] = nijenhuis(structure_of("0,0,0,12"));
  CHECK(!nh2.zero());
  // class W3 structures are paracomplex
  auto [nh3, nv3] = nijenhuis(structure_of("0,0,0,0,0,45"));
  CHECK(nh3.zero());
  CHECK(nv3.zero());
}

TEST_CASE("nilpotent paracomplex structures tie lambda to the traces") {
  for (const char* sal : {"24,0,0,0,0,35", "0,0,0,0,0,0,56,57", "0,0,0,0,0,45"}) {
    Structure S = structure_of(sal);
    TorsionComponents tc = intrinsic_torsion(S);
    TorsionClass c = classify(S);
    REQUIRE(!c.w[0]);
    REQUIRE(!c.w[1]);
    REQUIRE(!c.w[4]);
    REQUIRE(!c.w[5]);
    REQUIRE(S.algebra().flags().nilpotent);
    CHECK(tc.lambda == (tc.f8 - tc.f4) * scalar_of(S.n() - 1, S.n()));
  }
}

TEST_CASE("sigma swap exchanges the mirror classes") {
  Structure S = structure_of("0,0,0,0,0,45");
  CHECK(classify(sigma_swap(S)).text() == "W7");
  for (const char* sal : {"0,0,0,12", "0,0,46,0,12,0", "0,0,0,0,45,46"}) {
    Structure T = structure_of(sal);
    CHECK(classify(sigma_swap(T)) == sigma_swap(classify(T)));
  }
  TorsionClass c;
  c.w[3] = true;
  c.lambda01 = true;
  TorsionClass sw = sigma_swap(c);
  CHECK(sw.w[7]);
  CHECK(!sw.w[3]);
  CHECK(sw.lambda10);
  CHECK(!sw.lambda01);
}

TEST_CASE("products interleave and compose classes") {
  Structure A = structure_of("0,0,0,12");
  Structure P = product(A, standard_structure(abelian(4)));
  CHECK(P.dim() == 8);
  CHECK(classify(P).text() == "W2");
  CHECK(classify(P) == compose_classes(classify(A), TorsionClass{}));

  // the pure-trace blocks spill into the trace-free ones in a product
  TorsionClass w4;
  w4.w[3] = true;
  TorsionClass comp = compose_classes(w4, TorsionClass{});
  CHECK(comp.w[2]);
  CHECK(comp.w[3]);

  Structure B = structure_of("0,0,0,0,45,46");
  CHECK(classify(product(B, A)) == compose_classes(classify(B), classify(A)));
}
