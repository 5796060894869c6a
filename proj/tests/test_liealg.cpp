#include "doctest.h"
#include "para/errors.hpp"
#include "para/liealg.hpp"
#include "test_support.hpp"

using namespace para;

TEST_CASE("salamon strings parse and print back") {
  LieAlgebra L = parse_salamon("0,0,0,12", "n4");
  CHECK(L.dim() == 4);
  CHECK(L.name() == "n4");
  CHECK(L.d1(4) == KForm::basis(4, {1, 2}));
  CHECK(L.d1(1).zero());
  CHECK(L.salamon_text() == "0,0,0,12");

  LieAlgebra W = parse_salamon("0,0,0,-1/3*23,1/3*13,-1/3*12");
  CHECK(W.salamon_text() == "0,0,0,-1/3*23,1/3*13,-1/3*12");

  CHECK_THROWS_AS(parse_salamon("0,0,0,123"), ParseError);
  CHECK_THROWS_AS(parse_salamon("0,0,0,1x"), ParseError);
  CHECK_THROWS_AS(parse_salamon(""), ParseError);
  CHECK_THROWS_WITH_AS(parse_salamon("0,123,0,0"), doctest::Contains("entry 2"), ParseError);
}

TEST_CASE("algebra files: salamon line and d-lines") {
  LieAlgebra A = parse_algebra_source("# comment\nname: heis\nsalamon: 0,0,12\n", "fallback");
  CHECK(A.name() == "heis");
  CHECK(A.dim() == 3);
  CHECK(A.d1(3) == KForm::basis(3, {1, 2}));

  LieAlgebra B = parse_algebra_source("dim: 3\nd e^3 = 12\n", "fallback");
  CHECK(B == A);
  CHECK(B.name() == "fallback");

  CHECK_THROWS_AS(parse_algebra_source("salamon: 0,0,12\nd e^3 = 12\ndim: 3\n", ""), ParseError);
  CHECK_THROWS_AS(parse_algebra_source("", ""), ParseError);
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/path.alg"), ParseError);
}

TEST_CASE("structure constants and brackets") {
  LieAlgebra L = parse_salamon("0,0,0,12");
  // d e^4 (e_1, e_2) = -e^4([e_1, e_2])
  CHECK(L.structure_const(4, 1, 2) == -1);
  CHECK(L.structure_const(4, 2, 1) == 1);
  CHECK(L.structure_const(3, 1, 2) == 0);
  std::vector<Scalar> br = L.bracket(1, 2);
  CHECK(br[3] == -1);
  CHECK(br[0] == 0);
}

TEST_CASE("exterior differential satisfies the Leibniz rule") {
  LieAlgebra L = parse_salamon("24,0,0,0,0,35");
  KForm a = KForm::basis(6, {1}) + KForm::basis(6, {3}) * Scalar(2);
  KForm b = KForm::basis(6, {2, 6}) - KForm::basis(6, {4, 5}) * scalar_of(1, 3);
  CHECK(L.exterior_d(wedge(a, b)) ==
        wedge(L.exterior_d(a), b) - wedge(a, L.exterior_d(b)));
  KForm c = KForm::basis(6, {6});
  CHECK(L.exterior_d(wedge(b, c)) ==
        wedge(L.exterior_d(b), c) + wedge(b, L.exterior_d(c)));
}

TEST_CASE("jacobi identity as d^2 = 0") {
  CHECK(parse_salamon("0,0,0,12").check_jacobi());
  LieAlgebra bad = parse_salamon("23,31,12,14");
  CHECK(!bad.check_jacobi());
  CHECK(bad.exterior_d(bad.d1(4)) == KForm::basis(4, {2, 3, 4}));
}

TEST_CASE("algebra flags") {
  AlgebraFlags heis = parse_salamon("0,0,12").flags();
  CHECK(heis.jacobi);
  CHECK(heis.nilpotent);
  CHECK(heis.unimodular);

  // d e^i = e^{i,i+3} + t-multiples: solvable but not nilpotent, not unimodular
  AlgebraFlags sol = parse_salamon("14,25,36,14,25,36").flags();
  CHECK(sol.jacobi);
  CHECK(!sol.nilpotent);
  CHECK(!sol.unimodular);

  AlgebraFlags w1 = parse_salamon("0,0,0,-1/3*23,1/3*13,-1/3*12").flags();
  CHECK(w1.jacobi);
  CHECK(w1.nilpotent);
  CHECK(w1.unimodular);

  AlgebraFlags ab = para::testing::abelian(4).flags();
  CHECK(ab.jacobi);
  CHECK(ab.nilpotent);
  CHECK(ab.unimodular);
}

TEST_CASE("coframe changes compose and invert") {
  LieAlgebra L = parse_salamon("0,0,46,0,12,0");
  QMatrix M = QMatrix::identity(6);
  M.at(0, 1) = Scalar(2);          // e~^1 = e^1 + 2 e^2
  M.at(3, 5) = scalar_of(-1, 3);   // e~^4 = e^4 - 1/3 e^6
  M.at(4, 4) = Scalar(5);          // e~^5 = 5 e^5
  LieAlgebra Lt = change_coframe(L, M);
  CHECK(Lt.check_jacobi());
  CHECK(change_coframe(Lt, M.inverse()) == L);

  QMatrix singular(6, 6);
  CHECK_THROWS(change_coframe(L, singular));
}

TEST_CASE("coframe substitution is the identity on the identity matrix") {
  KForm a = KForm::basis(6, {1, 4}) * Scalar(3) - KForm::basis(6, {2, 5});
  CHECK(substitute_coframe(a, QMatrix::identity(6)) == a);

  // e^1 |-> e^1 + e^2 turns e^{12} into e^{12}
  QMatrix S = QMatrix::identity(4);
  S.at(0, 1) = Scalar(1);
  CHECK(substitute_coframe(KForm::basis(4, {1, 2}), S) == KForm::basis(4, {1, 2}));
  // ... and e^{13} into e^{13} + e^{23}
  CHECK(substitute_coframe(KForm::basis(4, {1, 3}), S) ==
        KForm::basis(4, {1, 3}) + KForm::basis(4, {2, 3}));
}
