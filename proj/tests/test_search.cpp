#include "doctest.h"
#include "para/corpus.hpp"
#include "para/curvature.hpp"
#include "para/errors.hpp"
#include "para/search.hpp"
#include "test_support.hpp"

using namespace para;
using para::testing::abelian;

namespace {

std::string table1() { return data_dir() + "/table1.alg"; }

}  // namespace

TEST_CASE("coordinate splitting produces the identity coframe") {
  SplittingCandidate C = coordinate_splitting(4);
  CHECK(splitting_coframe(C) == QMatrix::identity(8));

  SplittingCandidate bad = C;
  bad.H_basis = C.V_basis;  // rows no longer independent
  CHECK_THROWS_AS(splitting_coframe(bad), PreconditionError);
}

TEST_CASE("family rows parse with parameter substitution") {
  LieAlgebra L = parse_family("0,0,-L*18,0,-M*23+L*78,M*13,-M*12+L*M*38,0", Scalar(1), Scalar(1),
                              Scalar(0), "row1");
  CHECK(L.dim() == 8);
  CHECK(L.check_jacobi());
  CHECK(L.d1(3) == -KForm::basis(8, {1, 8}));

  CHECK(parse_family("0,0,K*L*18,0,0,0,0,0", Scalar(1), Scalar(1), Scalar(0), "t").d1(3).zero());
  CHECK(parse_family("0,0,-L*18,0,0,0,0,0", Scalar(2), Scalar(1), Scalar(0), "t").d1(3) ==
        KForm::basis(8, {1, 8}) * Scalar(-2));

  LieAlgebra row3 = load_family(table1(), 3, Scalar(1), Scalar(2), Scalar(-1));
  CHECK(row3.check_jacobi());
  CHECK_THROWS(load_family(table1(), 99, Scalar(1), Scalar(1), Scalar(0)));
}

TEST_CASE("reduction conditions on the first family row") {
  LieAlgebra L = load_family(table1(), 1, Scalar(1), Scalar(1), Scalar(0));
  NHConditions c = nh_conditions(L, coordinate_splitting(4));
  CHECK(c.h_subalgebra);
  CHECK(c.rank3);
  CHECK(c.simple_image);
  CHECK(c.no_common_factor);
  CHECK(c.dalpha_type_ok);
  CHECK(c.all());
  CHECK(!c.non_simple_witness.has_value());
}

TEST_CASE("reduction conditions reject degenerate inputs") {
  NHConditions ab = nh_conditions(abelian(8), coordinate_splitting(4));
  CHECK(ab.h_subalgebra);
  CHECK(!ab.rank3);

  // image spanned by a non-simple two-form
  NHConditions ns = nh_conditions(parse_salamon("0,0,0,0,12+34,0,0,0"), coordinate_splitting(4));
  CHECK(!ns.simple_image);
  REQUIRE(ns.non_simple_witness.has_value());
  CHECK(ns.non_simple_witness->text() == "-4*12-4*34");
  CHECK(!wedge(*ns.non_simple_witness, *ns.non_simple_witness).zero());
}

TEST_CASE("adapted coframe normalizes the vertical nijenhuis block") {
  LieAlgebra L = load_family(table1(), 1, Scalar(1), Scalar(1), Scalar(0));
  QMatrix M = adapt_coframe(L, coordinate_splitting(4));
  LieAlgebra adapted = change_coframe(L, M);
  TorsionComponents tc = intrinsic_torsion(standard_structure(adapted));
  CHECK(tc.tau2.zero());
  CHECK(tc.tau5.zero());
  CHECK(tc.tau6.zero());
}

TEST_CASE("the F-space of the first family row") {
  LieAlgebra L = load_family(table1(), 1, Scalar(1), Scalar(1), Scalar(0));
  QMatrix M = adapt_coframe(L, coordinate_splitting(4));
  std::vector<KForm> basis = solve_F_space(L, M);
  CHECK(basis.size() == 5);

  KForm F(8, 2);
  for (int i = 1; i <= 4; ++i) F.add_term({i, 4 + i}, Scalar(1));
  CHECK(in_span(basis, F));
  CHECK(!in_span(basis, KForm::basis(8, {1, 6})));
}

TEST_CASE("nondegenerate witnesses come in deterministic order") {
  std::vector<KForm> basis = {KForm::basis(4, {1, 3}), KForm::basis(4, {2, 4})};
  WitnessResult w = find_nondegenerate(basis, 2);
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->text() == "-13-24");
  CHECK(!w.inconclusive);

  // a single degenerate generator: exhausted, not inconclusive
  WitnessResult none = find_nondegenerate({KForm::basis(4, {1, 3})}, 2);
  CHECK(!none.witness.has_value());
  CHECK(!none.inconclusive);

  std::vector<KForm> samples = nondegenerate_samples(basis, 2, 4);
  REQUIRE(samples.size() == 4);
  CHECK(samples[0].text() == "-13-24");
  for (const KForm& s : samples) CHECK(!wedge(s, s).zero());

  CHECK(in_span(basis, *w.witness));
  CHECK(!in_span({KForm::basis(4, {1, 3})}, KForm::basis(4, {2, 4})));
}

TEST_CASE("absorbing a nondegenerate F recovers an adapted structure") {
  LieAlgebra n4 = parse_salamon("0,0,0,12");
  KForm F(4, 2);
  F.add_term({1, 3}, Scalar(2));
  F.add_term({2, 4}, Scalar(1));
  CHECK(absorb_F(n4, F).salamon_text() == "0,0,0,12");

  KForm off(4, 2);  // F with an off-diagonal coefficient matrix
  off.add_term({1, 4}, Scalar(1));
  off.add_term({2, 3}, Scalar(1));
  LieAlgebra ab = absorb_F(abelian(4), off);
  CHECK(ab.check_jacobi());

  KForm wrong_type(4, 2);
  wrong_type.add_term({1, 2}, Scalar(1));
  CHECK_THROWS_AS(absorb_F(abelian(4), wrong_type), PreconditionError);
}

TEST_CASE("full pipeline on the first family row") {
  LieAlgebra L = load_family(table1(), 1, Scalar(1), Scalar(1), Scalar(0));
  SearchReport rep = run_search(L, coordinate_splitting(4));
  CHECK(rep.conditions.all());
  CHECK(rep.F_space_basis.size() == 5);
  REQUIRE(rep.nondegenerate_witness.has_value());
  CHECK(rep.nondegenerate_witness->text() == "-15-18-26-28-37-38-48");
  REQUIRE(rep.verified_class.has_value());
  CHECK(rep.verified_class->text() == "W1");
  CHECK(rep.verified_ricci_flat);
  CHECK(rep.verified);
  CHECK(!rep.inconclusive);
}

TEST_CASE("family verification verdicts and errors") {
  FamilyCheck fc = verify_family(table1(), 1, Scalar(1), Scalar(1), Scalar(0));
  CHECK(fc.jacobi);
  CHECK(fc.nilpotent);
  CHECK(fc.cls.text() == "W1");
  CHECK(fc.tau1_nonzero);
  CHECK(fc.ricci_flat_oracle);
  CHECK(fc.ricci_flat_formula);
  CHECK(fc.riemann_nonzero);
  CHECK(fc.all());

  CHECK_THROWS_AS(verify_family(table1(), 1, Scalar(1), Scalar(0), Scalar(0)), PreconditionError);
  CHECK_THROWS_AS(verify_family(table1(), 1, Scalar(0), Scalar(1), Scalar(0)), PreconditionError);
}
