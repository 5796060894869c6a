#include "para/corpus.hpp"

#include <cstdlib>
#include <sstream>

#include "para/curvature.hpp"
#include "para/errors.hpp"
#include "para/report.hpp"
#include "para/ricforms.hpp"
#include "para/torsion.hpp"

#ifndef PARA_DATA_DIR
#define PARA_DATA_DIR "data"
#endif

namespace para {

std::string data_dir() {
  if (const char* env = std::getenv("PARATORSION_DATA")) return env;
  return PARA_DATA_DIR;
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"n4-w2", "corpus/n4-w2.alg"},
      {"pk-ricciflat", "corpus/pk-ricciflat.alg"},
      {"w2w6", "corpus/w2w6.alg"},
      {"w3-flat", "corpus/w3-flat.alg"},
      {"w3-8dim", "corpus/w3-8dim.alg"},
      {"ric-s2h", "corpus/ric-s2h.alg"},
      {"ric-s2v", "corpus/ric-s2v.alg"},
      {"w1-flat", "corpus/w1-flat.alg"},
  };
  return entries;
}

LieAlgebra load_corpus(const CorpusEntry& e) { return load_algebra_file(data_dir() + "/" + e.file); }

LieAlgebra einstein_family(const Scalar& t) {
  std::vector<KForm> d;
  for (int i = 1; i <= 3; ++i) {
    KForm f(6, 2);
    f.add_term({i, i + 3}, Scalar(1));
    d.push_back(f);
  }
  for (int i = 1; i <= 3; ++i) {
    KForm f(6, 2);
    f.add_term({i, i + 3}, t);
    d.push_back(f);
  }
  return LieAlgebra("einstein-family(t=" + rational_text(t) + ")", std::move(d));
}

Scalar einstein_family_s(const Scalar& t) {
  // Regression constants, fixed from the Levi-Civita oracle.
  if (t == Scalar(-1)) return Scalar(-2);
  if (t == Scalar(0)) return Scalar(0);
  if (t == Scalar(1)) return Scalar(2);
  if (t == Scalar(2)) return Scalar(4);
  throw PreconditionError("einstein_family_s: no frozen constant for t = " + rational_text(t));
}

namespace {

struct Checker {
  std::vector<CheckResult> results;
  std::string current;
  std::ostringstream fails;
  bool ok = true;

  void begin(const std::string& id) {
    current = id;
    fails.str("");
    ok = true;
  }
  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!fails.str().empty()) fails << "; ";
      fails << what;
    }
  }
  void end() { results.push_back({current, ok, fails.str()}); }
  void fail_exception(const std::string& what) {
    results.push_back({current, false, "exception: " + what});
  }
};

Tensor riemann_term(int dim, IdxTuple t, const Scalar& c) {
  Tensor R(dim, {{Sym::alternating, 2}, {Sym::alternating, 2}}, 4, 0);
  R.add_term(std::move(t), c);
  return R;
}

}  // namespace

std::vector<CheckResult> run_corpus() {
  Checker ck;

  auto analyzed = [&](const std::string& id) {
    for (const CorpusEntry& e : corpus_entries())
      if (e.id == id) return load_corpus(e);
    throw PreconditionError("run_corpus: unknown corpus id " + id);
  };

  // (0,0,0,12): class W2, Ricci-flat, flat, not paracomplex-integrable.
  ck.begin("n4-w2");
  try {
    LieAlgebra L = analyzed("n4-w2");
    AnalyzeReport r = analyze(L);
    ck.expect(r.torsion_class == "W2", "class is " + r.torsion_class + ", want W2");
    ck.expect(r.ricci_flat, "not Ricci-flat");
    ck.expect(r.flat, "not flat");
    ck.expect(!r.paracomplex, "reported paracomplex");
    ck.expect(r.nilpotent && r.unimodular, "not nilpotent unimodular");
    ck.expect(r.agree(), "formula/oracle disagreement");
    ck.end();
  } catch (const std::exception& e) {
    ck.fail_exception(e.what());
  }

  // (24,0,0,0,0,35): parakahler, Ricci-flat, curvature -e^{34}(x)e^{34}.
  ck.begin("pk-ricciflat");
  try {
    LieAlgebra L = analyzed("pk-ricciflat");
    AnalyzeReport r = analyze(L);
    ck.expect(r.parakahler, "not parakahler");
    ck.expect(r.torsion_class == "0", "class is " + r.torsion_class + ", want 0");
    ck.expect(r.ricci_flat, "not Ricci-flat");
    ck.expect(!r.flat, "reported flat");
    Structure S = standard_structure(L);
    ck.expect(riemann(S) == riemann_term(6, {3, 4, 3, 4}, Scalar(-1)),
              "riemann is not -34(x)34");
    ck.expect(r.agree(), "formula/oracle disagreement");
    ck.end();
  } catch (const std::exception& e) {
    ck.fail_exception(e.what());
  }

  // (0,0,46,0,12,0): tau2 and tau6 as printed, Ricci-flat, curvature 26(x)26.
  ck.begin("w2w6");
  try {
    LieAlgebra L = analyzed("w2w6");
    AnalyzeReport r = analyze(L);
    Structure S = standard_structure(L);
    TorsionComponents tc = intrinsic_torsion(S);
    Tensor t2 = torsion_block(6, 3);
    t2.add_term({2, 1, 2}, Scalar(1));
    Tensor t6 = torsion_block(6, 1);
    t6.add_term({6, 4, 6}, Scalar(1));
    ck.expect(tc.tau2 == t2, "tau2 is " + torsion_text(tc.tau2) + ", want 2(x)12");
    ck.expect(tc.tau6 == t6, "tau6 is " + torsion_text(tc.tau6) + ", want 6(x)46");
    ck.expect(r.torsion_class == "W2+W6", "class is " + r.torsion_class + ", want W2+W6");
    ck.expect(r.ricci_flat, "not Ricci-flat");
    ck.expect(riemann(S) == riemann_term(6, {2, 6, 2, 6}, Scalar(1)), "riemann is not 26(x)26");
    ck.expect(r.agree(), "formula/oracle disagreement");
    ck.end();
  } catch (const std::exception& e) {
    ck.fail_exception(e.what());
  }

  // (0,0,0,0,0,45): class W3, flat.
  ck.begin("w3-flat");
  try {
    AnalyzeReport r = analyze(analyzed("w3-flat"));
    ck.expect(r.torsion_class == "W3", "class is " + r.torsion_class + ", want W3");
    ck.expect(r.flat, "not flat");
    ck.expect(r.agree(), "formula/oracle disagreement");
    ck.end();
  } catch (const std::exception& e) {
    ck.fail_exception(e.what());
  }

  // (0,0,0,0,0,0,56,57): class W3, Ricci-flat, curvature -1/4 56 (.) 45.
  ck.begin("w3-8dim");
  try {
    LieAlgebra L = analyzed("w3-8dim");
    AnalyzeReport r = analyze(L);
    ck.expect(r.torsion_class == "W3", "class is " + r.torsion_class + ", want W3");
    ck.expect(r.ricci_flat, "not Ricci-flat");
    Tensor R(8, {{Sym::alternating, 2}, {Sym::alternating, 2}}, 4, 0);
    R.add_term({5, 6, 4, 5}, scalar_of(-1, 4));
    R.add_term({4, 5, 5, 6}, scalar_of(-1, 4));
    ck.expect(riemann(standard_structure(L)) == R, "riemann is not -1/4 56(.)45");
    ck.expect(r.agree(), "formula/oracle disagreement");
    ck.end();
  } catch (const std::exception& e) {
    ck.fail_exception(e.what());
  }

  // (0,0,0,0,45,46): Ricci = -e^4(x)e^4.
  ck.begin("ric-s2h");
  try {
    LieAlgebra L = analyzed("ric-s2h");
    AnalyzeReport r = analyze(L);
    QMatrix want(6, 6);
    want.at(3, 3) = Scalar(-1);
    ck.expect(ricci_matrix_oracle(standard_structure(L)) == want, "ricci is not -4(x)4");
    ck.expect(r.agree(), "formula/oracle disagreement");
    ck.end();
  } catch (const std::exception& e) {
    ck.fail_exception(e.what());
  }

  // (-14,0,0,0,45,46): Ricci = +e^4(x)e^4, living in the S^2 V block.
  ck.begin("ric-s2v");
  try {
    LieAlgebra L = analyzed("ric-s2v");
    AnalyzeReport r = analyze(L);
    QMatrix want(6, 6);
    want.at(3, 3) = Scalar(1);
    QMatrix got = ricci_matrix_oracle(standard_structure(L));
    ck.expect(got == want, "ricci is not 4(x)4");
    bool hh_only = true;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (!is_zero(got.at(i, j)) && (i < 3 || j < 3)) hh_only = false;
    ck.expect(hh_only, "ricci has components outside the S^2 V block");
    ck.expect(r.agree(), "formula/oracle disagreement");
    ck.end();
  } catch (const std::exception& e) {
    ck.fail_exception(e.what());
  }

  // (0,0,0,-1/3*23,1/3*13,-1/3*12): flat, class W1.
  ck.begin("w1-flat");
  try {
    AnalyzeReport r = analyze(analyzed("w1-flat"));
    ck.expect(r.torsion_class == "W1", "class is " + r.torsion_class + ", want W1");
    ck.expect(r.flat, "not flat");
    ck.expect(r.agree(), "formula/oracle disagreement");
    ck.end();
  } catch (const std::exception& e) {
    ck.fail_exception(e.what());
  }

  // Einstein family: Einstein for t in {-1,0,1,2}, Ricci-flat exactly at 0,
  // scalar curvature matching the frozen constants.
  for (const Scalar& t : {Scalar(-1), Scalar(0), Scalar(1), Scalar(2)}) {
    ck.begin("einstein-family(t=" + rational_text(t) + ")");
    try {
      AnalyzeReport r = analyze(einstein_family(t));
      ck.expect(r.einstein, "not Einstein");
      ck.expect(r.ricci_flat == (t == Scalar(0)), "Ricci-flat verdict wrong");
      ck.expect(r.s == rational_text(einstein_family_s(t)),
                "s is " + r.s + ", want " + rational_text(einstein_family_s(t)));
      ck.expect(r.agree(), "formula/oracle disagreement");
      if (t == Scalar(1)) {
        ck.expect(r.parakahler, "t=1 member is not parakahler");
        ck.expect(r.s != "0", "t=1 member has s = 0");
      }
      ck.end();
    } catch (const std::exception& e) {
      ck.fail_exception(e.what());
    }
  }

  return ck.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace para
