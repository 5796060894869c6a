#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "para/corpus.hpp"
#include "para/curvature.hpp"
#include "para/errors.hpp"
#include "para/liealg.hpp"
#include "para/report.hpp"
#include "para/ricforms.hpp"
#include "para/search.hpp"
#include "para/torsion.hpp"

namespace {

using namespace para;

/// Inline Salamon string, path to an algebra file, or the shorthand
/// "abelian"/"abelian-<dim>" (bare "abelian" is 4-dimensional).
LieAlgebra input_algebra(const std::string& input) {
  if (input == "abelian" || input.rfind("abelian-", 0) == 0) {
    int dim = 4;
    if (input.size() > 7) {
      const std::string suffix = input.substr(8);
      if (suffix.empty() || suffix.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("abelian-<dim>: bad dimension '" + suffix + "'");
      dim = std::stoi(suffix);
      if (dim <= 0) throw ParseError("abelian-<dim>: dimension must be positive");
    }
    return LieAlgebra(input, std::vector<KForm>(dim, KForm(dim, 2)));
  }
  if (std::filesystem::exists(input)) return load_algebra_file(input);
  return parse_salamon(input, input);
}

struct Params {
  Scalar lambda = Scalar(1);
  Scalar mu = Scalar(1);
  Scalar k = Scalar(0);
};

Params parse_params(const std::string& text) {
  Params p;
  if (text.empty()) return p;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t eq = piece.find('=');
    if (eq == std::string::npos)
      throw ParseError("--params: expected key=value, got '" + piece + "'");
    std::string key = piece.substr(0, eq);
    Scalar value = parse_rational(piece.substr(eq + 1));
    if (key == "\xce\xbb" || key == "lambda" || key == "l" || key == "L")
      p.lambda = value;
    else if (key == "\xce\xbc" || key == "mu" || key == "m" || key == "M")
      p.mu = value;
    else if (key == "k" || key == "K")
      p.k = value;
    else
      throw ParseError("--params: unknown parameter '" + key + "'");
  }
  return p;
}

int cmd_check(const std::string& input) {
  LieAlgebra L = input_algebra(input);
  AlgebraFlags fl = L.flags();
  std::cout << "algebra    " << (L.name().empty() ? "(unnamed)" : L.name()) << "\n"
            << "salamon    (" << L.salamon_text() << ")\n"
            << "dim        " << L.dim() << "\n"
            << "jacobi     " << (fl.jacobi ? "yes" : "no") << "\n"
            << "nilpotent  " << (fl.nilpotent ? "yes" : "no") << "\n"
            << "unimodular " << (fl.unimodular ? "yes" : "no") << "\n";
  if (!fl.jacobi) {
    for (int K = 1; K <= L.dim(); ++K) {
      KForm d2 = L.exterior_d(L.d1(K));
      if (!d2.zero()) {
        std::cout << "jacobi witness: d2 e^" << K << " = " << d2.text() << "\n";
        break;
      }
    }
    return 1;
  }
  return 0;
}

int cmd_analyze(const std::string& input, bool json, const std::string& coframe) {
  LieAlgebra L = input_algebra(input);
  std::optional<QMatrix> M;
  if (!coframe.empty()) {
    if (coframe != "neg-V")
      throw ParseError("--coframe: unknown value '" + coframe + "' (supported: neg-V)");
    if (L.dim() % 2 != 0)
      throw PreconditionError("--coframe neg-V needs an even dimension");
    QMatrix m = QMatrix::identity(L.dim());
    for (int i = 0; i < L.dim() / 2; ++i) m.at(i, i) = Scalar(-1);
    M = m;
  }
  AnalyzeReport r = analyze(L, M);
  std::cout << (json ? analyze_json(r) : analyze_text(r));
  return r.agree() ? 0 : 1;
}

void print_search_report(const SearchReport& rep, const std::string& label) {
  const NHConditions& c = rep.conditions;
  std::cout << label << ": h-subalgebra " << (c.h_subalgebra ? "yes" : "no") << ", rank3 "
            << (c.rank3 ? "yes" : "no") << ", simple-image " << (c.simple_image ? "yes" : "no")
            << ", no-common-factor " << (c.no_common_factor ? "yes" : "no") << ", d-type "
            << (c.dalpha_type_ok ? "yes" : "no") << "\n";
  if (c.non_simple_witness)
    std::cout << "  non-simple witness eta = " << c.non_simple_witness->text() << "\n";
  if (!c.all()) return;
  std::cout << "  F-space dimension " << rep.F_space_basis.size() << "\n";
  for (const KForm& b : rep.F_space_basis) std::cout << "    " << b.text() << "\n";
  if (rep.nondegenerate_witness) {
    std::cout << "  nondegenerate F = " << rep.nondegenerate_witness->text() << "\n";
    std::cout << "  class " << rep.verified_class->text() << ", ricci-flat "
              << (rep.verified_ricci_flat ? "yes" : "no") << ", verified "
              << (rep.verified ? "yes" : "no") << "\n";
  } else if (rep.inconclusive) {
    std::cout << "  nondegeneracy search inconclusive (cap reached)\n";
  } else {
    std::cout << "  no nondegenerate element (space is degenerate)\n";
  }
}

/// Family-style input for `search`: a file of parameterized rows, a corpus
/// algebra file, or an inline Salamon string.
LieAlgebra search_input(const std::string& input, int family, const Params& p) {
  if (!std::filesystem::exists(input))
    return parse_family(input, p.lambda, p.mu, p.k, input);
  std::ifstream in(input);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.find("salamon:") != std::string::npos || content.find("d e^") != std::string::npos)
    return load_algebra_file(input);
  return load_family(input, family, p.lambda, p.mu, p.k);
}

int cmd_search(const std::string& input, int family, const std::string& params,
               const std::string& splitting, int max_norm, long cap, bool verify) {
  Params p = parse_params(params);
  WitnessOptions opt;
  opt.max_norm = max_norm;
  opt.max_candidates = cap;

  if (verify) {
    FamilyCheck fc = verify_family(input, family, p.lambda, p.mu, p.k);
    std::cout << "family " << family << ": jacobi " << (fc.jacobi ? "yes" : "no") << ", nilpotent "
              << (fc.nilpotent ? "yes" : "no") << ", class " << fc.cls.text() << ", tau1 "
              << (fc.tau1_nonzero ? "nonzero" : "zero") << ", ricci-flat oracle "
              << (fc.ricci_flat_oracle ? "yes" : "no") << ", ricci-flat formula "
              << (fc.ricci_flat_formula ? "yes" : "no") << ", riemann "
              << (fc.riemann_nonzero ? "nonzero" : "zero") << "\n";
    std::cout << (fc.all() ? "verified" : "NOT verified") << "\n";
    return fc.all() ? 0 : 1;
  }

  LieAlgebra L = search_input(input, family, p);
  if (L.dim() % 2 != 0)
    throw PreconditionError("search: the algebra dimension must be even");
  int n = L.dim() / 2;

  std::vector<SplittingCandidate> candidates;
  std::vector<std::string> labels;
  if (splitting == "coords" || splitting.empty()) {
    candidates.push_back(coordinate_splitting(n));
    labels.push_back("coordinate splitting");
  } else if (splitting.rfind("file:", 0) == 0) {
    std::string path = splitting.substr(5);
    std::ifstream in(path);
    if (!in) throw ParseError("--splitting file: cannot open '" + path + "'");
    SplittingCandidate C;
    C.V_basis = QMatrix(n, 2 * n);
    C.H_basis = QMatrix(n, 2 * n);
    for (int r = 0; r < 2 * n; ++r)
      for (int c = 0; c < 2 * n; ++c) {
        std::string tok;
        if (!(in >> tok))
          throw ParseError("--splitting file: expected " + std::to_string(4 * n * n) +
                           " entries (2n rows of 2n)");
        Scalar v = parse_rational(tok);
        if (r < n)
          C.V_basis.at(r, c) = v;
        else
          C.H_basis.at(r - n, c) = v;
      }
    candidates.push_back(C);
    labels.push_back("splitting from " + path);
  } else if (splitting.rfind("enum:", 0) == 0) {
    long bound = std::stol(splitting.substr(5));
    // Coordinate-subset splittings: V spanned by an n-subset of the frame,
    // H by the complement, in lexicographic subset order, capped at the
    // bound.
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = i;
    long produced = 0;
    while (true) {
      if (produced >= bound) break;
      SplittingCandidate C;
      C.V_basis = QMatrix(n, 2 * n);
      C.H_basis = QMatrix(n, 2 * n);
      std::vector<bool> inV(2 * n, false);
      for (int i = 0; i < n; ++i) inV[pick[i]] = true;
      for (int i = 0; i < n; ++i) C.V_basis.at(i, pick[i]) = Scalar(1);
      int h = 0;
      for (int j = 0; j < 2 * n; ++j)
        if (!inV[j]) C.H_basis.at(h++, j) = Scalar(1);
      candidates.push_back(C);
      std::ostringstream lbl;
      lbl << "V = <";
      for (int i = 0; i < n; ++i) lbl << (i ? "," : "") << "e" << pick[i] + 1;
      lbl << ">";
      labels.push_back(lbl.str());
      ++produced;
      // next n-subset of {0..2n-1}
      int i = n - 1;
      while (i >= 0 && pick[i] == n + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
  } else {
    throw ParseError("--splitting: expected coords, file:<path> or enum:<bound>");
  }

  int verified = 0;
  bool any_inconclusive = false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    SearchReport rep = run_search(L, candidates[i], opt);
    print_search_report(rep, labels[i]);
    if (rep.verified) ++verified;
    if (rep.inconclusive) any_inconclusive = true;
  }
  std::cout << "summary: " << candidates.size() << " candidate(s), " << verified
            << " verified nearly-parakahler reduction(s)"
            << (any_inconclusive ? ", some witness searches inconclusive" : "") << "\n";
  return 0;
}

int cmd_product(const std::string& a, const std::string& b, bool json) {
  LieAlgebra LA = input_algebra(a);
  LieAlgebra LB = input_algebra(b);
  if (LA.dim() % 2 != 0 || LB.dim() % 2 != 0)
    throw PreconditionError("product: both factors must have even dimension");
  if (!LA.check_jacobi() || !LB.check_jacobi())
    throw PreconditionError("product: both factors must satisfy the Jacobi identity");
  Structure SA = standard_structure(LA);
  Structure SB = standard_structure(LB);
  TorsionClass ca = classify(SA);
  TorsionClass cb = classify(SB);
  Structure P = product(SA, SB);
  AnalyzeReport r = analyze(P.algebra());
  TorsionClass expected = compose_classes(ca, cb);
  if (r.torsion_class != expected.text())
    throw MathError("product: class " + r.torsion_class + " does not match compose_classes " +
                    expected.text());
  std::cout << (json ? analyze_json(r) : analyze_text(r));
  return r.agree() ? 0 : 1;
}

int cmd_corpus() {
  std::vector<CheckResult> results = run_corpus();
  for (const CheckResult& r : results)
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id
              << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
  std::cout << "corpus: " << results.size() << " checks, "
            << (all_passed(results) ? "all passed" : "FAILURES") << "\n";
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paratorsion: intrinsic torsion and curvature of left-invariant"
               " almost parahermitian structures, in exact arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", para::version_string());

  std::string input, input_b, coframe, params, splitting = "coords";
  int family = 1, max_norm = 2;
  long cap = 200000;
  bool json = false, verify = false;

  CLI::App* check = app.add_subcommand("check", "Jacobi, nilpotency and unimodularity");
  check->add_option("input", input, "Salamon string or algebra file")->required();

  CLI::App* an = app.add_subcommand("analyze", "full torsion and curvature report");
  an->add_option("input", input, "Salamon string or algebra file")->required();
  an->add_flag("--json", json, "emit the JSON report");
  an->add_option("--coframe", coframe, "alternative adapted coframe (neg-V)");

  CLI::App* se = app.add_subcommand("search", "nearly-parakahler reduction search");
  se->add_option("input", input, "Salamon string, algebra file or family file")->required();
  se->add_option("--family", family, "row of a family file (1-based)");
  se->add_option("--params", params, "family parameters, e.g. l=1,m=1,k=0");
  se->add_option("--splitting", splitting, "coords | file:<path> | enum:<bound>");
  se->add_option("--max-norm", max_norm, "nondegeneracy witness coefficient bound");
  se->add_option("--cap", cap, "nondegeneracy witness candidate cap");
  se->add_flag("--verify", verify, "run the full family verification instead of the search");

  CLI::App* pr = app.add_subcommand("product", "analyze the product of two algebras");
  pr->add_option("inputA", input, "first factor")->required();
  pr->add_option("inputB", input_b, "second factor")->required();
  pr->add_flag("--json", json, "emit the JSON report");

  app.add_subcommand("corpus", "run the worked-example regression suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(input);
    if (an->parsed()) return cmd_analyze(input, json, coframe);
    if (se->parsed()) return cmd_search(input, family, params, splitting, max_norm, cap, verify);
    if (pr->parsed()) return cmd_product(input, input_b, json);
    return cmd_corpus();
  } catch (const para::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const para::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
