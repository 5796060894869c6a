#include "para/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

#include "para/curvature.hpp"
#include "para/errors.hpp"
#include "para/pstruct.hpp"
#include "para/ricforms.hpp"
#include "para/torsion.hpp"

namespace para {

const char* version_string() { return "paratorsion 1.0.0"; }

AnalyzeReport analyze(const LieAlgebra& L, const std::optional<QMatrix>& coframe) {
  auto t0 = std::chrono::steady_clock::now();
  if (L.dim() % 2 != 0)
    throw PreconditionError("analyze: the algebra dimension must be even, got " +
                            std::to_string(L.dim()));
  if (!L.check_jacobi())
    throw PreconditionError("analyze: the entries do not satisfy the Jacobi identity");

  AnalyzeReport r;
  r.version = version_string();
  r.name = L.name();
  r.salamon = L.salamon_text();
  r.dim = L.dim();
  AlgebraFlags fl = L.flags();
  r.jacobi = fl.jacobi;
  r.nilpotent = fl.nilpotent;
  r.unimodular = fl.unimodular;

  Structure S = standard_structure(L, coframe);
  TorsionComponents tc = intrinsic_torsion(S);
  TorsionClass cls = classify(tc, S.n());
  r.torsion_class = cls.text();
  for (int k = 1; k <= 8; ++k) r.components["tau" + std::to_string(k)] = torsion_text(tc.tau(k));
  r.components["f4"] = tc.f4.text();
  r.components["f8"] = tc.f8.text();
  r.components["lambda"] = tc.lambda.text();
  r.paracomplex = !cls.w[0] && !cls.w[1] && !cls.w[4] && !cls.w[5];
  TorsionClass none;
  r.parakahler = cls.within(none);
  TorsionClass w1only;
  w1only.w[0] = true;
  r.strict_nearly_parakahler = cls.w[0] && cls.within(w1only) && !cls.lambda10 && !cls.lambda01;

  CurvatureReport cr = curvature_report(S);
  r.flat = cr.flat;
  r.ricci_flat = cr.ricci_flat;
  r.einstein = cr.einstein.has_value();
  if (cr.einstein) r.einstein_s = rational_text(*cr.einstein);
  r.s = rational_text(cr.s);
  r.ricci = sym2_text(cr.ricci);
  r.riemann = riemann_text(cr.riemann, S.dim());

  r.agree_ric_prime =
      ricci_prime_formula(S, tc) == ricci_prime_oracle_form(S, cr.ricci_matrix);
  auto second = ricci_second_formula(S, tc);
  auto second_oracle = ricci_second_oracle_blocks(S, cr.ricci_matrix);
  r.agree_ric_second =
      second.first == second_oracle.first && second.second == second_oracle.second;
  r.agree_scalar = scalar_formula(S, tc) == cr.s;

  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
  return r;
}

std::string analyze_text(const AnalyzeReport& r) {
  std::ostringstream os;
  os << "algebra    " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
  os << "salamon    (" << r.salamon << ")\n";
  os << "dim " << r.dim << "  jacobi " << (r.jacobi ? "yes" : "no") << "  nilpotent "
     << (r.nilpotent ? "yes" : "no") << "  unimodular " << (r.unimodular ? "yes" : "no") << "\n";
  os << "class      " << r.torsion_class;
  if (r.parakahler) os << "  (parakahler)";
  if (r.strict_nearly_parakahler) os << "  (strictly nearly parakahler)";
  if (!r.parakahler && r.paracomplex) os << "  (paracomplex)";
  os << "\n";
  for (int k = 1; k <= 8; ++k) {
    std::string key = "tau" + std::to_string(k);
    auto it = r.components.find(key);
    if (it != r.components.end() && it->second != "0") os << "  " << key << "  " << it->second << "\n";
  }
  for (const char* key : {"f4", "f8", "lambda"}) {
    auto it = r.components.find(key);
    if (it != r.components.end() && it->second != "0") os << "  " << key << "  " << it->second << "\n";
  }
  os << "ricci      " << r.ricci << "\n";
  os << "riemann    " << r.riemann << "\n";
  os << "scalar s   " << r.s << "\n";
  os << "flat " << (r.flat ? "yes" : "no") << "  ricci-flat " << (r.ricci_flat ? "yes" : "no")
     << "  einstein " << (r.einstein ? ("yes, s = " + r.einstein_s) : std::string("no")) << "\n";
  os << "agreement  ric' " << (r.agree_ric_prime ? "ok" : "MISMATCH") << ", ric'' "
     << (r.agree_ric_second ? "ok" : "MISMATCH") << ", s "
     << (r.agree_scalar ? "ok" : "MISMATCH") << "\n";
  os << "elapsed    " << r.elapsed_us << " us\n";
  return os.str();
}

std::string analyze_json(const AnalyzeReport& r) {
  nlohmann::json j;
  j["algebra"] = {{"name", r.name},       {"salamon", r.salamon},
                  {"dim", r.dim},         {"jacobi", r.jacobi},
                  {"nilpotent", r.nilpotent}, {"unimodular", r.unimodular}};
  j["torsion"] = {{"class", r.torsion_class},
                  {"components", r.components},
                  {"paracomplex", r.paracomplex},
                  {"parakahler", r.parakahler},
                  {"strict_nearly_parakahler", r.strict_nearly_parakahler}};
  j["curvature"] = {{"flat", r.flat},         {"ricci_flat", r.ricci_flat},
                    {"einstein", r.einstein}, {"einstein_s", r.einstein_s},
                    {"s", r.s},               {"ricci", r.ricci},
                    {"riemann", r.riemann}};
  j["agreement"] = {{"ric_prime", r.agree_ric_prime},
                    {"ric_second", r.agree_ric_second},
                    {"scalar", r.agree_scalar}};
  j["meta"] = {{"elapsed_us", r.elapsed_us}, {"version", r.version}};
  return j.dump(2) + "\n";
}

AnalyzeReport parse_analyze_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parse_analyze_json: ") + e.what());
  }
  AnalyzeReport r;
  try {
    const auto& a = j.at("algebra");
    r.name = a.at("name").get<std::string>();
    r.salamon = a.at("salamon").get<std::string>();
    r.dim = a.at("dim").get<int>();
    r.jacobi = a.at("jacobi").get<bool>();
    r.nilpotent = a.at("nilpotent").get<bool>();
    r.unimodular = a.at("unimodular").get<bool>();
    const auto& t = j.at("torsion");
    r.torsion_class = t.at("class").get<std::string>();
    r.components = t.at("components").get<std::map<std::string, std::string>>();
    r.paracomplex = t.at("paracomplex").get<bool>();
    r.parakahler = t.at("parakahler").get<bool>();
    r.strict_nearly_parakahler = t.at("strict_nearly_parakahler").get<bool>();
    const auto& c = j.at("curvature");
    r.flat = c.at("flat").get<bool>();
    r.ricci_flat = c.at("ricci_flat").get<bool>();
    r.einstein = c.at("einstein").get<bool>();
    r.einstein_s = c.at("einstein_s").get<std::string>();
    r.s = c.at("s").get<std::string>();
    r.ricci = c.at("ricci").get<std::string>();
    r.riemann = c.at("riemann").get<std::string>();
    const auto& g = j.at("agreement");
    r.agree_ric_prime = g.at("ric_prime").get<bool>();
    r.agree_ric_second = g.at("ric_second").get<bool>();
    r.agree_scalar = g.at("scalar").get<bool>();
    const auto& m = j.at("meta");
    r.elapsed_us = m.at("elapsed_us").get<long long>();
    r.version = m.at("version").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parse_analyze_json: missing or ill-typed field: ") + e.what());
  }
  return r;
}

}  // namespace para
