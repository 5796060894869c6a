#pragma once

#include <map>
#include <optional>
#include <string>

#include "para/liealg.hpp"
#include "para/matrix.hpp"

namespace para {

/// Flat, serialization-friendly record of one full analysis run. All exact
/// values are carried as canonical text so they survive JSON unchanged.
struct AnalyzeReport {
  // algebra
  std::string name;
  std::string salamon;
  int dim = 0;
  bool jacobi = false;
  bool nilpotent = false;
  bool unimodular = false;

  // torsion
  std::string torsion_class;
  std::map<std::string, std::string> components;  // tau1..tau8, f4, f8, lambda
  bool paracomplex = false;                       // both eigendistributions integrable
  bool parakahler = false;                        // all eight W parts vanish
  bool strict_nearly_parakahler = false;          // class exactly {W1}

  // curvature (oracle values)
  bool flat = false;
  bool ricci_flat = false;
  bool einstein = false;
  std::string einstein_s;  // the Einstein constant, empty unless einstein
  std::string s;
  std::string ricci;
  std::string riemann;

  // agreement of the torsion-form expressions with the oracle
  bool agree_ric_prime = false;
  bool agree_ric_second = false;
  bool agree_scalar = false;
  bool agree() const { return agree_ric_prime && agree_ric_second && agree_scalar; }

  // meta
  long long elapsed_us = 0;
  std::string version;

  bool operator==(const AnalyzeReport&) const = default;
};

/// Runs the full pipeline: torsion extraction and classification, oracle
/// curvature, the three torsion-form curvature expressions and their
/// comparison with the oracle. PreconditionError on odd dimension or a
/// Jacobi failure. A disagreement is reported, not thrown.
AnalyzeReport analyze(const LieAlgebra& L, const std::optional<QMatrix>& coframe = std::nullopt);

std::string analyze_text(const AnalyzeReport& r);

std::string analyze_json(const AnalyzeReport& r);

/// Inverse of analyze_json; ParseError on malformed input.
AnalyzeReport parse_analyze_json(const std::string& text);

const char* version_string();

}  // namespace para
