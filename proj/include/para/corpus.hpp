#pragma once

#include <string>
#include <vector>

#include "para/liealg.hpp"
#include "para/scalar.hpp"

namespace para {

/// Root of the data files: the PARATORSION_DATA environment variable when
/// set, otherwise the compiled-in source location.
std::string data_dir();

struct CorpusEntry {
  std::string id;
  std::string file;  // relative to data_dir()
};

/// The regression corpus of worked examples.
const std::vector<CorpusEntry>& corpus_entries();

LieAlgebra load_corpus(const CorpusEntry& e);

/// The one-parameter family (14,25,36, t*14, t*25, t*36).
LieAlgebra einstein_family(const Scalar& t);

/// Frozen regression constants for the family's scalar curvature at
/// t in {-1, 0, 1, 2}; PreconditionError for other samples.
Scalar einstein_family_s(const Scalar& t);

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;  // empty when passed
};

/// Runs the full worked-example regression suite (the corpus facts plus the
/// Einstein family) and reports one result per check group.
std::vector<CheckResult> run_corpus();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace para
