#pragma once

#include <string>
#include <vector>

#include "para/kform.hpp"
#include "para/matrix.hpp"

namespace para {

struct AlgebraFlags {
  bool jacobi = false;
  bool nilpotent = false;
  bool unimodular = false;
};

/// A Lie algebra presented through its Chevalley-Eilenberg differential on
/// the dual: d e^K for each coframe element e^K. Structure constants follow
/// from d e^K (e_I, e_J) = -e^K([e_I, e_J]).
class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<KForm> d);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }

  /// d e^K, 1-based, a 2-form.
  const KForm& d1(int K) const { return d_[K - 1]; }

  /// Extends d to arbitrary forms by the Leibniz rule.
  KForm exterior_d(const KForm& a) const;

  /// c^K_{IJ} with [e_I, e_J] = sum_K c^K_{IJ} e_K.
  Scalar structure_const(int K, int I, int J) const;

  /// [e_I, e_J] as a frame-component vector (0-based components).
  std::vector<Scalar> bracket(int I, int J) const;

  /// d^2 = 0, i.e. the Jacobi identity.
  bool check_jacobi() const;

  AlgebraFlags flags() const;

  /// Canonical comma-separated Salamon string of the d e^K entries.
  std::string salamon_text() const;

  bool operator==(const LieAlgebra& rhs) const { return dim_ == rhs.dim_ && d_ == rhs.d_; }

 private:
  std::string name_;
  int dim_;
  std::vector<KForm> d_;
};

/// Parses a comma-separated Salamon string; the number of entries is the
/// dimension. Each entry is "0" or a 2-form expression.
LieAlgebra parse_salamon(const std::string& entries, const std::string& name = "");

/// Parses an algebra file: optional "name:"/"dim:" lines and either one
/// "salamon: <entries>" line or "d e^K = <2-form>" lines; blank lines and
/// '#' comments are ignored.
LieAlgebra parse_algebra_source(const std::string& content, const std::string& fallback_name);

LieAlgebra load_algebra_file(const std::string& path);

/// Rewrites e^a as sum_c S(a,c) * (new coframe)^c in every term of a.
KForm substitute_coframe(const KForm& a, const QMatrix& S);

/// Structure constants in the new coframe e~ = M e; M must be invertible.
LieAlgebra change_coframe(const LieAlgebra& L, const QMatrix& M);

}  // namespace para
