#pragma once

#include <optional>

#include "para/pstruct.hpp"

namespace para {

/// Levi-Civita connection of the neutral metric, from the Koszul formula
/// specialized to left-invariant fields:
///   2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
/// This class is the oracle side of the library: it only uses structure
/// constants and the metric, none of the torsion machinery.
class LeviCivita {
 public:
  explicit LeviCivita(const Structure& S);

  int dim() const { return dim_; }

  /// Gamma^K_{IJ} with nabla_{e_I} e_J = sum_K Gamma^K_{IJ} e_K.
  const Scalar& gamma(int I, int J, int K) const { return gamma_[idx(I, J, K)]; }

  /// Component R^L_{IJK} of R(e_I, e_J) e_K = nabla_I nabla_J e_K
  /// - nabla_J nabla_I e_K - nabla_{[e_I, e_J]} e_K.
  Scalar riemann_updown(int I, int J, int K, int L) const;

  /// Fully lowered R(e_I, e_J, e_K, e_L) = g(R(e_I, e_J) e_K, e_L).
  Scalar riemann_component(int I, int J, int K, int L) const;

 private:
  std::size_t idx(int I, int J, int K) const {
    return (static_cast<std::size_t>(I - 1) * dim_ + (J - 1)) * dim_ + (K - 1);
  }

  int dim_;
  int n_;
  std::vector<Scalar> gamma_;  // Gamma^K_{IJ}
  std::vector<Scalar> c_;      // c^K_{IJ}
};

/// The (0,4) curvature tensor, slots grouped as two alternating pairs.
Tensor riemann(const Structure& S);

/// ric(X, Y) = tr(Z -> R(Z, X) Y) as a matrix of values ric(e_I, e_J).
QMatrix ricci_matrix_oracle(const Structure& S);

/// The oracle Ricci as a symmetric 2-tensor.
Tensor ricci_oracle(const Structure& S);

struct CurvatureReport {
  Tensor riemann;
  Tensor ricci;
  QMatrix ricci_matrix;
  Scalar s;  // (1/n) sum_i ric(e_i, e_{n+i})
  bool flat = false;
  bool ricci_flat = false;
  std::optional<Scalar> einstein;  // the constant c with ric = c g, when Einstein
};

CurvatureReport curvature_report(const Structure& S);

/// Canonical text in the symmetric-square presentation: diagonal terms
/// "IJ⊗IJ", off-diagonal "IJ⊙KL" for pairs (I,J) < (K,L); the pair-exchange
/// symmetry is checked while printing.
std::string riemann_text(const Tensor& R, int dim);

}  // namespace para
