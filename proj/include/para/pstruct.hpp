#pragma once

#include <optional>
#include <utility>

#include "para/liealg.hpp"
#include "para/matrix.hpp"
#include "para/tensor.hpp"

namespace para {

/// A left-invariant almost parahermitian structure presented in an adapted
/// coframe e^1..e^{2n}: the vertical distribution V is spanned by e_1..e_n,
/// the horizontal H by e_{n+1}..e_{2n}, the neutral metric is
/// g = sum_i e^i (.) e^{n+i}, the fundamental form F = sum_i e^{i,n+i}, and
/// the paracomplex endomorphism K is +1 on V, -1 on H.
class Structure {
 public:
  explicit Structure(LieAlgebra alg);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const LieAlgebra& algebra() const { return alg_; }

  const KForm& F() const { return F_; }
  /// alpha = e^{1...n}, the vertical volume annihilator of H.
  const KForm& alpha() const { return alpha_; }
  /// beta = e^{n+1...2n}.
  const KForm& beta() const { return beta_; }

  KForm d(const KForm& a) const { return alg_.exterior_d(a); }
  KForm part(const KForm& a, int p, int q) const { return bidegree_part(a, n_, p, q); }

 private:
  LieAlgebra alg_;
  int n_;
  KForm F_, alpha_, beta_;
};

/// Wraps L, whose coframe is taken as adapted; when a coframe matrix M is
/// given the structure uses the coframe e~ = M e instead. Requires an even
/// dimension and an invertible M.
Structure standard_structure(const LieAlgebra& L,
                             const std::optional<QMatrix>& coframe = std::nullopt);

/// All (p,q) components of a form under the structure's bigrading.
std::vector<std::pair<std::pair<int, int>, KForm>> type_decompose(const Structure& S,
                                                                  const KForm& a);

/// Canonical basis tuples of Lambda^{p,q} (ascending V-part then H-part).
std::vector<IdxTuple> pq_basis(int n, int p, int q);

/// The contraction C(a) = sum_i e_i -| (e_{n+i} -| a), which maps
/// Lambda^{p,q} to Lambda^{p-1,q-1} and vanishes exactly on the primitive
/// part in the bidegrees handled here.
KForm c_operator(const Structure& S, const KForm& a);

/// The Lefschetz-type trace: the unique gamma in Lambda^{p-1,q-1} with
/// a - F ^ gamma primitive, computed as an exact linear solve. Supported
/// bidegrees: (1,1), (2,1), (1,2), (2,2); directness of the decomposition is
/// verified computationally and MathError is thrown when it fails.
KForm lambda_op(const Structure& S, const KForm& a);

/// Scalar Lambda of a (1,1)-form.
Scalar lambda_scalar(const Structure& S, const KForm& a);

/// Splits a (1,1)-form as (trace-free part, scale) with a = part + scale*F.
std::pair<KForm, Scalar> split_F_trace(const Structure& S, const KForm& a);

enum class Side { V, Vstar };

/// Inverts the identification V (x) V ~ Lambda^{n-1,1},
/// v (x) w |-> (v -| alpha) ^ (w -| ... ) — concretely
/// e_i (x) e_j |-> (e_i -| alpha) ^ e^{n+j} — returning the plain matrix
/// T with sigma = sum T_ij (e_i -| alpha) ^ e^{n+j}. Side::Vstar inverts
/// V* (x) V* ~ Lambda^{1,n-1}, e^i (x) e^j |-> (e_{n+i} -| beta) ^ e^j.
QMatrix invert_identification(const Structure& S, const KForm& sigma, Side side);

/// Symmetric 2-tensor eps(T) = T + T^t read back from the identification:
/// for Side::V a bilinear form on H x H (stored indices n+i), for
/// Side::Vstar one on V x V.
Tensor identify_S2(const Structure& S, const KForm& sigma, Side side);

/// Builds the symmetric 2-tensor with the given values on (e_I, e_J); when
/// plain = T + T^t is available use sym2_from_matrix directly.
Tensor sym2_from_matrix(const Structure& S, const QMatrix& sym, Side side);

/// Canonical text of a symmetric 2-tensor: diagonal terms "a⊗a",
/// off-diagonal "a⊙b".
std::string sym2_text(const Tensor& t);

}  // namespace para
