#pragma once

#include <optional>
#include <string>
#include <vector>

#include "para/curvature.hpp"
#include "para/liealg.hpp"
#include "para/matrix.hpp"
#include "para/pstruct.hpp"
#include "para/torsion.hpp"

namespace para {

/// A candidate splitting g = V + H: rows are frame vectors in the algebra's
/// frame, n rows each. The candidate is usable when the 2n rows are jointly
/// independent; H must additionally be a subalgebra for the construction to
/// apply (reported, not assumed).
struct SplittingCandidate {
  QMatrix V_basis;
  QMatrix H_basis;
};

/// V = <e_1..e_n>, H = <e_{n+1}..e_{2n}>.
SplittingCandidate coordinate_splitting(int n);

/// The coframe matrix M (rows: new coframe in the old one) in which the
/// candidate's V and H become the coordinate blocks; this is the inverse
/// transpose of the stacked basis rows. PreconditionError when the rows are
/// not jointly independent.
QMatrix splitting_coframe(const SplittingCandidate& C);

/// Decision record for the nearly-parakahler construction on a splitting.
struct NHConditions {
  bool h_subalgebra = false;     ///< [H,H] contained in H
  bool rank3 = false;            ///< the map sigma -> -4 d sigma|_{VxV} has rank 3
  bool simple_image = false;     ///< every eta in the image satisfies eta^eta = 0
  bool no_common_factor = false; ///< no nonzero sigma in V* with sigma^eta = 0 for all eta
  bool dalpha_type_ok = false;   ///< d Lambda^{0,n} contained in Lambda^{2,n-1}
  /// When simple_image fails: an eta in the image with eta ^ eta != 0.
  std::optional<KForm> non_simple_witness;

  bool all() const {
    return h_subalgebra && rank3 && simple_image && no_common_factor && dalpha_type_ok;
  }
};

/// Decides each condition exactly on the candidate splitting.
NHConditions nh_conditions(const LieAlgebra& L, const SplittingCandidate& C);

/// Builds a full adapted coframe (relative to L's frame) in which the
/// vertical Nijenhuis block becomes e^{23}(x)e_{n+1} + e^{31}(x)e_{n+2} +
/// e^{12}(x)e_{n+3}, so tau2 = 0, and H integrability gives tau5 = tau6 = 0.
/// PreconditionError when nh_conditions fail; MathError on an internal
/// inconsistency (which would indicate a bug, not bad input).
QMatrix adapt_coframe(const LieAlgebra& L, const SplittingCandidate& C);

/// c((eta (x) h) (x) F) = eta (x) (h -| F), extended linearly; NH has slots
/// (alternating pair, single), the result slots (alternating pair, single)
/// fully covariant.
Tensor c_contraction(const Tensor& NH, const KForm& F, int n);

/// Exact basis of the space of (1,1)-forms F with dF in Lambda^{3,0} and
/// c(NH, F) in Lambda^{3,0}, on the algebra rewritten in the given adapted
/// coframe. Deterministic echelon basis; empty when only F = 0 solves.
std::vector<KForm> solve_F_space(const LieAlgebra& L, const QMatrix& coframe);

/// Whether target lies in the rational span of the basis.
bool in_span(const std::vector<KForm>& basis, const KForm& target);

struct WitnessOptions {
  int max_norm = 2;            ///< max-norm bound on integer coefficient vectors
  long max_candidates = 200000;  ///< total enumeration cap
};

struct WitnessResult {
  std::optional<KForm> witness;  ///< first nondegenerate F in enumeration order
  bool inconclusive = false;     ///< cap exhausted without a witness
};

/// Iterates integer coefficient vectors over the basis in increasing
/// max-norm (lexicographic within a shell) and returns the first F with
/// F^n != 0; deterministic.
WitnessResult find_nondegenerate(const std::vector<KForm>& basis, int n,
                                 const WitnessOptions& opt = {});

/// Up to `count` nondegenerate forms from the same enumeration order.
std::vector<KForm> nondegenerate_samples(const std::vector<KForm>& basis, int n, int count,
                                         const WitnessOptions& opt = {});

/// Rewrites the algebra so the given nondegenerate (1,1)-form becomes the
/// standard F (the H-coframe absorbs the coefficient matrix).
LieAlgebra absorb_F(const LieAlgebra& L, const KForm& F);

struct SearchReport {
  NHConditions conditions;
  QMatrix adapted_coframe;          ///< empty unless conditions all pass
  std::vector<KForm> F_space_basis; ///< in the adapted coframe
  std::optional<KForm> nondegenerate_witness;
  bool inconclusive = false;
  /// Set when a witness was verified: the structure with standard F.
  std::optional<Structure> verified_structure;
  std::optional<TorsionClass> verified_class;
  bool verified_ricci_flat = false;
  /// Witness verified: class within {W1} and Ricci-flat.
  bool verified = false;
};

/// The full pipeline on one candidate splitting.
SearchReport run_search(const LieAlgebra& L, const SplittingCandidate& C,
                        const WitnessOptions& opt = {});

/// Parses one family line whose terms may carry L/M/K parameter factors,
/// e.g. "0,0,-L*18,0,-M*23+L*78,M*13,-M*12+L*M*38,0".
LieAlgebra parse_family(const std::string& line, const Scalar& lambda, const Scalar& mu,
                        const Scalar& k, const std::string& name);

/// Loads row `row` (1-based) of a family data file (comments '#', one
/// family per line) and substitutes the parameters.
LieAlgebra load_family(const std::string& path, int row, const Scalar& lambda,
                       const Scalar& mu, const Scalar& k);

struct FamilyCheck {
  bool jacobi = false;
  bool nilpotent = false;
  TorsionClass cls;
  bool tau1_nonzero = false;
  bool ricci_flat_oracle = false;
  bool ricci_flat_formula = false;
  bool riemann_nonzero = false;
  bool all() const {
    TorsionClass w1only;
    w1only.w[0] = true;
    return jacobi && nilpotent && cls == w1only && tau1_nonzero && ricci_flat_oracle &&
           ricci_flat_formula && riemann_nonzero;
  }
};

/// Builds the row with the given parameters (lambda, mu nonzero:
/// PreconditionError otherwise), runs the full pipeline and reports the
/// verdicts; MathError if the transcribed algebra fails Jacobi.
FamilyCheck verify_family(const std::string& path, int row, const Scalar& lambda,
                          const Scalar& mu, const Scalar& k);

}  // namespace para
