#pragma once

#include <array>
#include <string>
#include <utility>

#include "para/curvature.hpp"
#include "para/pstruct.hpp"

namespace para {

/// The intrinsic torsion of an adapted structure, split into the eight
/// irreducible pieces plus the trace 1-form lambda. Every block is stored
/// fully covariantly (see Tensor) with slots (single, alternating pair):
///   tau1+tau2 in V* (x) L^2 V*            entries (i, (j,k))       i,j,k <= n
///   tau3+tau4 in V* (x) L^2 V             entries (i, (n+j,n+k))
///   tau5+tau6 in H* (x) L^2 V             entries (n+i, (n+j,n+k))
///   tau7+tau8 in H* (x) L^2 V*            entries (n+i, (j,k))
/// f4 = Lambda-trace of (dF)^{1,2} scaled by -1/2, a (0,1)-form; f8 the
/// (2,1) mirror; lambda = lambda^{1,0} + lambda^{0,1}.
struct TorsionComponents {
  Tensor tau1, tau2, tau3, tau4, tau5, tau6, tau7, tau8;
  KForm f4, f8;
  KForm lambda;

  const Tensor& tau(int k) const;
  Tensor tau12() const { return tau1 + tau2; }
  Tensor tau34() const { return tau3 + tau4; }
  Tensor tau56() const { return tau5 + tau6; }
  Tensor tau78() const { return tau7 + tau8; }
};

struct TorsionClass {
  std::array<bool, 8> w{};  // w[k] set when tau_{k+1} != 0
  bool lambda10 = false;
  bool lambda01 = false;

  bool operator==(const TorsionClass&) const = default;

  /// Subset test on the eight W flags (lambda flags not included).
  bool within(const TorsionClass& other) const;

  /// "W2+W6", with "[l10]"/"[l01]" markers appended when lambda parts are
  /// present; the vanishing class is "0".
  std::string text() const;
};

/// Torsion-block shapes: an empty tensor with slots (single, alternating
/// pair); variance metadata per the block list above.
Tensor torsion_block(int dim, int cov_rank = 3);

/// Extracts all torsion components from dF, d alpha, d beta and verifies
/// the reconstruction of those differentials from the components exactly;
/// throws MathError when the round trip fails.
TorsionComponents intrinsic_torsion(const Structure& S);

TorsionClass classify(const Structure& S);
TorsionClass classify(const TorsionComponents& tc, int n);

/// The two nonvanishing Nijenhuis blocks of the paracomplex structure:
/// NH(X,Y) = 4 proj_H [X,Y] on V x V and NV(X,Y) = 4 proj_V [X,Y] on H x H,
/// as tensors with slots (alternating pair, single).
std::pair<Tensor, Tensor> nijenhuis(const Structure& S);

/// The structure with the roles of V and H exchanged: adapted coframe
/// (e^{n+1},...,e^{2n},e^1,...,e^n).
Structure sigma_swap(const Structure& S);

/// Exchanges the flags i <-> i+4 and the lambda flags.
TorsionClass sigma_swap(const TorsionClass& c);

/// Direct sum with interleaved adapted coframe: the product's V is the two
/// V's side by side, likewise H, so the result is adapted again.
Structure product(const Structure& A, const Structure& B);

/// Class of a product from the factor classes: union, then closing up
/// W4 -> W3+W4 and W8 -> W7+W8 (the pure-trace blocks do not stay
/// pure-trace in a larger dimension); lambda flags are united.
TorsionClass compose_classes(const TorsionClass& a, const TorsionClass& b);

/// Canonical text of a torsion block, e.g. "2⊗12" for e^2 (x) e^{12}.
std::string torsion_text(const Tensor& block);

}  // namespace para
