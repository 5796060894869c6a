#pragma once

#include "para/torsion.hpp"

namespace para {

/// The derivation-type map from torsion blocks to 2-form-valued tensors:
/// converting the Lambda^2 value of a block to an endomorphism through the
/// metric and antisymmetrizing the first two covariant slots,
///   e^u (x) (e^v (x) e_w)  |->  e^{uv} (x) e_w.
/// Input slots (single, alternating pair), output (alternating pair, single).
Tensor partial_map(const Tensor& tau, int n);

/// P -| sigma for P in L^2 T* (x) T: sum of e^{ab} ^ (e_w -| sigma) over
/// the entries of P (w the frame vector of the stored third slot).
KForm hook_form(const Tensor& P, const KForm& sigma, int n);

/// P -| tau for a torsion-shaped tau: the vector slot of P contracts the
/// first covariant slot of tau, giving slots (alternating pair, alternating
/// pair).
Tensor hook_tensor(const Tensor& P, const Tensor& tau, int n);

/// The F-bracket of two torsion blocks whose pair-values live in L^2 V and
/// L^2 V* (in either order): contract the pair values with the natural
/// pairing (sign: +1 when the first argument's value is the bivector side)
/// and wedge the single slots into a 2-form.
KForm bracket_F(const Tensor& A, const Tensor& B, int n);

/// The barred variant: on full expansions e^I(x)e^J(x)e^K, e^H(x)e^L(x)e^M,
/// sum -F(e^I,e^H) F(e^J,e^L) e^K ^ e^M with F(e^i, e^{n+j}) = -delta_ij.
KForm bracket_Fbar(const Tensor& A, const Tensor& B, int n);

/// ric_B(X, Y) for B in L^2 T* (x) L^2 T* (slots alt pair, alt pair):
/// the second pair is read as an endomorphism M through the metric and
/// ric_B(X,Y) = omega(M(Y), X) summed over entries omega (x) M. Applied to
/// the Riemann tensor this is tr(Z -> R(Z,X) Y).
QMatrix ricci_contraction(const Structure& S, const Tensor& B);

/// f-forms entering the Ricci formulas:
///   f3 = -partial(tau3) -| F   in Lambda^{1,2}
///   f7 = -partial(tau7) -| F   in Lambda^{2,1}
///   f2, f6: the torsion blocks tau2, tau6 pushed into Lambda^{1,n-2} and
///   Lambda^{n-2,1} by contracting the pair value into beta resp. alpha and
///   wedging with the single slot.
KForm f2_form(const Structure& S, const Tensor& tau2);
KForm f3_form(const Structure& S, const Tensor& tau3);
KForm f6_form(const Structure& S, const Tensor& tau6);
KForm f7_form(const Structure& S, const Tensor& tau7);

/// The mixed Ricci block from torsion data alone, as the (1,1)-form
/// sum ric(e_i, e_{n+j}) e^{i,n+j}. No curvature oracle involved.
KForm ricci_prime_formula(const Structure& S, const TorsionComponents& tc);

/// The pure Ricci blocks from torsion data alone: first the bilinear form
/// on H x H (the S^2 V part), then the one on V x V (the S^2 V* part).
std::pair<Tensor, Tensor> ricci_second_formula(const Structure& S,
                                               const TorsionComponents& tc);

/// The scalar invariant s = (1/n) sum_i ric(e_i, e_{n+i}) from torsion data.
Scalar scalar_formula(const Structure& S, const TorsionComponents& tc);

/// The oracle Ricci repackaged for comparison: the (1,1)-form of the mixed
/// block and the two pure-block bilinear forms.
KForm ricci_prime_oracle_form(const Structure& S, const QMatrix& ric);
std::pair<Tensor, Tensor> ricci_second_oracle_blocks(const Structure& S, const QMatrix& ric);

}  // namespace para
