#include "para/ricforms.hpp"

#include <algorithm>

#include "para/errors.hpp"

namespace para {

namespace {

void expect_block_shape(const Tensor& t, const char* who) {
  static const std::vector<SlotGroup> shape{{Sym::none, 1}, {Sym::alternating, 2}};
  if (!t.zero() && t.groups() != shape)
    throw std::invalid_argument(std::string(who) + ": expects a torsion-shaped tensor");
}

// V-type (both <= n), H-type (both > n) classification of a stored pair.
enum class PairType { V, H, mixed };

PairType pair_type(int a, int b, int n) {
  if (a <= n && b <= n) return PairType::V;
  if (a > n && b > n) return PairType::H;
  return PairType::mixed;
}

}  // namespace

Tensor partial_map(const Tensor& tau, int n) {
  expect_block_shape(tau, "partial_map");
  Tensor out(2 * n, {{Sym::alternating, 2}, {Sym::none, 1}}, 2, 1);
  for (const auto& [t, c] : tau.terms()) {
    out.add_term({t[0], t[1], t[2]}, c);
    out.add_term({t[0], t[2], t[1]}, Scalar(-c));
  }
  return out;
}

KForm hook_form(const Tensor& P, const KForm& sigma, int n) {
  KForm out(2 * n, P.zero() || sigma.zero() ? 0 : sigma.degree() + 1);
  for (const auto& [t, c] : P.terms()) {
    KForm piece = contract(dual_index(t[2], n), sigma);
    if (piece.zero()) continue;
    out += wedge(KForm::basis(2 * n, {t[0], t[1]}), piece) * c;
  }
  return out;
}

Tensor hook_tensor(const Tensor& P, const Tensor& tau, int n) {
  expect_block_shape(tau, "hook_tensor");
  Tensor out(2 * n, {{Sym::alternating, 2}, {Sym::alternating, 2}}, 4, 0);
  for (const auto& [tp, cp] : P.terms()) {
    int u = dual_index(tp[2], n);  // e^u pairs the vector e_{dual(stored)}
    for (const auto& [tt, ct] : tau.terms()) {
      if (tt[0] != u) continue;
      out.add_term({tp[0], tp[1], tt[1], tt[2]}, cp * ct);
    }
  }
  return out;
}

KForm bracket_F(const Tensor& A, const Tensor& B, int n) {
  expect_block_shape(A, "bracket_F");
  expect_block_shape(B, "bracket_F");
  KForm out(2 * n, 2);
  for (const auto& [ta, ca] : A.terms()) {
    PairType pa = pair_type(ta[1], ta[2], n);
    if (pa == PairType::mixed)
      throw std::invalid_argument("bracket_F: mixed-type pair value");
    for (const auto& [tb, cb] : B.terms()) {
      PairType pb = pair_type(tb[1], tb[2], n);
      if (pb == PairType::mixed)
        throw std::invalid_argument("bracket_F: mixed-type pair value");
      if (pa == pb) continue;
      // <e_{lm}, e^{jk}> pairing through the dual map; ascending pure-type
      // pairs stay ascending under the dual, so the match is direct.
      if (dual_index(ta[1], n) != tb[1] || dual_index(ta[2], n) != tb[2]) continue;
      int sign = pa == PairType::H ? 1 : -1;  // bivector side first: +
      out.add_term({ta[0], tb[0]}, Scalar(sign) * ca * cb);
    }
  }
  return out;
}

namespace {

// F(e^x, e^y) on raised covectors: -1 when y = x+n, +1 when x = y+n.
int F_eval(int x, int y, int n) {
  if (x <= n && y == x + n) return -1;
  if (x > n && y == x - n) return 1;
  return 0;
}

}  // namespace

KForm bracket_Fbar(const Tensor& A, const Tensor& B, int n) {
  expect_block_shape(A, "bracket_Fbar");
  expect_block_shape(B, "bracket_Fbar");
  KForm out(2 * n, 2);
  auto fa = A.expand_full();
  auto fb = B.expand_full();
  for (const auto& [ta, ca] : fa)
    for (const auto& [tb, cb] : fb) {
      int f1 = F_eval(ta[0], tb[0], n);
      if (f1 == 0) continue;
      int f2 = F_eval(ta[1], tb[1], n);
      if (f2 == 0) continue;
      out.add_term({ta[2], tb[2]}, Scalar(-f1 * f2) * ca * cb);
    }
  return out;
}

QMatrix ricci_contraction(const Structure& S, const Tensor& B) {
  static const std::vector<SlotGroup> shape{{Sym::alternating, 2}, {Sym::alternating, 2}};
  if (!B.zero() && B.groups() != shape)
    throw std::invalid_argument("ricci_contraction: expects two alternating pairs");
  const int n = S.n();
  QMatrix ric(S.dim(), S.dim());
  for (const auto& [t, q] : B.terms()) {
    int a = t[0], b = t[1], c = t[2], d = t[3];
    // omega (x) M with omega = e^{ab}, M = lambdaisso(e^{cd});
    // ric(X,Y) += omega(M(Y), X).
    if (a == dual_index(d, n)) ric.at(b - 1, c - 1) += q;
    if (b == dual_index(d, n)) ric.at(a - 1, c - 1) -= q;
    if (a == dual_index(c, n)) ric.at(b - 1, d - 1) -= q;
    if (b == dual_index(c, n)) ric.at(a - 1, d - 1) += q;
  }
  return ric;
}

KForm f3_form(const Structure& S, const Tensor& tau3) {
  return hook_form(partial_map(tau3, S.n()), S.F(), S.n()) * Scalar(-1);
}

KForm f7_form(const Structure& S, const Tensor& tau7) {
  return hook_form(partial_map(tau7, S.n()), S.F(), S.n()) * Scalar(-1);
}

KForm f2_form(const Structure& S, const Tensor& tau2) {
  expect_block_shape(tau2, "f2_form");
  const int n = S.n();
  KForm out(S.dim(), n - 1);
  for (const auto& [t, c] : tau2.terms()) {
    // entry (i, (j,k)), all <= n: (e_{n+j,n+k} -| beta) ^ e^i
    KForm piece = contract_bivector(n + t[1], n + t[2], S.beta());
    out += wedge(piece, KForm::basis(S.dim(), {t[0]})) * c;
  }
  return out;
}

KForm f6_form(const Structure& S, const Tensor& tau6) {
  expect_block_shape(tau6, "f6_form");
  const int n = S.n();
  KForm out(S.dim(), n - 1);
  for (const auto& [t, c] : tau6.terms()) {
    // entry (n+i, (n+j,n+k)): (e_{jk} -| alpha) ^ e^{n+i}
    KForm piece = contract_bivector(t[1] - n, t[2] - n, S.alpha());
    out += wedge(piece, KForm::basis(S.dim(), {t[0]})) * c;
  }
  return out;
}

KForm ricci_prime_formula(const Structure& S, const TorsionComponents& tc) {
  const int n = S.n();
  const Scalar nn(n);
  KForm out(S.dim(), 2);

  if (n != 2) {
    // (2-n) [Lambda((d f3 + partial(tau7+tau8) -| f3)^{2,2})]_0
    KForm f3 = f3_form(S, tc.tau3);
    KForm X = S.d(f3) + hook_form(partial_map(tc.tau78(), n), f3, n);
    KForm L = lambda_op(S, S.part(X, 2, 2));
    out += split_F_trace(S, L).first * Scalar(2 - n);
  }

  KForm df4 = S.d(tc.f4);
  KForm df4_11 = S.part(df4, 1, 1);
  out += df4_11 * Scalar(2 * (n - 2));
  out += wedge(tc.f4, tc.f8) * Scalar(-2 * (n - 1));

  Scalar lam_df4 = lambda_scalar(S, df4_11);
  Scalar p48 = form_pair(tc.f4, tc.f8);
  out += S.F() * (Scalar(2 * n) * lam_df4 - Scalar(4 * (n - 1)) * p48);

  out += bracket_F(tc.tau1, tc.tau5, n) * Scalar(-10);
  out += bracket_F(tc.tau1, tc.tau6, n) * Scalar(2);
  out += bracket_F(tc.tau2, tc.tau5, n) * Scalar(-4);
  out += bracket_F(tc.tau2, tc.tau6, n) * Scalar(-2);
  out += bracket_Fbar(tc.tau2, tc.tau6, n) * Scalar(2);
  out += bracket_F(tc.tau3, tc.tau78(), n) * Scalar(-2);
  out += bracket_F(tc.tau4, tc.tau7, n) * Scalar(-2 * (n - 1));

  out += S.part(S.d(tc.lambda), 1, 1) * nn;
  return out;
}

namespace {

// Component vector of a 1-form supported on H (entries on e^{n+i}) or V.
std::vector<Scalar> one_form_components(const KForm& a, int n, bool horizontal) {
  std::vector<Scalar> v(n, Scalar(0));
  for (const auto& [t, c] : a.terms()) {
    int i = t[0];
    if (horizontal ? i <= n : i > n)
      throw std::invalid_argument("one_form_components: wrong support");
    v[(horizontal ? i - n : i) - 1] = c;
  }
  return v;
}

// Contraction sharp(f) -| target with the metric sharp e^x |-> e_{dual(x)},
// which flips the support side (f4 lives on H and contracts alpha, f8 on V
// and contracts beta).
KForm sharp_contract(const Structure& S, const KForm& oneform, const KForm& target) {
  KForm out(S.dim(), target.degree() > 0 ? target.degree() - 1 : 0);
  for (const auto& [t, c] : oneform.terms())
    out += contract(dual_index(t[0], S.n()), target) * c;
  return out;
}

QMatrix outer(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  QMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m.at(i, j) = x[i] * y[j];
  return m;
}

QMatrix block(const QMatrix& m, int row0, int col0, int size) {
  QMatrix out(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) out.at(i, j) = m.at(row0 + i, col0 + j);
  return out;
}

}  // namespace

std::pair<Tensor, Tensor> ricci_second_formula(const Structure& S, const TorsionComponents& tc) {
  const int n = S.n();
  const Scalar half_n = scalar_of(n, 2);
  const int dsign = (n - 1) % 2 == 0 ? 1 : -1;  // (-1)^{n-1}

  KForm lam10 = S.part(tc.lambda, 1, 0);
  KForm lam01 = S.part(tc.lambda, 0, 1);
  std::vector<Scalar> a4 = one_form_components(tc.f4, n, true);
  std::vector<Scalar> b8 = one_form_components(tc.f8, n, false);
  std::vector<Scalar> l01 = one_form_components(lam01, n, true);
  std::vector<Scalar> l10 = one_form_components(lam10, n, false);

  // S^2 V side (bilinear form on H x H).
  QMatrix T_v(n, n);
  {
    KForm d_f4a = S.d(sharp_contract(S, tc.f4, S.alpha()));
    T_v = invert_identification(S, S.part(d_f4a, n - 1, 1), Side::V) * Scalar(dsign);
    T_v = T_v + (outer(l01, a4) + outer(a4, l01)) * half_n;
    T_v = T_v + outer(a4, a4) * Scalar(n - 2);
    T_v = T_v * Scalar(n - 1);

    KForm f6 = f6_form(S, tc.tau6);
    KForm inner = S.d(f6) + wedge(lam10, f6) * Scalar(n);
    T_v = T_v + invert_identification(S, S.part(inner, n - 1, 1), Side::V);

    Tensor B = hook_tensor(partial_map(tc.tau7, n), tc.tau5, n) +
               hook_tensor(partial_map(tc.tau3, n), tc.tau3, n);
    QMatrix ric_b = ricci_contraction(S, B * Scalar(-1));
    T_v = T_v + block(ric_b, n, n, n);
  }

  // S^2 V* side (bilinear form on V x V).
  QMatrix T_vs(n, n);
  {
    KForm d_f8b = S.d(sharp_contract(S, tc.f8, S.beta()));
    T_vs = invert_identification(S, S.part(d_f8b, 1, n - 1), Side::Vstar) * Scalar(dsign);
    T_vs = T_vs - (outer(l10, b8) + outer(b8, l10)) * half_n;
    T_vs = T_vs + outer(b8, b8) * Scalar(n - 2);
    T_vs = T_vs * Scalar(n - 1);

    KForm f2 = f2_form(S, tc.tau2);
    KForm inner = S.d(f2) - wedge(lam01, f2) * Scalar(n);
    T_vs = T_vs + invert_identification(S, S.part(inner, 1, n - 1), Side::Vstar);

    Tensor B = hook_tensor(partial_map(tc.tau3, n), tc.tau1, n) +
               hook_tensor(partial_map(tc.tau7, n), tc.tau7, n);
    QMatrix ric_b = ricci_contraction(S, B * Scalar(-1));
    T_vs = T_vs + block(ric_b, 0, 0, n);
  }

  return {sym2_from_matrix(S, T_v + T_v.transpose(), Side::V),
          sym2_from_matrix(S, T_vs + T_vs.transpose(), Side::Vstar)};
}

Scalar scalar_formula(const Structure& S, const TorsionComponents& tc) {
  const int n = S.n();
  Scalar s(0);
  s += scalar_of(10, n) * tensor_pair(tc.tau1, tc.tau5);
  s -= scalar_of(2, n) * tensor_pair(tc.tau2, tc.tau6);
  s -= scalar_of(2, n) * tensor_pair(tc.tau3, tc.tau7);
  s += Scalar(4 * (n - 1)) * lambda_scalar(S, S.part(S.d(tc.f4), 1, 1));
  s -= scalar_of(2 * (n - 1) * (2 * n - 1), n) * form_pair(tc.f4, tc.f8);
  s += Scalar(n) * lambda_scalar(S, S.part(S.d(tc.lambda), 1, 1));
  return s;
}

KForm ricci_prime_oracle_form(const Structure& S, const QMatrix& ric) {
  const int n = S.n();
  KForm out(S.dim(), 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.add_term({i, n + j}, ric.at(i - 1, n + j - 1));
  return out;
}

std::pair<Tensor, Tensor> ricci_second_oracle_blocks(const Structure& S, const QMatrix& ric) {
  const int n = S.n();
  QMatrix hh = block(ric, n, n, n), vv = block(ric, 0, 0, n);
  return {sym2_from_matrix(S, hh, Side::V), sym2_from_matrix(S, vv, Side::Vstar)};
}

}  // namespace para
