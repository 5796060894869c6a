#include "para/curvature.hpp"

#include <sstream>

#include "para/errors.hpp"

namespace para {

LeviCivita::LeviCivita(const Structure& S) : dim_(S.dim()), n_(S.n()) {
  const std::size_t total = static_cast<std::size_t>(dim_) * dim_ * dim_;
  gamma_.assign(total, Scalar(0));
  c_.assign(total, Scalar(0));
  const LieAlgebra& L = S.algebra();
  auto d = [this](int i) { return dual_index(i, n_); };
  const Scalar half(1, 2);
  for (int I = 1; I <= dim_; ++I)
    for (int J = 1; J <= dim_; ++J)
      for (int K = 1; K <= dim_; ++K) {
        c_[idx(I, J, K)] = L.structure_const(K, I, J);
        // 2 Gamma^K_{IJ} = g([e_I,e_J], e_{d(K)}) - g([e_J,e_{d(K)}], e_I)
        //                + g([e_{d(K)}, e_I], e_J), with g(e_A, e_B) = [B = d(A)].
        Scalar v = L.structure_const(K, I, J) - L.structure_const(d(I), J, d(K)) +
                   L.structure_const(d(J), d(K), I);
        gamma_[idx(I, J, K)] = half * v;
      }
}

Scalar LeviCivita::riemann_updown(int I, int J, int K, int L) const {
  Scalar acc(0);
  for (int M = 1; M <= dim_; ++M) {
    const Scalar& jk = gamma(J, K, M);
    if (!is_zero(jk)) acc += jk * gamma(I, M, L);
    const Scalar& ik = gamma(I, K, M);
    if (!is_zero(ik)) acc -= ik * gamma(J, M, L);
    const Scalar& br = c_[idx(I, J, M)];
    if (!is_zero(br)) acc -= br * gamma(M, K, L);
  }
  return acc;
}

Scalar LeviCivita::riemann_component(int I, int J, int K, int L) const {
  return riemann_updown(I, J, K, dual_index(L, n_));
}

Tensor riemann(const Structure& S) {
  LeviCivita lc(S);
  const int dim = S.dim();
  Tensor R(dim, {{Sym::alternating, 2}, {Sym::alternating, 2}}, 4, 0);
  for (int I = 1; I <= dim; ++I)
    for (int J = I + 1; J <= dim; ++J)
      for (int K = 1; K <= dim; ++K)
        for (int L = K + 1; L <= dim; ++L) {
          Scalar v = lc.riemann_component(I, J, K, L);
          if (!is_zero(v)) R.add_term({I, J, K, L}, v);
        }
  return R;
}

QMatrix ricci_matrix_oracle(const Structure& S) {
  LeviCivita lc(S);
  const int dim = S.dim();
  QMatrix ric(dim, dim);
  for (int X = 1; X <= dim; ++X)
    for (int Y = 1; Y <= dim; ++Y) {
      Scalar acc(0);
      for (int A = 1; A <= dim; ++A) acc += lc.riemann_updown(A, X, Y, A);
      ric.at(X - 1, Y - 1) = acc;
    }
  if (!(ric == ric.transpose()))
    throw MathError("ricci_oracle: trace of the curvature is not symmetric");
  return ric;
}

namespace {

Tensor sym2_from_full_matrix(int dim, const QMatrix& m) {
  Tensor out(dim, {{Sym::symmetric, 2}}, 2, 0);
  for (int I = 1; I <= dim; ++I)
    for (int J = I; J <= dim; ++J) out.add_term({I, J}, m.at(I - 1, J - 1));
  return out;
}

}  // namespace

Tensor ricci_oracle(const Structure& S) {
  return sym2_from_full_matrix(S.dim(), ricci_matrix_oracle(S));
}

CurvatureReport curvature_report(const Structure& S) {
  CurvatureReport rep;
  rep.riemann = riemann(S);
  rep.ricci_matrix = ricci_matrix_oracle(S);
  rep.ricci = sym2_from_full_matrix(S.dim(), rep.ricci_matrix);
  rep.flat = rep.riemann.zero();
  rep.ricci_flat = rep.ricci.zero();
  Scalar s(0);
  for (int i = 1; i <= S.n(); ++i) s += rep.ricci_matrix.at(i - 1, S.n() + i - 1);
  rep.s = s / Scalar(S.n());
  QMatrix sg(S.dim(), S.dim());
  for (int i = 1; i <= S.n(); ++i) {
    sg.at(i - 1, S.n() + i - 1) = rep.s;
    sg.at(S.n() + i - 1, i - 1) = rep.s;
  }
  if (rep.ricci_matrix == sg) rep.einstein = rep.s;
  return rep;
}

std::string riemann_text(const Tensor& R, int dim) {
  if (R.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : R.terms()) {
    IdxTuple ab{t[0], t[1]}, cd{t[2], t[3]};
    if (cd < ab) continue;  // mirror term printed at the other order
    if (ab < cd && R.coeff({t[2], t[3], t[0], t[1]}) != c)
      throw MathError("riemann_text: pair-exchange symmetry violated");
    Scalar a = abs(c);
    if (sgn(c) < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (a != 1) os << rational_text(a) << '*';
    os << tuple_text(ab, dim) << (ab == cd ? "⊗" : "⊙") << tuple_text(cd, dim);
    first = false;
  }
  return os.str();
}

}  // namespace para
