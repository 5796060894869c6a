#include "para/pstruct.hpp"

#include <sstream>

#include "para/errors.hpp"

namespace para {

Structure::Structure(LieAlgebra alg) : alg_(std::move(alg)) {
  if (alg_.dim() % 2 != 0)
    throw PreconditionError("Structure: adapted coframe needs an even dimension");
  n_ = alg_.dim() / 2;
  F_ = KForm(dim(), 2);
  for (int i = 1; i <= n_; ++i) F_.add_term({i, n_ + i}, Scalar(1));
  IdxTuple va(n_), ha(n_);
  for (int i = 0; i < n_; ++i) {
    va[i] = i + 1;
    ha[i] = n_ + i + 1;
  }
  alpha_ = KForm::basis(dim(), va);
  beta_ = KForm::basis(dim(), ha);
}

Structure standard_structure(const LieAlgebra& L, const std::optional<QMatrix>& coframe) {
  if (!coframe) return Structure(L);
  return Structure(change_coframe(L, *coframe));
}

std::vector<std::pair<std::pair<int, int>, KForm>> type_decompose(const Structure& S,
                                                                  const KForm& a) {
  return bidegree_split(a, S.n());
}

namespace {

void combinations(int lo, int hi, int k, IdxTuple& cur, std::vector<IdxTuple>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = lo; i <= hi - k + 1; ++i) {
    cur.push_back(i);
    combinations(i + 1, hi, k - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IdxTuple> pq_basis(int n, int p, int q) {
  std::vector<IdxTuple> vs, hs, out;
  IdxTuple cur;
  combinations(1, n, p, cur, vs);
  combinations(n + 1, 2 * n, q, cur, hs);
  for (const auto& v : vs)
    for (const auto& h : hs) {
      IdxTuple t = v;
      t.insert(t.end(), h.begin(), h.end());
      out.push_back(std::move(t));
    }
  return out;
}

KForm c_operator(const Structure& S, const KForm& a) {
  KForm out(S.dim(), a.degree() >= 2 ? a.degree() - 2 : 0);
  for (int i = 1; i <= S.n(); ++i) out += contract(i, contract(S.n() + i, a));
  return out;
}

KForm lambda_op(const Structure& S, const KForm& a) {
  const int n = S.n();
  auto parts = bidegree_split(a, n);
  if (parts.empty()) return KForm(S.dim(), 0);
  if (parts.size() != 1)
    throw std::invalid_argument("lambda_op: form is not of pure bidegree");
  auto [p, q] = parts[0].first;
  bool supported = (p == 1 && q == 1) || (p == 2 && q == 1) || (p == 1 && q == 2) ||
                   (p == 2 && q == 2);
  if (!supported)
    throw std::invalid_argument("lambda_op: unsupported bidegree (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");

  std::vector<IdxTuple> basis = pq_basis(n, p - 1, q - 1);
  const std::size_t m = basis.size();
  QMatrix A(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    KForm img = c_operator(S, wedge(S.F(), KForm::basis(S.dim(), basis[j])));
    for (std::size_t i = 0; i < m; ++i) A.at(i, j) = img.coeff(basis[i]);
  }
  if (A.rank() != m)
    throw MathError("lambda_op: decomposition Lambda^{" + std::to_string(p) + "," +
                    std::to_string(q) + "} = primitive + F^Lambda^{...} is not direct");
  KForm ca = c_operator(S, a);
  std::vector<Scalar> rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = ca.coeff(basis[i]);
  std::vector<Scalar> x = A.solve(rhs);
  KForm gamma(S.dim(), p + q - 2);
  for (std::size_t j = 0; j < m; ++j) gamma.add_term(basis[j], x[j]);
  if (!c_operator(S, a - wedge(S.F(), gamma)).zero())
    throw MathError("lambda_op: residual is not primitive");
  return gamma;
}

Scalar lambda_scalar(const Structure& S, const KForm& a) {
  KForm g = lambda_op(S, a);
  return g.coeff({});
}

std::pair<KForm, Scalar> split_F_trace(const Structure& S, const KForm& a) {
  if (!a.zero() && !(bidegree_part(a, S.n(), 1, 1) == a))
    throw std::invalid_argument("split_F_trace: expects a (1,1)-form");
  Scalar scale = c_operator(S, a).coeff({}) / Scalar(-S.n());
  return {a - S.F() * scale, scale};
}

QMatrix invert_identification(const Structure& S, const KForm& sigma, Side side) {
  const int n = S.n();
  if (!sigma.zero()) {
    int p = side == Side::V ? n - 1 : 1;
    int q = side == Side::V ? 1 : n - 1;
    if (!(bidegree_part(sigma, n, p, q) == sigma))
      throw std::invalid_argument("invert_identification: wrong bidegree for this side");
  }
  QMatrix T(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      IdxTuple t;
      if (side == Side::V) {
        for (int v = 1; v <= n; ++v)
          if (v != i) t.push_back(v);
        t.push_back(n + j);
        Scalar c = sigma.coeff(t);
        T.at(i - 1, j - 1) = (i % 2 == 1) ? c : Scalar(-c);
      } else {
        t.push_back(j);
        for (int h = 1; h <= n; ++h)
          if (h != i) t.push_back(n + h);
        Scalar c = sigma.coeff(t);
        T.at(i - 1, j - 1) = ((i - 1 + n - 1) % 2 == 0) ? c : Scalar(-c);
      }
    }
  return T;
}

Tensor sym2_from_matrix(const Structure& S, const QMatrix& sym, Side side) {
  const int n = S.n();
  Tensor out(S.dim(), {{Sym::symmetric, 2}}, 2, 0);
  int offset = side == Side::V ? n : 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      out.add_term({offset + i, offset + j}, sym.at(i - 1, j - 1));
  return out;
}

Tensor identify_S2(const Structure& S, const KForm& sigma, Side side) {
  QMatrix T = invert_identification(S, sigma, side);
  return sym2_from_matrix(S, T + T.transpose(), side);
}

std::string sym2_text(const Tensor& t) {
  if (t.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [tu, c] : t.terms()) {
    Scalar a = abs(c);
    if (sgn(c) < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (a != 1) os << rational_text(a) << '*';
    os << tu[0] << (tu[0] == tu[1] ? "⊗" : "⊙") << tu[1];
    first = false;
  }
  return os.str();
}

}  // namespace para
