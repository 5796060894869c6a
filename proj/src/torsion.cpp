#include "para/torsion.hpp"

#include <sstream>

#include "para/errors.hpp"
#include "para/ricforms.hpp"

namespace para {

const Tensor& TorsionComponents::tau(int k) const {
  switch (k) {
    case 1: return tau1;
    case 2: return tau2;
    case 3: return tau3;
    case 4: return tau4;
    case 5: return tau5;
    case 6: return tau6;
    case 7: return tau7;
    case 8: return tau8;
    default: throw std::invalid_argument("TorsionComponents::tau: index must be 1..8");
  }
}

bool TorsionClass::within(const TorsionClass& other) const {
  for (int k = 0; k < 8; ++k)
    if (w[k] && !other.w[k]) return false;
  return true;
}

std::string TorsionClass::text() const {
  std::ostringstream os;
  bool any = false;
  for (int k = 0; k < 8; ++k)
    if (w[k]) {
      if (any) os << '+';
      os << 'W' << k + 1;
      any = true;
    }
  if (!any) os << '0';
  if (lambda10) os << " [l10]";
  if (lambda01) os << " [l01]";
  return os.str();
}

Tensor torsion_block(int dim, int cov_rank) {
  return Tensor(dim, {{Sym::none, 1}, {Sym::alternating, 2}}, cov_rank, 3 - cov_rank);
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw MathError("intrinsic_torsion: " + what);
}

// tr(tau)_i = sum_k tau(k, (d(k), d(i))) for the mixed blocks, with d the
// dual shift off the first-slot side.
Scalar block_trace(const Tensor& tau, int n, int i, bool first_slot_vertical) {
  Scalar s(0);
  int off = first_slot_vertical ? 0 : n;
  int doff = first_slot_vertical ? n : 0;
  for (int k = 1; k <= n; ++k)
    s += tau.value_at({off + k, doff + k, doff + i});
  return s;
}

// Alternating projection of a one-sided block at ascending (i,j,k):
// (a_{i,jk} + a_{j,ki} + a_{k,ij}) / 3.
Scalar alt_value(const Tensor& tau, int i, int j, int k) {
  Scalar s = tau.value_at({i, j, k}) + tau.value_at({j, k, i}) + tau.value_at({k, i, j});
  return s / 3;
}

}  // namespace

TorsionComponents intrinsic_torsion(const Structure& S) {
  const int n = S.n();
  const int dim = S.dim();
  TorsionComponents tc;

  KForm dF = S.d(S.F());
  KForm dal = S.d(S.alpha());
  KForm dbe = S.d(S.beta());
  KForm p30 = S.part(dF, 3, 0), p21 = S.part(dF, 2, 1);
  KForm p12 = S.part(dF, 1, 2), p03 = S.part(dF, 0, 3);

  // Trace 1-forms of the mixed components of dF.
  tc.f4 = lambda_op(S, p12) * scalar_of(-1, 2);
  tc.f8 = lambda_op(S, p21) * scalar_of(-1, 2);

  // Pure blocks from the pure components of dF.
  tc.tau1 = torsion_block(dim, 3);
  for (int i = 1; i <= n; ++i) {
    KForm c = contract(i, p30);
    for (const auto& [t, q] : c.terms()) tc.tau1.add_term({i, t[0], t[1]}, q / 6);
  }
  tc.tau5 = torsion_block(dim, 1);
  for (int i = 1; i <= n; ++i) {
    KForm c = contract(n + i, p03);
    for (const auto& [t, q] : c.terms()) tc.tau5.add_term({n + i, t[0], t[1]}, Scalar(-q) / 6);
  }

  // Trace parts of the mixed blocks, rebuilt from f4 and f8.
  tc.tau4 = torsion_block(dim, 1);
  for (const auto& [t, a] : tc.f4.terms()) {
    int i = t[0] - n;
    for (int k = 1; k <= n; ++k)
      if (k != i) tc.tau4.add_term({k, n + k, n + i}, a);
  }
  tc.tau8 = torsion_block(dim, 3);
  for (const auto& [t, b] : tc.f8.terms()) {
    int i = t[0];
    for (int k = 1; k <= n; ++k)
      if (k != i) tc.tau8.add_term({n + k, k, i}, b);
  }

  // Mixed blocks: contraction of the mixed dF components minus the trace.
  tc.tau3 = torsion_block(dim, 1);
  for (int i = 1; i <= n; ++i) {
    KForm c = contract(i, p12);
    for (const auto& [t, q] : c.terms()) tc.tau3.add_term({i, t[0], t[1]}, Scalar(-q) / 2);
  }
  tc.tau3 = tc.tau3 - tc.tau4;
  tc.tau7 = torsion_block(dim, 3);
  for (int i = 1; i <= n; ++i) {
    KForm c = contract(n + i, p21);
    for (const auto& [t, q] : c.terms()) tc.tau7.add_term({n + i, t[0], t[1]}, q / 2);
  }
  tc.tau7 = tc.tau7 - tc.tau8;
  for (int i = 1; i <= n; ++i) {
    require(is_zero(block_trace(tc.tau3, n, i, true)), "tau3 is not trace-free");
    require(is_zero(block_trace(tc.tau7, n, i, false)), "tau7 is not trace-free");
  }

  // One-sided blocks invisible to dF, probed from d beta and d alpha.
  KForm rhs2 = S.part(dbe, 2, n - 1) + hook_form(partial_map(tc.tau1, n), S.beta(), n);
  tc.tau2 = torsion_block(dim, 3);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        KForm probe = wedge(KForm::basis(dim, {n + j, n + k}), contract(i, S.alpha()));
        tc.tau2.add_term({i, j, k}, form_pair(rhs2, probe));
      }
  KForm rhs6 = S.part(dal, n - 1, 2) + hook_form(partial_map(tc.tau5, n), S.alpha(), n);
  tc.tau6 = torsion_block(dim, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        KForm probe = wedge(KForm::basis(dim, {j, k}), contract(n + i, S.beta()));
        tc.tau6.add_term({n + i, n + j, n + k}, form_pair(rhs6, probe));
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        require(is_zero(alt_value(tc.tau2, i, j, k)),
                "tau2 has a nonzero alternating part");
        require(is_zero(alt_value(tc.tau6, n + i, n + j, n + k)),
                "tau6 has a nonzero alternating part");
      }

  // Trace 1-form from the top components of d alpha and d beta.
  KForm w01(dim, 1), w10(dim, 1);
  {
    IdxTuple va(n), ha(n);
    for (int i = 0; i < n; ++i) {
      va[i] = i + 1;
      ha[i] = n + i + 1;
    }
    int sgn_n = n % 2 == 0 ? 1 : -1;  // (-1)^n
    for (int i = 1; i <= n; ++i) {
      IdxTuple t = va;
      t.push_back(n + i);
      w01.add_term({n + i}, Scalar(sgn_n) * dal.coeff(t));
      IdxTuple u{i};
      u.insert(u.end(), ha.begin(), ha.end());
      w10.add_term({i}, dbe.coeff(u));
    }
  }
  KForm lam01 = w01 * scalar_of(-1, n) - tc.f4 * scalar_of(n - 1, n);
  KForm lam10 = w10 * scalar_of(1, n) + tc.f8 * scalar_of(n - 1, n);
  tc.lambda = lam10 + lam01;

  // Reconstruction of dF, d alpha, d beta from the components; these eight
  // identities pin every normalization above.
  require(p30 == hook_form(partial_map(tc.tau1, n), S.F(), n) * Scalar(-1),
          "reconstruction of the (3,0) part of dF failed");
  require(p21 == hook_form(partial_map(tc.tau7, n), S.F(), n) * Scalar(-1) +
                     wedge(tc.f8, S.F()) * Scalar(-2),
          "reconstruction of the (2,1) part of dF failed");
  require(p12 == hook_form(partial_map(tc.tau3, n), S.F(), n) * Scalar(-1) +
                     wedge(tc.f4, S.F()) * Scalar(-2),
          "reconstruction of the (1,2) part of dF failed");
  require(p03 == hook_form(partial_map(tc.tau5, n), S.F(), n) * Scalar(-1),
          "reconstruction of the (0,3) part of dF failed");
  require(S.part(dal, n, 1) ==
              wedge(lam01 * Scalar(n) + tc.f4 * Scalar(n - 1), S.alpha()) * Scalar(-1),
          "reconstruction of the (n,1) part of d alpha failed");
  require(S.part(dal, n - 1, 2) ==
              hook_form(partial_map(tc.tau56(), n), S.alpha(), n) * Scalar(-1),
          "reconstruction of the (n-1,2) part of d alpha failed");
  require(S.part(dbe, 1, n) == wedge(lam10 * Scalar(n) - tc.f8 * Scalar(n - 1), S.beta()),
          "reconstruction of the (1,n) part of d beta failed");
  require(S.part(dbe, 2, n - 1) ==
              hook_form(partial_map(tc.tau12(), n), S.beta(), n) * Scalar(-1),
          "reconstruction of the (2,n-1) part of d beta failed");

  return tc;
}

TorsionClass classify(const TorsionComponents& tc, int n) {
  TorsionClass c;
  for (int k = 1; k <= 8; ++k) c.w[k - 1] = !tc.tau(k).zero();
  c.w[3] = !tc.f4.zero();  // the trace blocks are defined by their 1-forms
  c.w[7] = !tc.f8.zero();
  c.lambda10 = !bidegree_part(tc.lambda, n, 1, 0).zero();
  c.lambda01 = !bidegree_part(tc.lambda, n, 0, 1).zero();
  return c;
}

TorsionClass classify(const Structure& S) { return classify(intrinsic_torsion(S), S.n()); }

std::pair<Tensor, Tensor> nijenhuis(const Structure& S) {
  const int n = S.n();
  Tensor NH(S.dim(), {{Sym::alternating, 2}, {Sym::none, 1}}, 2, 1);
  Tensor NV(S.dim(), {{Sym::alternating, 2}, {Sym::none, 1}}, 2, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        NH.add_term({i, j, k}, Scalar(4) * S.algebra().structure_const(n + k, i, j));
        NV.add_term({n + i, n + j, n + k}, Scalar(4) * S.algebra().structure_const(k, n + i, n + j));
      }
  return {NH, NV};
}

Structure sigma_swap(const Structure& S) {
  const int n = S.n();
  QMatrix P(S.dim(), S.dim());
  for (int i = 0; i < n; ++i) {
    P.at(i, n + i) = Scalar(1);
    P.at(n + i, i) = Scalar(1);
  }
  return Structure(change_coframe(S.algebra(), P));
}

TorsionClass sigma_swap(const TorsionClass& c) {
  TorsionClass out;
  for (int k = 0; k < 4; ++k) {
    out.w[k] = c.w[k + 4];
    out.w[k + 4] = c.w[k];
  }
  out.lambda10 = c.lambda01;
  out.lambda01 = c.lambda10;
  return out;
}

namespace {

template <typename Map>
KForm remap_form(const KForm& f, int new_dim, Map&& map) {
  KForm out(new_dim, f.degree());
  for (const auto& [t, c] : f.terms()) {
    IdxTuple s;
    s.reserve(t.size());
    for (int x : t) s.push_back(map(x));
    out.add_term(std::move(s), c);
  }
  return out;
}

}  // namespace

Structure product(const Structure& A, const Structure& B) {
  const int na = A.n(), nb = B.n(), n = na + nb;
  auto map_a = [na, nb](int x) { return x <= na ? x : x + nb; };
  auto map_b = [na, nb](int x) { return x <= nb ? x + na : x + 2 * na; };
  std::vector<KForm> dd(2 * n, KForm(2 * n, 2));
  for (int k = 1; k <= 2 * na; ++k) dd[map_a(k) - 1] = remap_form(A.algebra().d1(k), 2 * n, map_a);
  for (int k = 1; k <= 2 * nb; ++k) dd[map_b(k) - 1] = remap_form(B.algebra().d1(k), 2 * n, map_b);
  std::string name = A.algebra().name() + " x " + B.algebra().name();
  return Structure(LieAlgebra(name, std::move(dd)));
}

TorsionClass compose_classes(const TorsionClass& a, const TorsionClass& b) {
  TorsionClass out;
  for (int k = 0; k < 8; ++k) out.w[k] = a.w[k] || b.w[k];
  if (out.w[3]) out.w[2] = true;  // a pure-trace mixed block widens
  if (out.w[7]) out.w[6] = true;
  out.lambda10 = a.lambda10 || b.lambda10;
  out.lambda01 = a.lambda01 || b.lambda01;
  return out;
}

std::string torsion_text(const Tensor& block) { return block.text(); }

}  // namespace para
