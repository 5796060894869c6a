#include "para/search.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "para/errors.hpp"
#include "para/ricforms.hpp"

namespace para {

namespace {

/// eta_u = -4 (d e^{n+u})^{2,0}: the vertical Nijenhuis image forms of the
/// algebra already written in the candidate coframe.
std::vector<KForm> vertical_image(const LieAlgebra& L, int n) {
  std::vector<KForm> etas;
  etas.reserve(n);
  for (int u = 1; u <= n; ++u)
    etas.push_back(bidegree_part(L.d1(n + u), n, 2, 0) * Scalar(-4));
  return etas;
}

QMatrix block_diag(const QMatrix& top, const QMatrix& bottom) {
  std::size_t nt = top.rows(), nb = bottom.rows();
  QMatrix out(nt + nb, nt + nb);
  for (std::size_t r = 0; r < nt; ++r)
    for (std::size_t c = 0; c < nt; ++c) out.at(r, c) = top.at(r, c);
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = 0; c < nb; ++c) out.at(nt + r, nt + c) = bottom.at(r, c);
  return out;
}

int even_half(const LieAlgebra& L, const char* who) {
  if (L.dim() % 2 != 0)
    throw PreconditionError(std::string(who) + ": the algebra dimension must be even");
  return L.dim() / 2;
}

/// Enumerates integer coefficient vectors of length d by increasing
/// max-norm shell (1..max_norm), lexicographically within a shell. Calls
/// visit on each; visit returns true to stop. Returns false when the
/// candidate cap was exhausted before the enumeration finished.
bool enumerate_shells(std::size_t d, const WitnessOptions& opt,
                      const std::function<bool(const std::vector<long>&)>& visit) {
  if (d == 0) return true;
  long count = 0;
  for (int m = 1; m <= opt.max_norm; ++m) {
    std::vector<long> v(d, -m);
    while (true) {
      bool on_shell = false;
      for (long x : v)
        if (x == m || x == -m) {
          on_shell = true;
          break;
        }
      if (on_shell) {
        if (++count > opt.max_candidates) return false;
        if (visit(v)) return true;
      }
      std::size_t pos = d;
      while (pos > 0 && v[pos - 1] == m) v[--pos] = -m;
      if (pos == 0) break;
      ++v[pos - 1];
    }
  }
  return true;
}

/// The n x n coefficient matrix of a (1,1)-form, F = sum F_ab e^{a,n+b}.
QMatrix form_matrix(const KForm& F, int n) {
  QMatrix out(n, n);
  for (const auto& [t, c] : F.terms()) {
    if (t[0] > n || t[1] <= n)
      throw PreconditionError("form_matrix: form is not of type (1,1)");
    out.at(t[0] - 1, t[1] - n - 1) = c;
  }
  return out;
}

KForm wedge_of(const Tensor& T, int dim) {
  KForm out(dim, 3);
  for (const auto& [t, c] : T.terms()) out.add_term({t[0], t[1], t[2]}, c);
  return out;
}

/// iota(e^{abc}) = e^{ab}(x)e^c + e^{bc}(x)e^a + e^{ca}(x)e^b, linearly;
/// a 3-tensor X with slots (alternating pair, single) is alternating
/// exactly when 3 X = iota(wedge X).
Tensor iota3(const KForm& rho, int n) {
  Tensor out(2 * n, {{Sym::alternating, 2}, {Sym::none, 1}}, 3, 0);
  for (const auto& [t, q] : rho.terms()) {
    out.add_term({t[0], t[1], t[2]}, q);
    out.add_term({t[1], t[2], t[0]}, q);
    out.add_term({t[2], t[0], t[1]}, q);
  }
  return out;
}

}  // namespace

SplittingCandidate coordinate_splitting(int n) {
  SplittingCandidate C;
  C.V_basis = QMatrix(n, 2 * n);
  C.H_basis = QMatrix(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    C.V_basis.at(i, i) = Scalar(1);
    C.H_basis.at(i, n + i) = Scalar(1);
  }
  return C;
}

QMatrix splitting_coframe(const SplittingCandidate& C) {
  std::size_t n = C.V_basis.rows();
  if (n == 0 || C.V_basis.cols() != 2 * n || C.H_basis.rows() != n || C.H_basis.cols() != 2 * n)
    throw PreconditionError("splitting_coframe: V and H must each hold n rows of length 2n");
  QMatrix B(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < 2 * n; ++c) {
      B.at(r, c) = C.V_basis.at(r, c);
      B.at(n + r, c) = C.H_basis.at(r, c);
    }
  if (B.rank() != 2 * n)
    throw PreconditionError("splitting_coframe: the V and H bases are not complementary");
  return B.transpose().inverse();
}

NHConditions nh_conditions(const LieAlgebra& L, const SplittingCandidate& C) {
  int n = even_half(L, "nh_conditions");
  LieAlgebra Lc = change_coframe(L, splitting_coframe(C));
  NHConditions out;

  out.h_subalgebra = true;
  for (int K = 1; K <= n; ++K)
    if (!bidegree_part(Lc.d1(K), n, 0, 2).zero()) {
      out.h_subalgebra = false;
      break;
    }

  std::vector<KForm> etas = vertical_image(Lc, n);

  const std::vector<IdxTuple> pair_tuples = pq_basis(n == 0 ? 1 : n, 2, 0);
  QMatrix coeffs(n, pair_tuples.empty() ? 1 : pair_tuples.size());
  for (int u = 0; u < n; ++u)
    for (std::size_t c = 0; c < pair_tuples.size(); ++c)
      coeffs.at(u, c) = etas[u].coeff(pair_tuples[c]);
  out.rank3 = coeffs.rank() == 3;

  out.simple_image = true;
  for (int u = 0; u < n && out.simple_image; ++u)
    if (!wedge(etas[u], etas[u]).zero()) {
      out.simple_image = false;
      out.non_simple_witness = etas[u];
    }
  for (int u = 0; u < n && out.simple_image; ++u)
    for (int v = u + 1; v < n && out.simple_image; ++v)
      if (!wedge(etas[u], etas[v]).zero()) {
        out.simple_image = false;
        out.non_simple_witness = etas[u] + etas[v];
      }

  // sigma = sum s_i e^i with sigma ^ eta_u = 0 for every u: trivial kernel?
  std::map<std::pair<int, IdxTuple>, std::size_t> rowix;
  std::vector<std::vector<KForm>> wedges(n);
  for (int i = 1; i <= n; ++i) {
    for (int u = 0; u < n; ++u) {
      KForm w = wedge(KForm::basis(2 * n, {i}), etas[u]);
      for (const auto& [t, c] : w.terms()) rowix.try_emplace({u, t}, rowix.size());
      wedges[i - 1].push_back(std::move(w));
    }
  }
  QMatrix A(rowix.empty() ? 1 : rowix.size(), n);
  for (int i = 0; i < n; ++i)
    for (int u = 0; u < n; ++u)
      for (const auto& [t, c] : wedges[i][u].terms()) A.at(rowix.at({u, t}), i) = c;
  out.no_common_factor = A.rank() == static_cast<std::size_t>(n);

  IdxTuple beta_tuple;
  for (int i = n + 1; i <= 2 * n; ++i) beta_tuple.push_back(i);
  KForm dbeta = Lc.exterior_d(KForm::basis(2 * n, beta_tuple));
  out.dalpha_type_ok = bidegree_part(dbeta, n, 2, n - 1) == dbeta;

  return out;
}

QMatrix adapt_coframe(const LieAlgebra& L, const SplittingCandidate& C) {
  NHConditions cond = nh_conditions(L, C);
  if (!cond.all())
    throw PreconditionError(
        "adapt_coframe: the splitting does not satisfy the construction's conditions");
  int n = even_half(L, "adapt_coframe");
  QMatrix M1 = splitting_coframe(C);
  LieAlgebra L1 = change_coframe(L, M1);
  std::vector<KForm> etas = vertical_image(L1, n);

  // The support U* of the image inside V*: row-reduce all interior legs.
  QMatrix legs(static_cast<std::size_t>(n) * n, n);
  std::size_t r = 0;
  for (const KForm& eta : etas) {
    for (int i = 1; i <= n; ++i, ++r) {
      KForm leg = contract(i, eta);
      for (const auto& [t, c] : leg.terms()) legs.at(r, t[0] - 1) = c;
    }
  }
  std::vector<std::size_t> pivots = legs.rref();
  if (pivots.size() != 3) throw MathError("adapt_coframe: image support is not three-dimensional");

  // New vertical coframe: the three echelon support covectors, completed by
  // the coordinate covectors of the non-pivot columns.
  QMatrix Fmat(n, n);
  for (int m = 0; m < 3; ++m)
    for (int j = 0; j < n; ++j) Fmat.at(m, j) = legs.at(m, j);
  {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    int row = 3;
    for (int j = 0; j < n; ++j)
      if (!is_pivot[j]) Fmat.at(row++, j) = Scalar(1);
  }

  // Rewrite each eta in the new vertical coframe and read the cyclic
  // coordinates: eta_u = P_u1 f^{23} + P_u2 f^{31} + P_u3 f^{12}.
  QMatrix Sfull = block_diag(Fmat.inverse(), QMatrix::identity(n));
  QMatrix P(n, n);
  for (int u = 0; u < n; ++u) {
    KForm ep = substitute_coframe(etas[u], Sfull);
    for (const auto& [t, c] : ep.terms())
      if (t[1] > 3) throw MathError("adapt_coframe: image escapes its three-dimensional support");
    P.at(u, 0) = ep.coeff({2, 3});
    P.at(u, 1) = -ep.coeff({1, 3});
    P.at(u, 2) = ep.coeff({1, 2});
  }

  // Complete the rank-3 block to an invertible matrix with unit columns.
  int col = 3;
  for (int j = 0; j < n && col < n; ++j) {
    P.at(j, col) = Scalar(1);
    QMatrix lead(n, col + 1);
    for (int rr = 0; rr < n; ++rr)
      for (int cc = 0; cc <= col; ++cc) lead.at(rr, cc) = P.at(rr, cc);
    if (lead.rank() == static_cast<std::size_t>(col + 1))
      ++col;
    else
      P.at(j, col) = Scalar(0);
  }
  if (col != n) throw MathError("adapt_coframe: could not complete the horizontal change");

  QMatrix M = block_diag(Fmat, P.inverse()) * M1;

  // The rewritten algebra must now carry the standard cyclic NH block.
  Tensor NH = nijenhuis(standard_structure(L, M)).first;
  Tensor std_NH(2 * n, {{Sym::alternating, 2}, {Sym::none, 1}}, 2, 1);
  std_NH.add_term({2, 3, 1}, Scalar(1));
  std_NH.add_term({3, 1, 2}, Scalar(1));
  std_NH.add_term({1, 2, 3}, Scalar(1));
  if (!(NH == std_NH)) throw MathError("adapt_coframe: residual Nijenhuis block is not standard");
  return M;
}

Tensor c_contraction(const Tensor& NH, const KForm& F, int n) {
  if (NH.groups() != std::vector<SlotGroup>{{Sym::alternating, 2}, {Sym::none, 1}})
    throw std::invalid_argument("c_contraction: NH must have slots (alternating pair, single)");
  Tensor out(2 * n, {{Sym::alternating, 2}, {Sym::none, 1}}, 3, 0);
  for (const auto& [t, c] : NH.terms()) {
    KForm hooked = contract(dual_index(t[2], n), F);
    for (const auto& [u, q] : hooked.terms()) out.add_term({t[0], t[1], u[0]}, c * q);
  }
  return out;
}

std::vector<KForm> solve_F_space(const LieAlgebra& L, const QMatrix& coframe) {
  Structure S = standard_structure(L, coframe);
  int n = S.n();
  int dim = S.dim();
  Tensor NH = nijenhuis(S).first;

  int nun = n * n;
  std::vector<std::array<KForm, 3>> dparts(nun);
  std::vector<Tensor> defects(nun);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      int ix = (a - 1) * n + (b - 1);
      KForm dF = S.d(KForm::basis(dim, {a, n + b}));
      dparts[ix] = {S.part(dF, 2, 1), S.part(dF, 1, 2), S.part(dF, 0, 3)};
      Tensor T = c_contraction(NH, KForm::basis(dim, {a, n + b}), n);
      defects[ix] = T * Scalar(3) - iota3(wedge_of(T, dim), n);
    }

  std::map<std::pair<int, IdxTuple>, std::size_t> rowix;
  for (int ix = 0; ix < nun; ++ix) {
    for (int p = 0; p < 3; ++p)
      for (const auto& [t, c] : dparts[ix][p].terms()) rowix.try_emplace({p, t}, rowix.size());
    for (const auto& [t, c] : defects[ix].terms()) rowix.try_emplace({3, t}, rowix.size());
  }
  QMatrix A(rowix.empty() ? 1 : rowix.size(), nun);
  for (int ix = 0; ix < nun; ++ix) {
    for (int p = 0; p < 3; ++p)
      for (const auto& [t, c] : dparts[ix][p].terms()) A.at(rowix.at({p, t}), ix) = c;
    for (const auto& [t, c] : defects[ix].terms()) A.at(rowix.at({3, t}), ix) = c;
  }

  std::vector<KForm> basis;
  for (const std::vector<Scalar>& v : A.nullspace()) {
    KForm F(dim, 2);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        const Scalar& c = v[(a - 1) * n + (b - 1)];
        if (!is_zero(c)) F.add_term({a, n + b}, c);
      }
    basis.push_back(std::move(F));
  }
  return basis;
}

bool in_span(const std::vector<KForm>& basis, const KForm& target) {
  std::map<IdxTuple, std::size_t> rows;
  for (const KForm& f : basis)
    for (const auto& [t, c] : f.terms()) rows.try_emplace(t, rows.size());
  for (const auto& [t, c] : target.terms())
    if (!rows.count(t)) return false;
  if (rows.empty()) return target.zero();
  QMatrix A(rows.size(), basis.size());
  QMatrix Ab(rows.size(), basis.size() + 1);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [t, c] : basis[j].terms()) {
      A.at(rows.at(t), j) = c;
      Ab.at(rows.at(t), j) = c;
    }
  for (const auto& [t, c] : target.terms()) Ab.at(rows.at(t), basis.size()) = c;
  return A.rank() == Ab.rank();
}

WitnessResult find_nondegenerate(const std::vector<KForm>& basis, int n,
                                 const WitnessOptions& opt) {
  WitnessResult out;
  if (basis.empty()) return out;
  std::vector<QMatrix> mats;
  for (const KForm& f : basis) mats.push_back(form_matrix(f, n));
  bool finished = enumerate_shells(basis.size(), opt, [&](const std::vector<long>& v) {
    QMatrix Fm(n, n);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) Fm = Fm + mats[i] * Scalar(v[i]);
    if (Fm.rank() != static_cast<std::size_t>(n)) return false;
    KForm F(2 * n, 2);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) F += basis[i] * Scalar(v[i]);
    out.witness = std::move(F);
    return true;
  });
  out.inconclusive = !out.witness && !finished;
  return out;
}

std::vector<KForm> nondegenerate_samples(const std::vector<KForm>& basis, int n, int count,
                                         const WitnessOptions& opt) {
  std::vector<KForm> samples;
  if (basis.empty() || count <= 0) return samples;
  std::vector<QMatrix> mats;
  for (const KForm& f : basis) mats.push_back(form_matrix(f, n));
  enumerate_shells(basis.size(), opt, [&](const std::vector<long>& v) {
    QMatrix Fm(n, n);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) Fm = Fm + mats[i] * Scalar(v[i]);
    if (Fm.rank() != static_cast<std::size_t>(n)) return false;
    KForm F(2 * n, 2);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) F += basis[i] * Scalar(v[i]);
    samples.push_back(std::move(F));
    return static_cast<int>(samples.size()) >= count;
  });
  return samples;
}

LieAlgebra absorb_F(const LieAlgebra& L, const KForm& F) {
  int n = even_half(L, "absorb_F");
  QMatrix Fmat = form_matrix(F, n);
  if (Fmat.rank() != static_cast<std::size_t>(n))
    throw PreconditionError("absorb_F: the form is degenerate");
  QMatrix M = QMatrix::identity(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.at(n + i, n + j) = Fmat.at(i, j);
  return change_coframe(L, M);
}

SearchReport run_search(const LieAlgebra& L, const SplittingCandidate& C,
                        const WitnessOptions& opt) {
  SearchReport rep;
  rep.conditions = nh_conditions(L, C);
  if (!rep.conditions.all()) return rep;
  int n = L.dim() / 2;

  rep.adapted_coframe = adapt_coframe(L, C);
  rep.F_space_basis = solve_F_space(L, rep.adapted_coframe);

  WitnessResult w = find_nondegenerate(rep.F_space_basis, n, opt);
  rep.inconclusive = w.inconclusive;
  if (!w.witness) return rep;
  rep.nondegenerate_witness = w.witness;

  LieAlgebra La = change_coframe(L, rep.adapted_coframe);
  Structure S = standard_structure(absorb_F(La, *w.witness));
  TorsionComponents tc = intrinsic_torsion(S);
  TorsionClass cls = classify(tc, n);
  CurvatureReport cr = curvature_report(S);
  rep.verified_class = cls;
  rep.verified_ricci_flat = cr.ricci_flat;
  TorsionClass w1only;
  w1only.w[0] = true;
  rep.verified = cls.within(w1only) && !cls.lambda10 && !cls.lambda01 && cr.ricci_flat;
  rep.verified_structure = std::move(S);
  return rep;
}

namespace {

KForm parse_family_entry(int dim, const std::string& entry, const Scalar& lambda,
                         const Scalar& mu, const Scalar& k) {
  std::string s;
  for (char ch : entry)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  KForm out(dim, 2);
  if (s.empty()) throw ParseError("parse_family: empty entry");
  if (s == "0") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw ParseError("parse_family: empty term in '" + entry + "'");

    std::vector<std::string> factors;
    std::size_t fpos = 0;
    while (true) {
      std::size_t star = term.find('*', fpos);
      if (star == std::string::npos) {
        factors.push_back(term.substr(fpos));
        break;
      }
      factors.push_back(term.substr(fpos, star - fpos));
      fpos = star + 1;
    }

    Scalar coeff(sign);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      const std::string& f = factors[i];
      if (f == "L")
        coeff *= lambda;
      else if (f == "M")
        coeff *= mu;
      else if (f == "K")
        coeff *= k;
      else
        coeff *= parse_rational(f);
    }

    const std::string& group = factors.back();
    if (group.empty()) throw ParseError("parse_family: missing index group in '" + entry + "'");
    IdxTuple tuple;
    if (dim <= 9) {
      for (char ch : group) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError("parse_family: bad index group '" + group + "'");
        tuple.push_back(ch - '0');
      }
    } else {
      std::stringstream ss(group);
      std::string piece;
      while (std::getline(ss, piece, '.')) {
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("parse_family: bad index group '" + group + "'");
        tuple.push_back(std::stoi(piece));
      }
    }
    if (tuple.size() != 2) throw ParseError("parse_family: index group '" + group + "' is not a pair");
    out.add_term(tuple, coeff);
  }
  return out;
}

}  // namespace

LieAlgebra parse_family(const std::string& line, const Scalar& lambda, const Scalar& mu,
                        const Scalar& k, const std::string& name) {
  std::vector<std::string> entries;
  std::stringstream ss(line);
  std::string piece;
  while (std::getline(ss, piece, ',')) entries.push_back(piece);
  int dim = static_cast<int>(entries.size());
  if (dim == 0) throw ParseError("parse_family: no entries");
  std::vector<KForm> d;
  d.reserve(dim);
  for (const std::string& e : entries) d.push_back(parse_family_entry(dim, e, lambda, mu, k));
  return LieAlgebra(name, std::move(d));
}

LieAlgebra load_family(const std::string& path, int row, const Scalar& lambda, const Scalar& mu,
                       const Scalar& k) {
  std::ifstream in(path);
  if (!in) throw ParseError("load_family: cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (row < 1 || row > static_cast<int>(lines.size()))
    throw PreconditionError("load_family: family index " + std::to_string(row) +
                            " out of range 1.." + std::to_string(lines.size()));
  std::string name = "family-" + std::to_string(row) + "(" + rational_text(lambda) + "," +
                     rational_text(mu) + "," + rational_text(k) + ")";
  return parse_family(lines[row - 1], lambda, mu, k, name);
}

FamilyCheck verify_family(const std::string& path, int row, const Scalar& lambda,
                          const Scalar& mu, const Scalar& k) {
  if (is_zero(lambda) || is_zero(mu))
    throw PreconditionError("verify_family: the parameters lambda and mu must be nonzero");
  LieAlgebra L = load_family(path, row, lambda, mu, k);
  FamilyCheck out;
  out.jacobi = L.check_jacobi();
  if (!out.jacobi)
    throw MathError("verify_family: the family entry fails the Jacobi identity");
  out.nilpotent = L.flags().nilpotent;

  Structure S = standard_structure(L);
  TorsionComponents tc = intrinsic_torsion(S);
  out.cls = classify(tc, S.n());
  out.tau1_nonzero = !tc.tau1.zero();

  CurvatureReport cr = curvature_report(S);
  out.ricci_flat_oracle = cr.ricci_flat;
  out.riemann_nonzero = !cr.riemann.zero();

  KForm rp = ricci_prime_formula(S, tc);
  auto second = ricci_second_formula(S, tc);
  out.ricci_flat_formula = rp.zero() && second.first.zero() && second.second.zero() &&
                           is_zero(scalar_formula(S, tc));
  return out;
}

}  // namespace para
