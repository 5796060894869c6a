#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "para/scalar.hpp"

namespace para {

/// Index tuple into the coframe, 1-based, strictly increasing in canonical
/// storage. The empty tuple indexes the constant 0-form.
using IdxTuple = std::vector<int>;

/// Dual index on a 2n-dimensional adapted frame: d(i) = i+n for i <= n,
/// i-n otherwise. Lowering/raising with the neutral metric g = sum e^i (.) e^{n+i}
/// acts on indices as this involution.
inline int dual_index(int i, int n) { return i <= n ? i + n : i - n; }

/// Element of the exterior algebra over the coframe of a fixed-dimensional
/// space: a sparse map from strictly increasing index tuples to nonzero
/// exact rationals. Homogeneous of a single degree; the degree of an
/// identically zero form is bookkeeping only and is ignored by comparisons.
class KForm {
 public:
  KForm() = default;
  KForm(int dim, int degree);

  /// Canonical basis monomial e^{t_1...t_k} for an arbitrary-order tuple;
  /// repeated indices give the zero form, out-of-order tuples a sign.
  static KForm basis(int dim, const IdxTuple& tuple);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool zero() const { return terms_.empty(); }

  /// Adds coeff * e^{tuple} (tuple in any order), canonicalizing.
  void add_term(IdxTuple tuple, const Scalar& coeff);

  /// Coefficient of the canonical (strictly increasing) tuple.
  Scalar coeff(const IdxTuple& tuple) const;

  const std::map<IdxTuple, Scalar>& terms() const { return terms_; }

  KForm operator+(const KForm& rhs) const;
  KForm operator-(const KForm& rhs) const;
  KForm operator-() const;
  KForm operator*(const Scalar& c) const;
  KForm& operator+=(const KForm& rhs);
  bool operator==(const KForm& rhs) const;

  /// Canonical text: terms sorted by index tuple, "p/q*" coefficient prefix
  /// (omitted when the coefficient is +-1), juxtaposed indices when the
  /// dimension is at most 9, dot-separated otherwise. The zero form is "0".
  std::string text() const;

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::map<IdxTuple, Scalar> terms_;
};

/// Sorts tuple in place, returning the sign of the permutation (0 on repeats).
int sort_tuple(IdxTuple& tuple);

KForm wedge(const KForm& a, const KForm& b);

/// Interior product e_i -| a with the frame vector e_i acting on the first
/// slot: e_i -| e^{i a_2...a_k} = e^{a_2...a_k}.
KForm contract(int i, const KForm& a);

/// Bivector contraction e_{jk} -| a = e_k -| (e_j -| a).
KForm contract_bivector(int j, int k, const KForm& a);

/// Determinant pairing of equal-degree forms induced by the neutral metric:
/// <e^A, e^B> = det[ g^{-1}(e^{a_i}, e^{b_j}) ], with g^{-1}(e^a, e^b) = 1
/// exactly when b = dual(a). Requires an even ambient dimension 2n.
Scalar form_pair(const KForm& a, const KForm& b);

/// Component of a whose tuples have exactly p indices <= n (and so degree-p
/// of them "vertical", degree-q "horizontal", p + q = deg a).
KForm bidegree_part(const KForm& a, int n, int p, int q);

/// All (p,q) components of a, as {(p,q), component} pairs with p+q = deg a,
/// zero components omitted.
std::vector<std::pair<std::pair<int, int>, KForm>> bidegree_split(const KForm& a, int n);

/// Renders one index tuple in canonical text (juxtaposed or dotted by dim).
std::string tuple_text(const IdxTuple& tuple, int dim);

/// Parses the canonical/Salamon form-expression grammar: "0", or a signed
/// sum of terms "coeff*indexgroup" / "indexgroup"; index groups are
/// juxtaposed digits when dim <= 9, dot-separated integers otherwise.
/// All terms must share one degree.
KForm parse_kform(int dim, const std::string& text);

}  // namespace para
