#pragma once

#include <map>
#include <string>
#include <vector>

#include "para/kform.hpp"
#include "para/scalar.hpp"

namespace para {

enum class Sym { none, alternating, symmetric };

/// A contiguous run of tensor slots sharing a symmetry.
struct SlotGroup {
  Sym kind = Sym::none;
  int count = 1;
  bool operator==(const SlotGroup&) const = default;
};

/// Sparse tensor on a 2n-dimensional frame. Every slot is stored with the
/// covariant index obtained by lowering with the neutral metric (dual map
/// i <-> i+-n), which makes raising/lowering the identity on storage; the
/// covariant/contravariant ranks are kept as metadata for shape checks and
/// display. A stored coefficient is the multilinear value of the tensor at
/// the stored (canonical) argument tuple, so alternating groups carry wedge
/// coefficients and symmetric groups polarized values.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int dim, std::vector<SlotGroup> groups, int cov_rank = -1, int contra_rank = -1);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  int covariant_rank() const { return cov_rank_; }
  int contravariant_rank() const { return contra_rank_; }
  const std::vector<SlotGroup>& groups() const { return groups_; }
  bool zero() const { return terms_.empty(); }

  /// Adds value * (basis element at tuple); tuple entries in any order
  /// within each group, canonicalized with signs per the group symmetry.
  void add_term(IdxTuple tuple, const Scalar& value);

  Scalar coeff(const IdxTuple& canonical_tuple) const;
  const std::map<IdxTuple, Scalar>& terms() const { return terms_; }

  /// Value at an arbitrary argument tuple (canonicalizes, applies signs).
  Scalar value_at(IdxTuple tuple) const;

  /// All argument tuples in the orbit of the stored terms, with values;
  /// i.e. the dense multilinear coefficient array restricted to its support.
  std::map<IdxTuple, Scalar> expand_full() const;

  Tensor operator+(const Tensor& rhs) const;
  Tensor operator-(const Tensor& rhs) const;
  Tensor operator*(const Scalar& c) const;
  Tensor& operator+=(const Tensor& rhs);
  bool operator==(const Tensor& rhs) const;

  /// Generic canonical text: per-term slot groups joined by the tensor
  /// sign, e.g. "2⊗12" for e^2 ⊗ e^{12}; specialized presentations live
  /// with their modules. Zero tensor is "0".
  std::string text() const;

 private:
  void check_tuple(const IdxTuple& tuple) const;
  // Returns the canonicalizing sign, 0 when the term dies (repeat in an
  // alternating group).
  int canonicalize(IdxTuple& tuple) const;

  int dim_ = 0;
  int rank_ = 0;
  int cov_rank_ = 0, contra_rank_ = 0;
  std::vector<SlotGroup> groups_;
  std::map<IdxTuple, Scalar> terms_;
};

/// Metric pairing of two tensors of identical shape: sum over canonical
/// stored tuples of value(a) * value(b at the dualized tuple).
Scalar tensor_pair(const Tensor& a, const Tensor& b);

/// Transpose of a rank-2 tensor with two independent slots.
Tensor transpose2(const Tensor& t);

IdxTuple dual_tuple(const IdxTuple& t, int n);

}  // namespace para
