#include "para/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace para {

Tensor::Tensor(int dim, std::vector<SlotGroup> groups, int cov_rank, int contra_rank)
    : dim_(dim), groups_(std::move(groups)) {
  if (dim <= 0) throw std::invalid_argument("Tensor: dimension must be positive");
  for (const auto& g : groups_) {
    if (g.count < 1) throw std::invalid_argument("Tensor: empty slot group");
    rank_ += g.count;
  }
  cov_rank_ = cov_rank >= 0 ? cov_rank : rank_;
  contra_rank_ = contra_rank >= 0 ? contra_rank : rank_ - cov_rank_;
  if (cov_rank_ + contra_rank_ != rank_)
    throw std::invalid_argument("Tensor: variance ranks do not sum to the rank");
}

void Tensor::check_tuple(const IdxTuple& tuple) const {
  if (static_cast<int>(tuple.size()) != rank_)
    throw std::invalid_argument("Tensor: tuple size does not match rank");
  for (int i : tuple)
    if (i < 1 || i > dim_) throw std::invalid_argument("Tensor: index out of range");
}

int Tensor::canonicalize(IdxTuple& tuple) const {
  int sign = 1, base = 0;
  for (const auto& g : groups_) {
    if (g.count > 1 && g.kind != Sym::none) {
      IdxTuple part(tuple.begin() + base, tuple.begin() + base + g.count);
      int s = sort_tuple(part);
      if (g.kind == Sym::alternating) {
        if (s == 0) return 0;
        sign *= s;
      }
      std::copy(part.begin(), part.end(), tuple.begin() + base);
    }
    base += g.count;
  }
  return sign;
}

void Tensor::add_term(IdxTuple tuple, const Scalar& value) {
  check_tuple(tuple);
  if (is_zero(value)) return;
  int sign = canonicalize(tuple);
  if (sign == 0) return;
  Scalar& slot = terms_[tuple];
  slot += sign > 0 ? value : Scalar(-value);
  if (is_zero(slot)) terms_.erase(tuple);
}

Scalar Tensor::coeff(const IdxTuple& canonical_tuple) const {
  auto it = terms_.find(canonical_tuple);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Tensor::value_at(IdxTuple tuple) const {
  check_tuple(tuple);
  int sign = canonicalize(tuple);
  if (sign == 0) return Scalar(0);
  Scalar c = coeff(tuple);
  return sign > 0 ? c : Scalar(-c);
}

std::map<IdxTuple, Scalar> Tensor::expand_full() const {
  std::map<IdxTuple, Scalar> out;
  for (const auto& [t, c] : terms_) {
    // Expand each group orbit; with <= 2 symmetric/alternating slots per
    // group in practice, a permutation walk per group is cheap.
    std::vector<std::pair<IdxTuple, Scalar>> acc = {{IdxTuple{}, c}};
    int base = 0;
    for (const auto& g : groups_) {
      IdxTuple part(t.begin() + base, t.begin() + base + g.count);
      std::vector<std::pair<IdxTuple, int>> variants;
      if (g.kind == Sym::none) {
        variants = {{part, 1}};
      } else {
        std::sort(part.begin(), part.end());
        IdxTuple perm = part;
        do {
          int sign = 1;
          if (g.kind == Sym::alternating) {
            IdxTuple tmp = perm;
            sign = sort_tuple(tmp);
          }
          variants.push_back({perm, sign});
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      std::vector<std::pair<IdxTuple, Scalar>> next;
      next.reserve(acc.size() * variants.size());
      for (const auto& [prefix, val] : acc)
        for (const auto& [part_variant, sign] : variants) {
          IdxTuple joined = prefix;
          joined.insert(joined.end(), part_variant.begin(), part_variant.end());
          next.push_back({std::move(joined), sign > 0 ? val : Scalar(-val)});
        }
      acc = std::move(next);
      base += g.count;
    }
    for (auto& [tuple, val] : acc) out[std::move(tuple)] = std::move(val);
  }
  return out;
}

Tensor Tensor::operator+(const Tensor& rhs) const {
  Tensor out = *this;
  out += rhs;
  return out;
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
  if (rhs.zero()) return *this;
  if (zero() && groups_.empty()) {
    *this = rhs;
    return *this;
  }
  if (dim_ != rhs.dim_ || groups_ != rhs.groups_)
    throw std::invalid_argument("Tensor::+: shape mismatch");
  for (const auto& [t, c] : rhs.terms_) {
    Scalar& slot = terms_[t];
    slot += c;
    if (is_zero(slot)) terms_.erase(t);
  }
  return *this;
}

Tensor Tensor::operator-(const Tensor& rhs) const { return *this + rhs * Scalar(-1); }

Tensor Tensor::operator*(const Scalar& c) const {
  Tensor out(dim_, groups_, cov_rank_, contra_rank_);
  if (is_zero(c)) return out;
  out.terms_ = terms_;
  for (auto& [t, v] : out.terms_) v *= c;
  return out;
}

bool Tensor::operator==(const Tensor& rhs) const {
  if (zero() && rhs.zero()) return dim_ == rhs.dim_;
  return dim_ == rhs.dim_ && groups_ == rhs.groups_ && terms_ == rhs.terms_;
}

std::string Tensor::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Scalar a = abs(c);
    if (sgn(c) < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (a != 1) os << rational_text(a) << '*';
    int base = 0;
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
      if (gi > 0) os << "⊗";
      IdxTuple part(t.begin() + base, t.begin() + base + groups_[gi].count);
      os << tuple_text(part, dim_);
      base += groups_[gi].count;
    }
    first = false;
  }
  return os.str();
}

IdxTuple dual_tuple(const IdxTuple& t, int n) {
  IdxTuple d(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) d[i] = dual_index(t[i], n);
  return d;
}

Scalar tensor_pair(const Tensor& a, const Tensor& b) {
  if (a.zero() || b.zero()) return Scalar(0);
  if (a.dim() != b.dim() || a.groups() != b.groups())
    throw std::invalid_argument("tensor_pair: shape mismatch");
  int n = a.dim() / 2;
  Scalar acc(0);
  for (const auto& [t, c] : a.terms()) acc += c * b.value_at(dual_tuple(t, n));
  return acc;
}

Tensor transpose2(const Tensor& t) {
  if (t.rank() != 2 || t.groups().size() != 2)
    throw std::invalid_argument("transpose2: expects two independent slots");
  Tensor out(t.dim(), t.groups(), t.covariant_rank(), t.contravariant_rank());
  for (const auto& [tu, c] : t.terms()) out.add_term({tu[1], tu[0]}, c);
  return out;
}

}  // namespace para
