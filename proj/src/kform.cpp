#include "para/kform.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "para/errors.hpp"

namespace para {

int sort_tuple(IdxTuple& tuple) {
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return 0;
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  return sign;
}

KForm::KForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim <= 0) throw std::invalid_argument("KForm: dimension must be positive");
  if (degree < 0 || degree > dim) throw std::invalid_argument("KForm: degree out of range");
}

KForm KForm::basis(int dim, const IdxTuple& tuple) {
  KForm f(dim, static_cast<int>(tuple.size()));
  f.add_term(tuple, Scalar(1));
  return f;
}

void KForm::add_term(IdxTuple tuple, const Scalar& coeff) {
  if (static_cast<int>(tuple.size()) != degree_)
    throw std::invalid_argument("KForm::add_term: tuple size does not match degree");
  for (int i : tuple)
    if (i < 1 || i > dim_) throw std::invalid_argument("KForm::add_term: index out of range");
  if (is_zero(coeff)) return;
  int sign = sort_tuple(tuple);
  if (sign == 0) return;
  Scalar& slot = terms_[tuple];
  slot += sign > 0 ? coeff : Scalar(-coeff);
  if (is_zero(slot)) terms_.erase(tuple);
}

Scalar KForm::coeff(const IdxTuple& tuple) const {
  auto it = terms_.find(tuple);
  return it == terms_.end() ? Scalar(0) : it->second;
}

KForm KForm::operator+(const KForm& rhs) const {
  KForm out = *this;
  out += rhs;
  return out;
}

KForm& KForm::operator+=(const KForm& rhs) {
  if (rhs.zero()) return *this;
  if (zero() && terms_.empty()) degree_ = rhs.degree_;
  if (dim_ != rhs.dim_) throw std::invalid_argument("KForm::+: dimension mismatch");
  if (degree_ != rhs.degree_) throw std::invalid_argument("KForm::+: degree mismatch");
  for (const auto& [t, c] : rhs.terms_) {
    Scalar& slot = terms_[t];
    slot += c;
    if (is_zero(slot)) terms_.erase(t);
  }
  return *this;
}

KForm KForm::operator-(const KForm& rhs) const { return *this + (-rhs); }

KForm KForm::operator-() const {
  KForm out = *this;
  for (auto& [t, c] : out.terms_) c = -c;
  return out;
}

KForm KForm::operator*(const Scalar& c) const {
  KForm out(dim_, degree_);
  if (is_zero(c)) return out;
  out.terms_ = terms_;
  for (auto& [t, v] : out.terms_) v *= c;
  return out;
}

bool KForm::operator==(const KForm& rhs) const {
  if (zero() && rhs.zero()) return dim_ == rhs.dim_;
  return dim_ == rhs.dim_ && degree_ == rhs.degree_ && terms_ == rhs.terms_;
}

std::string tuple_text(const IdxTuple& tuple, int dim) {
  std::ostringstream os;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (dim > 9 && i > 0) os << '.';
    os << tuple[i];
  }
  return os.str();
}

std::string KForm::text() const {
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
    os << tuple_text(t, dim_);
    first = false;
  }
  return os.str();
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  int deg = a.degree() + b.degree();
  if (deg > a.dim()) return KForm(a.dim(), a.dim());
  KForm out(a.dim(), deg);
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      IdxTuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      out.add_term(std::move(t), ca * cb);
    }
  return out;
}

KForm contract(int i, const KForm& a) {
  if (a.degree() == 0) return KForm(a.dim(), 0);
  KForm out(a.dim(), a.degree() - 1);
  for (const auto& [t, c] : a.terms()) {
    auto pos = std::find(t.begin(), t.end(), i);
    if (pos == t.end()) continue;
    int sign = (pos - t.begin()) % 2 == 0 ? 1 : -1;
    IdxTuple rest(t.begin(), pos);
    rest.insert(rest.end(), pos + 1, t.end());
    out.add_term(std::move(rest), sign > 0 ? c : Scalar(-c));
  }
  return out;
}

KForm contract_bivector(int j, int k, const KForm& a) { return contract(k, contract(j, a)); }

Scalar form_pair(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("form_pair: dimension mismatch");
  if (a.dim() % 2 != 0) throw std::invalid_argument("form_pair: odd ambient dimension");
  if (a.zero() || b.zero()) return Scalar(0);
  if (a.degree() != b.degree()) throw std::invalid_argument("form_pair: degree mismatch");
  int n = a.dim() / 2;
  Scalar acc(0);
  for (const auto& [t, c] : a.terms()) {
    IdxTuple d(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) d[i] = dual_index(t[i], n);
    int sign = sort_tuple(d);
    Scalar cb = b.coeff(d);
    if (!is_zero(cb)) acc += c * cb * sign;
  }
  return acc;
}

KForm bidegree_part(const KForm& a, int n, int p, int q) {
  if (p + q != a.degree() && !a.zero())
    throw std::invalid_argument("bidegree_part: p+q does not match degree");
  KForm out(a.dim(), p + q);
  for (const auto& [t, c] : a.terms()) {
    int nv = static_cast<int>(std::count_if(t.begin(), t.end(), [n](int i) { return i <= n; }));
    if (nv == p) out.add_term(t, c);
  }
  return out;
}

std::vector<std::pair<std::pair<int, int>, KForm>> bidegree_split(const KForm& a, int n) {
  std::vector<std::pair<std::pair<int, int>, KForm>> out;
  for (int p = 0; p <= a.degree(); ++p) {
    KForm part = bidegree_part(a, n, p, a.degree() - p);
    if (!part.zero()) out.push_back({{p, a.degree() - p}, std::move(part)});
  }
  return out;
}

namespace {

// One term of the expression grammar: [coefficient '*'] indexgroup.
void parse_term(int dim, const std::string& chunk, int sign, std::optional<KForm>& form) {
  std::string coeff_text, group = chunk;
  auto star = chunk.rfind('*');
  if (star != std::string::npos) {
    coeff_text = chunk.substr(0, star);
    group = chunk.substr(star + 1);
    if (coeff_text.find('*') != std::string::npos)
      throw ParseError("form term '" + chunk + "': at most one coefficient factor");
  }
  if (group.empty()) throw ParseError("form term '" + chunk + "': missing index group");
  Scalar coeff = coeff_text.empty() ? Scalar(1) : parse_rational(coeff_text);
  if (sign < 0) coeff = -coeff;

  IdxTuple tuple;
  if (dim <= 9) {
    for (char ch : group) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("form term '" + chunk + "': bad index character");
      tuple.push_back(ch - '0');
    }
  } else {
    std::istringstream gs(group);
    std::string piece;
    while (std::getline(gs, piece, '.')) {
      if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        throw ParseError("form term '" + chunk + "': bad dotted index");
      tuple.push_back(std::stoi(piece));
    }
  }
  for (int i : tuple)
    if (i < 1 || i > dim) throw ParseError("form term '" + chunk + "': index out of range 1.." + std::to_string(dim));

  if (!form)
    form.emplace(dim, static_cast<int>(tuple.size()));
  else if (form->degree() != static_cast<int>(tuple.size()))
    throw ParseError("form expression mixes degrees");
  form->add_term(std::move(tuple), coeff);
}

}  // namespace

KForm parse_kform(int dim, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty form expression");
  if (s == "0") return KForm(dim, 0);

  std::optional<KForm> form;
  std::size_t pos = 0;
  int sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  while (pos < s.size()) {
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    if (end == pos) throw ParseError("form expression '" + text + "': empty term");
    parse_term(dim, s.substr(pos, end - pos), sign, form);
    if (end < s.size()) sign = s[end] == '-' ? -1 : 1;
    pos = end + 1;
  }
  if (s.back() == '+' || s.back() == '-')
    throw ParseError("form expression '" + text + "': trailing sign");
  return *form;
}

}  // namespace para
