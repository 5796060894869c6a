#include "para/liealg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "para/errors.hpp"

namespace para {

LieAlgebra::LieAlgebra(std::string name, std::vector<KForm> d)
    : name_(std::move(name)), dim_(static_cast<int>(d.size())), d_(std::move(d)) {
  if (dim_ == 0) throw std::invalid_argument("LieAlgebra: no coframe entries");
  for (int k = 1; k <= dim_; ++k) {
    KForm& f = d_[k - 1];
    if (f.zero())
      f = KForm(dim_, 2);
    else if (f.dim() != dim_ || f.degree() != 2)
      throw std::invalid_argument("LieAlgebra: d e^" + std::to_string(k) + " is not a 2-form");
  }
}

KForm LieAlgebra::exterior_d(const KForm& a) const {
  if (a.dim() != dim_) throw std::invalid_argument("exterior_d: dimension mismatch");
  if (a.degree() >= dim_) return KForm(dim_, dim_);
  KForm out(dim_, a.degree() + 1);
  for (const auto& [t, c] : a.terms()) {
    for (std::size_t r = 0; r < t.size(); ++r) {
      KForm head = KForm::basis(dim_, IdxTuple(t.begin(), t.begin() + r));
      KForm tail = KForm::basis(dim_, IdxTuple(t.begin() + r + 1, t.end()));
      KForm piece = wedge(head, wedge(d1(t[r]), tail));
      out += piece * (r % 2 == 0 ? c : Scalar(-c));
    }
  }
  return out;
}

Scalar LieAlgebra::structure_const(int K, int I, int J) const {
  // d e^K (e_I, e_J) = -c^K_{IJ}
  IdxTuple t{I, J};
  int sign = sort_tuple(t);
  if (sign == 0) return Scalar(0);
  Scalar v = d_[K - 1].coeff(t);
  return sign > 0 ? Scalar(-v) : v;
}

std::vector<Scalar> LieAlgebra::bracket(int I, int J) const {
  std::vector<Scalar> out(dim_, Scalar(0));
  for (int K = 1; K <= dim_; ++K) out[K - 1] = structure_const(K, I, J);
  return out;
}

bool LieAlgebra::check_jacobi() const {
  for (int k = 1; k <= dim_; ++k)
    if (!exterior_d(d1(k)).zero()) return false;
  return true;
}

namespace {

// Row basis of the span of the given vectors.
std::vector<std::vector<Scalar>> row_span(const std::vector<std::vector<Scalar>>& rows, int dim) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < dim; ++c) m.at(r, c) = rows[r][c];
  m.rref();
  std::vector<std::vector<Scalar>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Scalar> row(dim);
    bool nonzero = false;
    for (int c = 0; c < dim; ++c) {
      row[c] = m.at(r, c);
      nonzero = nonzero || !is_zero(row[c]);
    }
    if (nonzero) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

AlgebraFlags LieAlgebra::flags() const {
  AlgebraFlags f;
  f.jacobi = check_jacobi();

  // Lower central series g, [g,g], [g,[g,g]], ... in frame coordinates.
  std::vector<std::vector<Scalar>> current;
  for (int i = 0; i < dim_; ++i) {
    std::vector<Scalar> e(dim_, Scalar(0));
    e[i] = 1;
    current.push_back(std::move(e));
  }
  f.nilpotent = false;
  for (int step = 0; step <= dim_; ++step) {
    if (current.empty()) {
      f.nilpotent = true;
      break;
    }
    std::vector<std::vector<Scalar>> next_rows;
    for (int I = 1; I <= dim_; ++I)
      for (const auto& v : current) {
        std::vector<Scalar> w(dim_, Scalar(0));
        for (int J = 1; J <= dim_; ++J) {
          if (is_zero(v[J - 1])) continue;
          for (int K = 1; K <= dim_; ++K) {
            Scalar c = structure_const(K, I, J);
            if (!is_zero(c)) w[K - 1] += v[J - 1] * c;
          }
        }
        if (std::any_of(w.begin(), w.end(), [](const Scalar& x) { return !is_zero(x); }))
          next_rows.push_back(std::move(w));
      }
    current = row_span(next_rows, dim_);
  }

  f.unimodular = true;
  for (int K = 1; K <= dim_ && f.unimodular; ++K) {
    Scalar tr(0);
    for (int I = 1; I <= dim_; ++I) tr += structure_const(I, I, K);
    f.unimodular = is_zero(tr);
  }
  return f;
}

std::string LieAlgebra::salamon_text() const {
  std::string out;
  for (int k = 1; k <= dim_; ++k) {
    if (k > 1) out += ',';
    out += d1(k).text();
  }
  return out;
}

LieAlgebra parse_salamon(const std::string& entries, const std::string& name) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream is(entries);
  while (std::getline(is, piece, ',')) parts.push_back(piece);
  if (!entries.empty() && entries.back() == ',') parts.push_back("");
  int dim = static_cast<int>(parts.size());
  if (dim < 1) throw ParseError("salamon string has no entries");
  std::vector<KForm> d;
  d.reserve(dim);
  for (int k = 0; k < dim; ++k) {
    KForm f = parse_kform(dim, parts[k]);
    if (!f.zero() && f.degree() != 2)
      throw ParseError("salamon entry " + std::to_string(k + 1) + " is not a 2-form: '" +
                       parts[k] + "'");
    if (f.zero()) f = KForm(dim, 2);
    d.push_back(std::move(f));
  }
  return LieAlgebra(name, std::move(d));
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

LieAlgebra parse_algebra_source(const std::string& content, const std::string& fallback_name) {
  std::string name = fallback_name, salamon;
  int dim = -1;
  std::vector<std::pair<int, std::string>> d_lines;

  std::istringstream is(content);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("name:", 0) == 0) {
      name = trim(line.substr(5));
    } else if (line.rfind("dim:", 0) == 0) {
      dim = std::stoi(trim(line.substr(4)));
    } else if (line.rfind("salamon:", 0) == 0) {
      if (!salamon.empty()) throw ParseError("algebra file has two salamon lines");
      salamon = trim(line.substr(8));
    } else if (line.rfind("d", 0) == 0) {
      auto eq = line.find('=');
      auto caret = line.find("e^");
      if (eq == std::string::npos || caret == std::string::npos || caret > eq)
        throw ParseError("bad algebra file line: '" + line + "'");
      int K = std::stoi(trim(line.substr(caret + 2, eq - caret - 2)));
      d_lines.push_back({K, trim(line.substr(eq + 1))});
    } else {
      throw ParseError("bad algebra file line: '" + line + "'");
    }
  }

  if (!salamon.empty() && !d_lines.empty())
    throw ParseError("algebra file mixes salamon and d-lines");
  if (!salamon.empty()) {
    LieAlgebra L = parse_salamon(salamon, name);
    if (dim >= 0 && dim != L.dim())
      throw ParseError("algebra file dim does not match the salamon entry count");
    return L;
  }
  if (d_lines.empty()) throw ParseError("algebra file has no structure data");
  if (dim < 0) throw ParseError("algebra file with d-lines needs a dim line");
  std::vector<KForm> d(dim, KForm(dim, 2));
  for (const auto& [K, expr] : d_lines) {
    if (K < 1 || K > dim) throw ParseError("d e^" + std::to_string(K) + ": index out of range");
    KForm f = parse_kform(dim, expr);
    if (f.zero()) f = KForm(dim, 2);
    d[K - 1] = std::move(f);
  }
  return LieAlgebra(name, std::move(d));
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string fallback = path;
  auto slash = fallback.find_last_of('/');
  if (slash != std::string::npos) fallback = fallback.substr(slash + 1);
  auto dot = fallback.rfind('.');
  if (dot != std::string::npos) fallback = fallback.substr(0, dot);
  return parse_algebra_source(buf.str(), fallback);
}

KForm substitute_coframe(const KForm& a, const QMatrix& S) {
  int dim = a.dim();
  if (S.rows() != static_cast<std::size_t>(dim) || S.cols() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("substitute_coframe: matrix shape mismatch");
  KForm out(dim, a.degree());
  for (const auto& [t, c] : a.terms()) {
    KForm acc(dim, 0);
    acc.add_term({}, c);
    for (int idx : t) {
      KForm line(dim, 1);
      for (int col = 1; col <= dim; ++col) {
        const Scalar& s = S.at(idx - 1, col - 1);
        if (!is_zero(s)) line.add_term({col}, s);
      }
      acc = wedge(acc, line);
    }
    out += acc;
  }
  return out;
}

LieAlgebra change_coframe(const LieAlgebra& L, const QMatrix& M) {
  if (M.rows() != static_cast<std::size_t>(L.dim()) || M.cols() != M.rows())
    throw PreconditionError("change_coframe: matrix shape must match the dimension");
  QMatrix Minv;
  try {
    Minv = M.inverse();
  } catch (const std::domain_error&) {
    throw PreconditionError("change_coframe: coframe matrix is singular");
  }
  std::vector<KForm> d;
  d.reserve(L.dim());
  for (int i = 1; i <= L.dim(); ++i) {
    KForm de(L.dim(), 2);
    for (int j = 1; j <= L.dim(); ++j) {
      const Scalar& m = M.at(i - 1, j - 1);
      if (!is_zero(m)) de += L.d1(j) * m;
    }
    d.push_back(substitute_coframe(de, Minv));
  }
  return LieAlgebra(L.name(), std::move(d));
}

}  // namespace para
