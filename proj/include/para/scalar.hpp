#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace para {

/// Exact rational scalar. All arithmetic in the library is exact; no
/// floating point is used anywhere.
using Scalar = mpq_class;

inline Scalar scalar_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("scalar_of: zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

/// Parse "p" or "p/q" (optional leading sign) into a canonical rational.
inline Scalar parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw std::invalid_argument("parse_rational: bad character in '" + text + "'");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

/// Canonical text: "p" when the denominator is 1, else "p/q".
inline std::string rational_text(const Scalar& q) { return q.get_str(); }

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

}  // namespace para
