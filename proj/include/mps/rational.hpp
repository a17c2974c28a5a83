#pragma once

#include <gmpxx.h>

#include <string>

namespace mps {

/// Exact rational number. GMP keeps it canonical: positive denominator and
/// coprime numerator/denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// "3", "-7/2"; integers are printed without a denominator.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace mps
