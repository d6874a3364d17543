#pragma once

#include <gmpxx.h>

#include <string>

namespace sepder {

// Exact rational scalar. All certified computations in this project run on
// these; no floating point anywhere in a proof path.
using Rational = mpq_class;
using BigInt = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace sepder
