#pragma once

#include <gmpxx.h>

#include <string>

namespace ncalg {

/// Exact field element. Always kept canonical (reduced, positive denominator).
using Scalar = mpq_class;

/// Arbitrary-precision integer used for counts and series coefficients.
using BigInt = mpz_class;

inline std::string to_string(const Scalar& value) { return value.get_str(); }
inline std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace ncalg
