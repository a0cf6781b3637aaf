#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/scalar.hpp"

namespace ncalg {

/// Integer polynomial in t, coefficients in ascending degree, no trailing zeros
/// (the zero polynomial is the empty vector).
using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p);
IntPoly multiply(const IntPoly& a, const IntPoly& b);
/// (1-t)^n expanded.
IntPoly one_minus_t_power(std::size_t n);
/// First `terms` coefficients of 1/d. Throws std::invalid_argument unless d(0) = 1.
std::vector<BigInt> expand_reciprocal(const IntPoly& d, std::size_t terms);
/// "1 - 2*t + t^3".
std::string format_int_poly(const IntPoly& p);

/// Exponents 1 <= e_1 <= ... <= e_m with prod (1 - t^e_i) = d, or nullopt.
/// Throws std::invalid_argument when d(0) != 1 or when m = 0 and d != 1.
std::optional<std::vector<std::size_t>> product_form_decomposition(const IntPoly& d,
                                                                   std::size_t m);

}  // namespace ncalg
