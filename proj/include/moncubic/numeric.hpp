#pragma once

// Floating-point helpers: polynomial roots and gcds of real numbers.

#include <complex>
#include <vector>

namespace moncubic {

// All complex roots of a polynomial given by coefficients from the top
// degree down (leading coefficient nonzero), by Aberth iteration followed by
// Newton polishing.
std::vector<std::complex<long double>> polynomial_roots(const std::vector<long double>& desc);

// Largest r with x/r and y/r both integers up to tol; x, y >= 0.
long double real_gcd(long double x, long double y, long double tol);

}  // namespace moncubic
