#pragma once

namespace dcov {

// Cody's SPECFUN rational Chebyshev approximations (W. J. Cody, Math. Comp.
// 1969) for the error function family, ported to plain C++. Good to ~1e-16
// relative over the double range.
double erf_cody(double x);
double erfc_cody(double x);
double erfcx_cody(double x);  // exp(x^2) erfc(x)

// Standard normal CDF via erfc; absolute error well below 1e-12.
double normal_cdf(double x);

}  // namespace dcov
