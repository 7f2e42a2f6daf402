#pragma once

#include <string>
#include <vector>

#include "dcov/rational.hpp"

namespace dcov {

// Bracketing-number bound evaluators. Large d^d/d! factors are evaluated in
// log-space via lgamma and exponentiated last; exponents past the double
// range come back as +infinity (the overflow flag).

// ceil(1/delta) for delta in (0,1], robust against the floating quotient
// landing a hair above/below an integer.
long bracketing_1d(double delta);

double bound_gnewuch(int d, double delta);   // 2^{d-1} d^d/d! (1/delta+1)^d
double bound_pw(int d, double delta);        // 2^{d-2} d^d/d! (1/delta+1)^d + (1/delta+1)/2
double bound_d2(double delta);               // 2 ln2 /delta^2 + 3(ln2+1)/delta - (13/9 ln2 - 1)
double bd_factor(int d);                     // max(1.1^{d-101}, 1)
double bound_general(int d, double delta);   // bd_factor(d) d^d/d! (1/delta+1)^d

// f(k) = d!/(d^{k-1}(d-k+1)!) (k/12 + 1/2); argmax over k in {1..d} equals
// -3 + ceil(sqrt(16+d)) clamped to that range.
double f_d(int d, int k);
int f_argmax(int d);          // by scan, first maximum
int f_argmax_formula(int d);  // clamped closed form

// g_d(k) = d!/(d^{k-1}(d-k+1)!) (k/12 + 1/2 + 1/(k+1)).
// The argmax scan runs over k in {2..d}: k=1 corresponds to the separately
// handled lowest coefficient and g_d(1) = 13/12 identically in d.
double g_d(int d, int k);
int g_argmax(int d);

// h(k) = ((d-k+1)/d)((k+1)/(k+2))((k^2+9k+26)/(k^2+7k+18)) and
// u(k) = (d/(d-k+1)) h(k); u is independent of d and peaks at k = 7.
double h_of_k(int k, int d);
double u_of_k(int k, int d);

// a_{d-k} = C(d,k+1) + (d/2) C(d,k) + (d^2/12) C(d,k-1) and
// A_{d-k} = k! a_{d-k} / d^{k+1}, evaluated exactly. Requires 2 <= k <= d-2, d >= 4.
Rational a_coeff_exact(int d, int k);
Rational A_coeff_exact(int d, int k);
double a_coeff(int d, int k);
double A_coeff(int d, int k);

// f_0(k) = 1/(k+1) + 1/2 + k/12 (the k-dependent factor shared by g_d and
// the shifted power-sum ratio at r = 0).
double f0_of_k(int k);

// k_0(d) = min(-3 + ceil(sqrt(16+d)), 1 + ceil(0.0544 d)).
int k0_of_d(int d);

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    bool pass = true;
    std::vector<CheckItem> items;
    void add(std::string name, bool ok, std::string detail = {});
};

// Exhaustive exact check A_{d-k} <= 1 for all 4 <= d <= d_max (<= 101),
// 2 <= k <= d-2.
CheckReport check_A_coeffs(int d_max = 101);

// Tail checks for d > 101:
//  (i)   1.1^{-k+1} f_0(k) < 1 for k = 2..39
//  (ii)  1.1^{-k+1} <= 1/k for 40 <= k <= 200
//  (iii) 1.1^{-(d-101)} f_0(k_0(d)) <= 1 for 103 <= d <= d_max
//  (iv)  d = 102: argmax_{k>=2} g_102 = 7, A(102,7) < 1.01, g_102(7)/1.1 <= 1
CheckReport check_large_d(int d_max);

// Lowest-power coefficient comparisons for a given d:
//   p = 0:   d^2/12 + 1 <= d^d/d!
//   p = 1:   d^2/2 + d^3(d-1)/24 + 1 <= d^d/(d-1)!
//   p = d-1: d^{d-1}/(2(d-2)!) + d^d/(2(d-1)!) <= d^d/(d-1)!
// Exact rationals for d <= 101, log-space comparison beyond.
CheckReport check_small_powers(int d);

}  // namespace dcov
