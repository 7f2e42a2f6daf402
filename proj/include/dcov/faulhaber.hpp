#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dcov/rational.hpp"

namespace dcov {

// Bernoulli number B_k under the B_1 = -1/2 convention, computed from the
// defining recurrence sum_{j=0}^{k} C(k+1,j) B_j = 0 with B_0 = 1.
// Results are cached; the cache is safe for concurrent use.
Rational bernoulli(unsigned k);

// sum_{i=1}^{n} (i+r)^j by direct exact summation. Requires n >= 1, 0 <= r <= 1.
Rational power_sum(unsigned n, unsigned j, const Rational& r);

// Closed form of sum_{i=1}^{n} i^j:
//   n^{j+1}/(j+1) + n^j/2 + sum_{k=2}^{j} (-1)^k B_k/k! (j)_{k-1} n^{j-k+1},
// (j)_{k-1} the falling factorial j!/(j-k+1)!. Equals power_sum(n, j, 0).
Rational faulhaber_closed(unsigned n, unsigned j);

// Right-hand side of the shifted power-sum inequality:
//   (n+r)^{j+1}/(j+1) + (n+r)^j/2 + j (n+r)^{j-1}/12.
Rational gfi_rhs(unsigned n, unsigned j, const Rational& r);

// f_r(j) = (1+r)/(j+1) + 1/2 + j/(12(1+r)), the n = 1 ratio rhs/lhs.
Rational f_r(unsigned j, const Rational& r);

// Real minimizer x_r = sqrt(12)(1+r) - 1 of f_r over (-1, inf); diagnostics only.
double f_r_minimizer(const Rational& r);

struct GfiCase {
    unsigned n = 0;
    unsigned j = 0;
    Rational r;
};

struct GfiReport {
    bool pass = true;
    std::size_t checked = 0;
    std::size_t equality_count = 0;
    std::vector<GfiCase> equalities;  // capped at equality_cap
    std::optional<GfiCase> counterexample;
    static constexpr std::size_t equality_cap = 128;
};

// Exhaustive exact check of power_sum(n,j,r) <= gfi_rhs(n,j,r) over
// 1 <= n <= n_max, 1 <= j <= j_max, r in r_grid. A counterexample is a
// report outcome, not an error.
GfiReport verify_gfi(unsigned n_max, unsigned j_max, std::span<const Rational> r_grid);

// Evenly spaced rational grid {0, 1/k, ..., 1}.
std::vector<Rational> rational_grid(unsigned k);

}  // namespace dcov
