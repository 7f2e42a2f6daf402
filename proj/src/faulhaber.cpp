#include "dcov/faulhaber.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace dcov {

namespace {
std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // g_bernoulli[k] = B_k
}  // namespace

Rational bernoulli(unsigned k) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) g_bernoulli.push_back(Rational(1));
    while (g_bernoulli.size() <= k) {
        unsigned m = static_cast<unsigned>(g_bernoulli.size());
        // sum_{j=0}^{m} C(m+1,j) B_j = 0  =>  B_m = -1/C(m+1,m) * sum_{j<m} C(m+1,j) B_j
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * g_bernoulli[j];
        g_bernoulli.push_back(-acc / Rational(binomial(m + 1, m)));
    }
    return g_bernoulli[k];
}

static void check_triple(unsigned n, const Rational& r) {
    if (n < 1) throw std::domain_error("power_sum: n must be >= 1");
    if (r < Rational(0) || r > Rational(1))
        throw std::domain_error("power_sum: r must lie in [0,1]");
}

Rational power_sum(unsigned n, unsigned j, const Rational& r) {
    check_triple(n, r);
    Rational acc(0);
    for (unsigned i = 1; i <= n; ++i)
        acc += (Rational(static_cast<long>(i)) + r).pow(j);
    return acc;
}

Rational faulhaber_closed(unsigned n, unsigned j) {
    if (n < 1 || j < 1) throw std::domain_error("faulhaber_closed: need n,j >= 1");
    const Rational nn(static_cast<long>(n));
    Rational acc = nn.pow(j + 1) / Rational(static_cast<long>(j) + 1)
                 + nn.pow(j) / Rational(2);
    for (unsigned k = 2; k <= j; ++k) {
        Rational bk = bernoulli(k);
        if (bk == Rational(0)) continue;
        // falling factorial (j)_{k-1} = j (j-1) ... (j-k+2)
        mpz_class falling(1);
        for (unsigned t = 0; t + 1 < k; ++t) falling *= (j - t);
        Rational term = bk / Rational(factorial(k)) * Rational(falling) * nn.pow(j - k + 1);
        if (k % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

Rational gfi_rhs(unsigned n, unsigned j, const Rational& r) {
    check_triple(n, r);
    if (j < 1) throw std::domain_error("gfi_rhs: j must be >= 1");
    const Rational base = Rational(static_cast<long>(n)) + r;
    return base.pow(j + 1) / Rational(static_cast<long>(j) + 1)
         + base.pow(j) / Rational(2)
         + Rational(static_cast<long>(j)) * base.pow(j - 1) / Rational(12);
}

Rational f_r(unsigned j, const Rational& r) {
    if (j < 1) throw std::domain_error("f_r: j must be >= 1");
    const Rational one_plus_r = Rational(1) + r;
    return one_plus_r / Rational(static_cast<long>(j) + 1)
         + Rational(1, 2)
         + Rational(static_cast<long>(j)) / (Rational(12) * one_plus_r);
}

double f_r_minimizer(const Rational& r) {
    return std::sqrt(12.0) * (1.0 + r.to_double()) - 1.0;
}

GfiReport verify_gfi(unsigned n_max, unsigned j_max, std::span<const Rational> r_grid) {
    if (n_max < 1 || j_max < 1) throw std::domain_error("verify_gfi: need n_max,j_max >= 1");
    GfiReport rep;
    for (const Rational& r : r_grid) {
        for (unsigned j = 1; j <= j_max; ++j) {
            // running sum over n avoids recomputing the left-hand side
            Rational lhs(0);
            for (unsigned n = 1; n <= n_max; ++n) {
                lhs += (Rational(static_cast<long>(n)) + r).pow(j);
                const Rational rhs = gfi_rhs(n, j, r);
                ++rep.checked;
                if (lhs > rhs) {
                    rep.pass = false;
                    if (!rep.counterexample) rep.counterexample = GfiCase{n, j, r};
                    return rep;
                }
                if (lhs == rhs) {
                    ++rep.equality_count;
                    if (rep.equalities.size() < GfiReport::equality_cap)
                        rep.equalities.push_back(GfiCase{n, j, r});
                }
            }
        }
    }
    return rep;
}

std::vector<Rational> rational_grid(unsigned k) {
    if (k == 0) throw std::domain_error("rational_grid: k must be >= 1");
    std::vector<Rational> g;
    g.reserve(k + 1);
    for (unsigned i = 0; i <= k; ++i) g.push_back(Rational(static_cast<long>(i), static_cast<long>(k)));
    return g;
}

}  // namespace dcov
