#include "dcov/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dcov {

namespace {
constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn11 = 0.09531017980432486;  // ln(1.1)

double exp_guarded(double log_value) {
    if (log_value > 709.0) return std::numeric_limits<double>::infinity();
    return std::exp(log_value);
}

// log(d^d / d!)
double log_dd_over_fact(int d) {
    return d * std::log(static_cast<double>(d)) - std::lgamma(static_cast<double>(d) + 1.0);
}

void require_params(int d, double delta) {
    if (d < 1) throw std::domain_error("bounds: d must be >= 1");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::domain_error("bounds: delta must lie in (0,1)");
}
}  // namespace

long bracketing_1d(double delta) {
    if (!(delta > 0.0) || !(delta <= 1.0))
        throw std::domain_error("bracketing_1d: delta must lie in (0,1]");
    long n = static_cast<long>(std::ceil(1.0 / delta));
    while (n > 1 && (static_cast<double>(n) - 1.0) * delta >= 1.0) --n;
    while (static_cast<double>(n) * delta < 1.0) ++n;
    return n;
}

double bound_gnewuch(int d, double delta) {
    require_params(d, delta);
    return exp_guarded((d - 1) * kLn2 + log_dd_over_fact(d) + d * std::log1p(1.0 / delta));
}

double bound_pw(int d, double delta) {
    require_params(d, delta);
    double main = exp_guarded((d - 2) * kLn2 + log_dd_over_fact(d) + d * std::log1p(1.0 / delta));
    return main + 0.5 * (1.0 / delta + 1.0);
}

double bound_d2(double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::domain_error("bound_d2: delta must lie in (0,1)");
    const double inv = 1.0 / delta;
    return 2.0 * kLn2 * inv * inv + 3.0 * (kLn2 + 1.0) * inv - (13.0 / 9.0 * kLn2 - 1.0);
}

double bd_factor(int d) {
    if (d < 1) throw std::domain_error("bd_factor: d must be >= 1");
    return d <= 101 ? 1.0 : std::exp((d - 101) * kLn11);
}

double bound_general(int d, double delta) {
    require_params(d, delta);
    double log_bd = d <= 101 ? 0.0 : (d - 101) * kLn11;
    return exp_guarded(log_bd + log_dd_over_fact(d) + d * std::log1p(1.0 / delta));
}

namespace {
// d!/(d^{k-1}(d-k+1)!) = prod_{i=0}^{k-2} (d-i)/d, as a double
double q_prefactor(int d, int k) {
    double q = 1.0;
    for (int i = 0; i <= k - 2; ++i) q *= static_cast<double>(d - i) / d;
    return q;
}

void require_k_range(int d, int k) {
    if (k < 1 || k > d) throw std::domain_error("bounds: k must lie in {1..d}");
}
}  // namespace

double f_d(int d, int k) {
    require_k_range(d, k);
    return q_prefactor(d, k) * (k / 12.0 + 0.5);
}

namespace {
// Unreduced exact fraction for the argmax scans: they must resolve exact
// ties (the ratio is exactly 1 whenever sqrt(16+d) is an integer), which
// doubles cannot, and gcd-canonicalized rationals are needlessly slow here.
struct ExactFrac {
    mpz_class num;
    mpz_class den;  // > 0
    bool operator>(const ExactFrac& o) const { return num * o.den > o.num * den; }
};
}  // namespace

int f_argmax(int d) {
    if (d < 1) throw std::domain_error("f_argmax: d must be >= 1");
    // f(k) = [prod_{i=0}^{k-2}(d-i)] (k+6) / (12 d^{k-1}), prefactors updated
    // incrementally
    mpz_class pref(1), dpow(12);
    int best_k = 1;
    ExactFrac best{pref * 7, dpow};
    for (int k = 2; k <= d; ++k) {
        pref *= (d - k + 2);
        dpow *= d;
        ExactFrac cand{pref * (k + 6), dpow};
        if (cand > best) { best = std::move(cand); best_k = k; }
    }
    return best_k;
}

int f_argmax_formula(int d) {
    if (d < 1) throw std::domain_error("f_argmax_formula: d must be >= 1");
    int k = -3 + static_cast<int>(std::ceil(std::sqrt(16.0 + d)));
    if (k < 1) k = 1;
    if (k > d) k = d;
    return k;
}

double g_d(int d, int k) {
    require_k_range(d, k);
    return q_prefactor(d, k) * (k / 12.0 + 0.5 + 1.0 / (k + 1));
}

int g_argmax(int d) {
    if (d < 2) throw std::domain_error("g_argmax: d must be >= 2");
    // g_d(k) = [prod_{i=0}^{k-2}(d-i)] (k^2+7k+18) / (12 (k+1) d^{k-1});
    // g is not unimodal (u(k) peaks at k=7), so this is a value scan
    mpz_class pref(d), dpow(12 * static_cast<long>(d));
    int best_k = 2;
    ExactFrac best{pref * 36, dpow * 3};
    for (int k = 3; k <= d; ++k) {
        pref *= (d - k + 2);
        dpow *= d;
        ExactFrac cand{pref * (static_cast<long>(k) * k + 7 * k + 18),
                       dpow * (k + 1)};
        if (cand > best) { best = std::move(cand); best_k = k; }
    }
    return best_k;
}

double h_of_k(int k, int d) {
    if (k < 1 || k >= d) throw std::domain_error("h_of_k: need 1 <= k < d");
    return (static_cast<double>(d - k + 1) / d) * (static_cast<double>(k + 1) / (k + 2)) *
           (static_cast<double>(k) * k + 9.0 * k + 26.0) / (static_cast<double>(k) * k + 7.0 * k + 18.0);
}

double u_of_k(int k, int d) {
    if (k < 1 || k >= d) throw std::domain_error("u_of_k: need 1 <= k < d");
    return (static_cast<double>(d) / (d - k + 1)) * h_of_k(k, d);
}

namespace {
void require_a_range(int d, int k) {
    if (d < 4 || k < 2 || k > d - 2)
        throw std::domain_error("A_coeff: need d >= 4 and 2 <= k <= d-2");
}
}  // namespace

Rational a_coeff_exact(int d, int k) {
    require_a_range(d, k);
    const unsigned long du = static_cast<unsigned long>(d);
    return Rational(binomial(du, k + 1))
         + Rational(d, 2) * Rational(binomial(du, k))
         + Rational(static_cast<long>(d) * d, 12) * Rational(binomial(du, k - 1));
}

Rational A_coeff_exact(int d, int k) {
    return Rational(factorial(static_cast<unsigned long>(k))) * a_coeff_exact(d, k)
         / Rational(int_pow(mpz_class(d), static_cast<unsigned long>(k) + 1));
}

double a_coeff(int d, int k) { return a_coeff_exact(d, k).to_double(); }
double A_coeff(int d, int k) { return A_coeff_exact(d, k).to_double(); }

double f0_of_k(int k) {
    if (k < 1) throw std::domain_error("f0_of_k: k must be >= 1");
    return 1.0 / (k + 1) + 0.5 + k / 12.0;
}

int k0_of_d(int d) {
    if (d < 1) throw std::domain_error("k0_of_d: d must be >= 1");
    int a = -3 + static_cast<int>(std::ceil(std::sqrt(16.0 + d)));
    int b = 1 + static_cast<int>(std::ceil(0.0544 * d));
    return a < b ? a : b;
}

void CheckReport::add(std::string name, bool ok, std::string detail) {
    if (!ok) pass = false;
    items.push_back(CheckItem{std::move(name), ok, std::move(detail)});
}

CheckReport check_A_coeffs(int d_max) {
    if (d_max < 4 || d_max > 101)
        throw std::domain_error("check_A_coeffs: d_max must lie in [4,101]");
    CheckReport rep;
    const Rational one(1);
    Rational worst(0);
    int worst_d = 0, worst_k = 0;
    bool all_ok = true;
    for (int d = 4; d <= d_max; ++d) {
        for (int k = 2; k <= d - 2; ++k) {
            Rational a = A_coeff_exact(d, k);
            if (a > worst) { worst = a; worst_d = d; worst_k = k; }
            if (a > one) all_ok = false;
        }
    }
    std::ostringstream os;
    os << "max A = " << worst.to_double() << " at (d,k)=(" << worst_d << "," << worst_k << ")";
    rep.add("A_{d-k} <= 1 for 4 <= d <= " + std::to_string(d_max), all_ok, os.str());
    return rep;
}

CheckReport check_large_d(int d_max) {
    if (d_max < 102) throw std::domain_error("check_large_d: d_max must be >= 102");
    CheckReport rep;

    bool i_ok = true;
    double i_worst = 0.0;
    for (int k = 2; k <= 39; ++k) {
        double v = std::exp(-(k - 1) * kLn11) * f0_of_k(k);
        if (v > i_worst) i_worst = v;
        if (!(v < 1.0)) i_ok = false;
    }
    rep.add("1.1^{-k+1} f0(k) < 1 for k=2..39", i_ok, "max = " + std::to_string(i_worst));

    bool ii_ok = true;
    for (int k = 40; k <= 200; ++k)
        if (!(std::exp(-(k - 1) * kLn11) <= 1.0 / k)) ii_ok = false;
    rep.add("1.1^{-k+1} <= 1/k for k=40..200", ii_ok);

    bool iii_ok = true;
    double iii_worst = 0.0;
    int iii_worst_d = 0;
    for (int d = 103; d <= d_max; ++d) {
        double v = std::exp(-(d - 101) * kLn11) * f0_of_k(k0_of_d(d));
        if (v > iii_worst) { iii_worst = v; iii_worst_d = d; }
        if (!(v <= 1.0)) iii_ok = false;
    }
    std::ostringstream os3;
    os3 << "max gtilde = " << iii_worst << " at d=" << iii_worst_d;
    rep.add("gtilde_d(k0(d)) <= 1 for d=103.." + std::to_string(d_max), iii_ok, os3.str());

    // d = 102 boundary case
    const int km = g_argmax(102);
    const double a102 = A_coeff(102, 7);
    const double g102 = g_d(102, 7);
    rep.add("argmax_{k>=2} g_102 = 7", km == 7, "argmax = " + std::to_string(km));
    rep.add("A(102,7) < 1.01", a102 < 1.01, "A = " + std::to_string(a102));
    rep.add("g_102(7)/1.1 <= 1", g102 / 1.1 <= 1.0, "value = " + std::to_string(g102 / 1.1));
    return rep;
}

CheckReport check_small_powers(int d) {
    if (d < 2) throw std::domain_error("check_small_powers: d must be >= 2");
    CheckReport rep;
    if (d <= 101) {
        const mpz_class dd = int_pow(mpz_class(d), static_cast<unsigned long>(d));
        const Rational rhs_p0(dd, factorial(static_cast<unsigned long>(d)));
        const Rational rhs_p1(dd, factorial(static_cast<unsigned long>(d) - 1));
        const Rational lhs_p0 = Rational(static_cast<long>(d) * d, 12) + Rational(1);
        const Rational lhs_p1 = Rational(static_cast<long>(d) * d, 2)
                              + Rational(mpz_class(d) * d * d * (d - 1), mpz_class(24))
                              + Rational(1);
        rep.add("p=0: d^2/12 + 1 <= d^d/d!", lhs_p0 <= rhs_p0);
        rep.add("p=1: d^2/2 + d^3(d-1)/24 + 1 <= d^d/(d-1)!", lhs_p1 <= rhs_p1);
        const Rational lhs_pd1 = Rational(int_pow(mpz_class(d), static_cast<unsigned long>(d) - 1),
                                          mpz_class(2) * factorial(static_cast<unsigned long>(d) - 2))
                               + rhs_p1 / Rational(2);
        rep.add("p=d-1: d^{d-1}/(2(d-2)!) + d^d/(2(d-1)!) <= d^d/(d-1)!", lhs_pd1 <= rhs_p1);
    } else {
        // 80-bit evaluation with a 1e-9 margin: anything that close to the
        // boundary is treated as a failure
        const long double dl = static_cast<long double>(d);
        const long double log_rhs_p0 = dl * std::log(dl) - std::lgamma(dl + 1.0L);
        const long double log_rhs_p1 = dl * std::log(dl) - std::lgamma(dl);
        const long double margin = 1e-9L;
        const long double log_lhs_p0 = std::log(dl * dl / 12.0L + 1.0L);
        const long double log_lhs_p1 =
            std::log(dl * dl / 2.0L + dl * dl * dl * (dl - 1.0L) / 24.0L + 1.0L);
        rep.add("p=0: d^2/12 + 1 <= d^d/d!", log_lhs_p0 <= log_rhs_p0 - margin);
        rep.add("p=1: d^2/2 + d^3(d-1)/24 + 1 <= d^d/(d-1)!", log_lhs_p1 <= log_rhs_p1 - margin);
        // p=d-1 reduces exactly to (d-1)/d <= 1 after dividing by d^d/(2(d-1)!)
        rep.add("p=d-1: d^{d-1}/(2(d-2)!) + d^d/(2(d-1)!) <= d^d/(d-1)!",
                (d - 1.0) / d + 1.0 <= 2.0);
    }
    return rep;
}

}  // namespace dcov
