#include "dcov/probbounds.hpp"

#include <cmath>
#include <stdexcept>

#include "dcov/bounds.hpp"
#include "dcov/discrepancy.hpp"

namespace dcov {

namespace {
constexpr double kLn2 = 0.6931471805599453;
constexpr double kInvSqrtAlpha = 0.7723;  // printed companion of alpha

double clamp01(double p) { return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p); }
}  // namespace

ChainingParams chaining_params(int mu, double tau_mu, double rho) {
    if (mu < 2) throw std::domain_error("chaining_params: mu must be >= 2");
    if (!(tau_mu > 0.0)) throw std::domain_error("chaining_params: tau_mu must be positive");
    if (rho < 0.0) throw std::domain_error("chaining_params: rho must be nonnegative");
    ChainingParams p;
    p.mu = mu;
    p.tau_mu = tau_mu;
    p.rho = rho;
    p.c_mu = 1.0 / (1.0 - std::sqrt((mu + 1.0) / (2.0 * mu)));
    p.c1 = std::sqrt(4.0 * tau_mu * (1.0 + 1.0 / (3.0 * p.c_mu)));
    return p;
}

double thm31_probability(double c, int d, double rho, double alpha, double beta) {
    if (!(c > 0.0) || d < 2 || rho < 0.0)
        throw std::domain_error("thm31_probability: need c > 0, d >= 2, rho >= 0");
    return clamp01(1.0 - std::exp(-(alpha * c * c - beta - rho) * d));
}

double thm31_c_of_q(double q, int d, double rho) {
    if (!(q > 0.0) || !(q < 1.0) || d < 2 || rho < 0.0)
        throw std::domain_error("thm31_c_of_q: need q in (0,1), d >= 2, rho >= 0");
    return kInvSqrtAlpha * std::sqrt(kBeta + rho + std::log(1.0 / (1.0 - q)) / d);
}

ExpectationBound expected_disc_bound(int d, std::size_t n, double alpha, double beta) {
    if (d < 1 || n < 1) throw std::domain_error("expected_disc_bound: need d,N >= 1");
    ExpectationBound out;
    const double lead = std::sqrt(beta / alpha);
    out.simple = lead * (1.0 + 1.0 / (2.0 * beta * d));
    // e^{beta d}(Phi(sqrt(2 alpha N)) - Phi(sqrt(2 beta d)))
    //   = [erfcx(sqrt(beta d)) - e^{beta d - alpha N} erfcx(sqrt(alpha N))]/2
    const double bd = beta * d;
    const double an = alpha * static_cast<double>(n);
    const double bracket =
        0.5 * (erfcx_cody(std::sqrt(bd)) - std::exp(bd - an) * erfcx_cody(std::sqrt(an)));
    out.tight = lead * (1.0 + std::sqrt(M_PI / bd) * bracket);
    return out;
}

double c0_bound_probability(double c, int d, std::size_t n, double rho) {
    if (!(c > 0.0) || d < 1 || n < 1 || rho < 0.0)
        throw std::domain_error("c0_bound_probability: bad arguments");
    const double xi = std::max(1.0, std::log(static_cast<double>(n) / d));
    const double expo = (-0.5 * (c * c - 1.0) * xi + rho + std::log(M_E * (2.0 / c + 1.0)) +
                         std::log(bd_factor(d)) / d) * d;
    return clamp01(1.0 - 2.0 * std::exp(expo));
}

double c0_eta(std::size_t n, int d) {
    if (d < 1 || n < 1) throw std::domain_error("c0_eta: need d,N >= 1");
    const double base = 3.3 * M_E;
    return base * std::sqrt(std::max(1.0, static_cast<double>(n) / (2.0 * d * std::log(base))));
}

double c0_theta_bound(double theta, int d, std::size_t n, double rho) {
    if (!(theta > 0.0) || !(theta < 1.0) || d < 1 || n < 1 || rho < 0.0)
        throw std::domain_error("c0_theta_bound: bad arguments");
    const double eta = c0_eta(n, d);
    return std::sqrt(2.0 / static_cast<double>(n)) *
           std::sqrt(d * std::log(eta) + rho * d + std::log(2.0 / (1.0 - theta)));
}

double weighted_bound_cor39(int d, int u_size, std::size_t n) {
    if (d < 1 || u_size < 1 || u_size > d || n < 1)
        throw std::domain_error("weighted_bound_cor39: need 1 <= |u| <= d, N >= 1");
    const double k = kBeta + 1.0 + std::log(1.0 + 1.0 / std::sqrt(2.0 * M_PI));
    const double inner = k + std::log(static_cast<double>(d)) -
                         (1.0 + 1.0 / (2.0 * u_size)) * std::log(static_cast<double>(u_size));
    return kInvSqrtAlpha / std::sqrt(static_cast<double>(n)) * std::sqrt(inner) *
           std::sqrt(static_cast<double>(u_size));
}

double weighted_prob_cor310(double c, int d, double rho) {
    if (!(c > 0.0) || d < 1 || rho < 0.0)
        throw std::domain_error("weighted_prob_cor310: bad arguments");
    return clamp01(2.0 - std::pow(1.0 + std::exp(-(kAlpha * c * c - kBeta - rho)), d));
}

double weighted_theta_coeff(double theta, int d, double rho) {
    if (!(theta > 0.0) || !(theta < 1.0) || d < 1 || rho < 0.0)
        throw std::domain_error("weighted_theta_coeff: bad arguments");
    const double inner = std::pow(2.0 - theta, 1.0 / d) - 1.0;  // > 0 always
    return std::sqrt((rho + kBeta - std::log(inner)) / kAlpha);
}

ChainingTailCheck chaining_tail_check(int mu, double tau_mu, int d, double rho, bool drop_trailing_sigma) {
    if (mu < 2 || !(tau_mu > 0.0) || d < 2 || rho < 0.0)
        throw std::domain_error("chaining_tail_check: bad arguments");
    const double log_bd = std::log(bd_factor(d));
    const double sigma = mu - std::log(std::pow(2.0, mu) + 1.0) - 1.0 - log_bd / d - kLn2 / d;
    const double zeta = std::log1p(std::pow(2.0, -mu - 1)) + kLn2 + kLn2 / d + log_bd / d;
    const double a = mu + rho - sigma;
    double num_exp = a * (mu * tau_mu - 1.0) + (1.0 - kLn2) * mu - 1.0 - zeta;
    if (!drop_trailing_sigma) num_exp -= sigma;
    const double den = 1.0 - std::exp(-(a * tau_mu - kLn2) * d);
    ChainingTailCheck r;
    r.lhs = 1.0 + std::exp(-num_exp * d) / den;
    r.rhs = std::sqrt(M_PI * d / 2.0);
    r.holds = r.lhs < r.rhs;
    return r;
}

namespace {
std::vector<double> run_replications_impl(const SamplerSpec& spec, std::size_t reps,
                                          std::size_t corner_cap, bool parallel) {
    if (reps < 1) throw std::domain_error("run_replications: reps must be >= 1");
    std::vector<double> out(reps);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long r = 0; r < static_cast<long long>(reps); ++r) {
            const PointSet p = draw_sample(spec, static_cast<std::uint64_t>(r));
            out[static_cast<std::size_t>(r)] = star_disc_exact(p, corner_cap).value;
        }
    } else {
        for (std::size_t r = 0; r < reps; ++r) {
            const PointSet p = draw_sample(spec, r);
            out[r] = serial_ref::star_disc_exact(p, corner_cap).value;
        }
    }
    return out;
}
}  // namespace

std::vector<double> run_replications(const SamplerSpec& spec, std::size_t reps,
                                     std::size_t corner_cap) {
    return run_replications_impl(spec, reps, corner_cap, true);
}

namespace serial_ref {
std::vector<double> run_replications(const SamplerSpec& spec, std::size_t reps,
                                     std::size_t corner_cap) {
    return run_replications_impl(spec, reps, corner_cap, false);
}
}  // namespace serial_ref

ProbabilityEstimate estimate_probability(const std::vector<double>& dstar_values, double c,
                                         int d, std::size_t n) {
    if (dstar_values.empty()) throw std::domain_error("estimate_probability: no replications");
    const double threshold = c * std::sqrt(static_cast<double>(d) / static_cast<double>(n));
    ProbabilityEstimate e;
    e.reps = dstar_values.size();
    for (double v : dstar_values)
        if (v <= threshold) ++e.hits;
    const double nn = static_cast<double>(e.reps);
    const double phat = static_cast<double>(e.hits) / nn;
    e.fraction = phat;
    const double z = 1.959963984540054;  // 95%
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (phat + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
    // analytically the interval contains phat; keep that true under rounding
    e.wilson_lo = std::min(std::max(0.0, center - half), phat);
    e.wilson_hi = std::max(std::min(1.0, center + half), phat);
    return e;
}

ExpectationEstimate estimate_expectation(const std::vector<double>& dstar_values) {
    if (dstar_values.empty()) throw std::domain_error("estimate_expectation: no replications");
    ExpectationEstimate e;
    e.reps = dstar_values.size();
    double sum = 0.0;
    for (double v : dstar_values) sum += v;
    e.mean = sum / static_cast<double>(e.reps);
    if (e.reps > 1) {
        double ss = 0.0;
        for (double v : dstar_values) ss += (v - e.mean) * (v - e.mean);
        e.stderr_mean = std::sqrt(ss / (static_cast<double>(e.reps) - 1.0) /
                                  static_cast<double>(e.reps));
    }
    return e;
}

}  // namespace dcov
