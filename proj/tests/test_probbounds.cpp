#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dcov/bounds.hpp"
#include "dcov/probbounds.hpp"

TEST_CASE("error function family") {
    CHECK(dcov::normal_cdf(0.0) == 0.5);
    CHECK(std::fabs(dcov::normal_cdf(8.0) - 1.0) <= 1e-12);
    // 0.975002104851779565... by quadrature of the density
    CHECK(std::fabs(dcov::normal_cdf(1.96) - 0.9750021048517796) <= 1e-12);
    CHECK(std::fabs(dcov::normal_cdf(-1.96) - 0.0249978951482204) <= 1e-12);

    // agree with the libm implementation well beyond the 1e-12 contract
    for (double x = -6.0; x <= 6.0; x += 0.13) {
        CHECK(dcov::erf_cody(x) == doctest::Approx(std::erf(x)).epsilon(1e-14));
        CHECK(dcov::erfc_cody(x) == doctest::Approx(std::erfc(x)).epsilon(1e-13));
    }
    // erfcx(x) e^{-x^2} = erfc(x)
    for (double x : {0.1, 0.5, 1.0, 3.0, 5.0, 10.0})
        CHECK(dcov::erfcx_cody(x) * std::exp(-x * x) ==
              doctest::Approx(std::erfc(x)).epsilon(1e-13));
    // erfcx stays finite where e^{x^2} would overflow
    CHECK(dcov::erfcx_cody(40.0) > 0.0);
    CHECK(dcov::erfcx_cody(40.0) < 1.0);
}

TEST_CASE("chaining parameters") {
    const auto p = dcov::chaining_params(12, 0.0871, 0.0);
    CHECK(p.c_mu == doctest::Approx(3.78759).epsilon(1e-4));
    CHECK(p.c1 == doctest::Approx(0.61568).epsilon(1e-4));
    CHECK(p.alpha == 1.67681);
    CHECK(p.beta == 10.45292);
    CHECK_THROWS_AS(dcov::chaining_params(1, 0.1, 0.0), std::domain_error);
}

TEST_CASE("constant-consistency web") {
    CHECK(std::fabs(std::sqrt(dcov::kBeta / dcov::kAlpha) - 2.49676) <= 1e-5);
    CHECK(std::fabs(1.0 / std::sqrt(dcov::kAlpha) - 0.77225) <= 5e-5);
    CHECK(std::fabs(dcov::kBeta + 1.0 + std::log(1.0 + 1.0 / std::sqrt(2.0 * M_PI)) -
                    11.78864) <= 1e-5);
}

TEST_CASE("tail probability bound") {
    CHECK(std::fabs(dcov::thm31_probability(2.5, 2, 0.0) - 0.0528) <= 5e-4);
    CHECK(dcov::thm31_probability(3.0, 2, 0.0) >= 0.9999);
    CHECK(dcov::thm31_probability(2.49676, 2, 0.0) <= 1e-4);  // exponent crosses zero
    CHECK(dcov::thm31_probability(1.0, 5, 0.0) == 0.0);       // clamped
    CHECK(dcov::thm31_probability(100.0, 2, 0.0) == 1.0);
}

TEST_CASE("every probability output stays in [0,1]") {
    for (double c : {0.1, 1.0, 2.5, 5.0, 50.0})
        for (int d : {2, 7, 30})
            for (double rho : {0.0, 1.0}) {
                auto in01 = [](double p) { return p >= 0.0 && p <= 1.0; };
                CHECK(in01(dcov::thm31_probability(c, d, rho)));
                CHECK(in01(dcov::c0_bound_probability(c, d, 1000, rho)));
                CHECK(in01(dcov::weighted_prob_cor310(c, d, rho)));
            }
}

TEST_CASE("coefficient from target probability") {
    // q -> 0, d large: coefficient approaches 0.7723 sqrt(beta)
    CHECK(dcov::thm31_c_of_q(1e-12, 10000, 0.0) ==
          doctest::Approx(0.7723 * std::sqrt(10.45292)).epsilon(1e-9));
    CHECK(dcov::thm31_c_of_q(0.5, 2, 0.0) ==
          doctest::Approx(0.7723 * std::sqrt(10.45292 + std::log(2.0) / 2.0)).epsilon(1e-12));
    for (double q : {0.1, 0.5, 0.9, 0.99})
        for (int d : {2, 3, 10})
            for (double rho : {0.0, 0.5}) {
                const double c = dcov::thm31_c_of_q(q, d, rho) * (1.0 + 1e-9);
                CHECK(dcov::thm31_probability(c, d, rho) >= q);
            }
}

TEST_CASE("expectation bound coefficients") {
    const auto b2 = dcov::expected_disc_bound(2, 64);
    CHECK(std::fabs(b2.simple - 2.55648) <= 1e-4);
    CHECK(b2.tight == doctest::Approx(2.5551386722943404).epsilon(1e-9));
    const auto b3 = dcov::expected_disc_bound(3, 64);
    CHECK(std::fabs(b3.simple - 2.53657) <= 1e-4);
    for (int d : {2, 5, 10, 20, 50})
        for (std::size_t n : {10u, 100u, 10000u}) {
            const auto b = dcov::expected_disc_bound(d, n);
            CHECK(b.tight <= b.simple);
            // the tight form exceeds the leading constant only where the
            // tail integral is nonempty (alpha N >= beta d)
            if (dcov::kAlpha * static_cast<double>(n) >= dcov::kBeta * d)
                CHECK(b.tight >= std::sqrt(dcov::kBeta / dcov::kAlpha));
        }
    // both coefficients converge to sqrt(beta/alpha)
    const auto blim = dcov::expected_disc_bound(10000, 100000);
    CHECK(std::fabs(blim.simple - 2.49676) <= 1e-3);
    CHECK(std::fabs(blim.tight - 2.49676) <= 1e-3);
    // no overflow where e^{beta d} alone would blow up
    CHECK(std::isfinite(dcov::expected_disc_bound(100, 10000).tight));
}

TEST_CASE("relaxed-dependence bounds") {
    CHECK(dcov::c0_eta(4, 2) == doctest::Approx(3.3 * M_E).epsilon(1e-12));
    CHECK(dcov::c0_eta(1000000, 2) > 3.3 * M_E);
    // the eta choice satisfies (eta/(b_d e) - 1) sqrt(log eta) > sqrt(2N/d)
    // across the working grid
    for (int d = 1; d <= 50; ++d)
        for (std::size_t n = 1; n <= (1u << 20); n *= 2) {
            const double eta = dcov::c0_eta(n, d);
            const double lhs = (eta / (dcov::bd_factor(d) * M_E) - 1.0) * std::sqrt(std::log(eta));
            CHECK(lhs > std::sqrt(2.0 * static_cast<double>(n) / d));
        }
    // probability monotone increasing in c for c >= 2 at (d,N,rho) = (5,1000,0)
    double prev = dcov::c0_bound_probability(2.0, 5, 1000, 0.0);
    for (double c = 2.1; c <= 6.0; c += 0.1) {
        const double cur = dcov::c0_bound_probability(c, 5, 1000, 0.0);
        CHECK(cur >= prev);
        prev = cur;
    }
    const double t = dcov::c0_theta_bound(0.5, 3, 500, 0.0);
    CHECK(t == doctest::Approx(std::sqrt(2.0 / 500.0) *
                               std::sqrt(3.0 * std::log(dcov::c0_eta(500, 3)) + std::log(4.0)))
                   .epsilon(1e-12));
}

TEST_CASE("weighted-discrepancy bounds") {
    // |u| = 1: the subset log term vanishes
    CHECK(dcov::weighted_bound_cor39(5, 1, 100) ==
          doctest::Approx(0.7723 / 10.0 *
                          std::sqrt(10.45292 + 1.0 + std::log(1.0 + 1.0 / std::sqrt(2.0 * M_PI)) +
                                    std::log(5.0)))
              .epsilon(1e-12));
    CHECK(dcov::weighted_bound_cor39(8, 3, 100) > dcov::weighted_bound_cor39(4, 3, 100));

    CHECK(dcov::weighted_prob_cor310(100.0, 3, 0.0) == 1.0);
    // d = 1 reduces to the plain tail form
    const double c = 2.6;
    CHECK(dcov::weighted_prob_cor310(c, 1, 0.0) ==
          doctest::Approx(1.0 - std::exp(-(dcov::kAlpha * c * c - dcov::kBeta))).epsilon(1e-12));
    for (double theta : {0.5, 0.9})
        for (int d : {1, 3, 7}) {
            const double cc = dcov::weighted_theta_coeff(theta, d, 0.0) * (1.0 + 1e-12);
            CHECK(dcov::weighted_prob_cor310(cc, d, 0.0) >= theta - 1e-9);
        }
}

TEST_CASE("chaining tail inequality") {
    // literal form: fails at the default constants (see README, Known limitations)
    const auto r = dcov::chaining_tail_check(12, 0.0871, 2, 0.0);
    CHECK(r.lhs == doctest::Approx(7.4910495240228065).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK_FALSE(r.holds);

    // diagnostic variant: holds on the whole grid and is monotone in d and rho
    double prev_lhs = 1e300;
    for (int d = 2; d <= 20; ++d) {
        for (double rho : {0.0, 0.5, 1.0}) {
            const auto v = dcov::chaining_tail_check(12, 0.0871, d, rho, true);
            CHECK(v.holds);
        }
        const auto v0 = dcov::chaining_tail_check(12, 0.0871, d, 0.0, true);
        CHECK(v0.lhs <= prev_lhs);
        prev_lhs = v0.lhs;
    }
    CHECK(dcov::chaining_tail_check(12, 0.0871, 2, 0.0, true).lhs ==
          doctest::Approx(1.06079).epsilon(1e-4));
}

TEST_CASE("replications are substream-deterministic") {
    dcov::SamplerSpec spec;
    spec.d = 2;
    spec.n = 16;
    spec.seed = 5;
    const auto a = dcov::run_replications(spec, 40);
    const auto b = dcov::run_replications(spec, 40);
    const auto c = dcov::serial_ref::run_replications(spec, 40);
    CHECK(a == b);
    CHECK(a == c);
    // prefix stability: the first r replications do not depend on reps
    const auto head = dcov::run_replications(spec, 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(head[i] == a[i]);
}

TEST_CASE("empirical one-sided checks at desk scale") {
    dcov::SamplerSpec spec;
    spec.d = 2;
    spec.n = 32;
    spec.seed = 99;
    const auto dstar = dcov::run_replications(spec, 60);
    const auto prob = dcov::estimate_probability(dstar, 2.5, 2, 32);
    CHECK(prob.fraction >= 0.0528);
    CHECK(prob.wilson_lo <= prob.fraction);
    CHECK(prob.fraction <= prob.wilson_hi);
    CHECK(prob.wilson_hi <= 1.0);

    const auto e = dcov::estimate_expectation(dstar);
    const auto bound = dcov::expected_disc_bound(2, 32);
    CHECK(e.mean <= bound.simple * std::sqrt(2.0 / 32.0));
    CHECK(e.stderr_mean > 0.0);

    spec.kind = dcov::SamplerKind::LHS;
    const auto lhs_dstar = dcov::run_replications(spec, 60);
    const auto el = dcov::estimate_expectation(lhs_dstar);
    CHECK(el.mean <= e.mean + 2.0 * (e.stderr_mean + el.stderr_mean));
}
