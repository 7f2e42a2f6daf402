#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dcov/bounds.hpp"

TEST_CASE("one-dimensional bracketing number") {
    CHECK(dcov::bracketing_1d(0.25) == 4);
    CHECK(dcov::bracketing_1d(1.0) == 1);
    CHECK(dcov::bracketing_1d(0.3) == 4);
    CHECK(dcov::bracketing_1d(0.1) == 10);
    // contract in floating arithmetic: minimal n with n*delta >= 1
    for (double delta = 0.013; delta < 1.0; delta += 0.0137) {
        const long n = dcov::bracketing_1d(delta);
        CHECK(static_cast<double>(n) * delta >= 1.0);
        if (n > 1) CHECK(static_cast<double>(n - 1) * delta < 1.0);
    }
    CHECK_THROWS_AS(dcov::bracketing_1d(0.0), std::domain_error);
    CHECK_THROWS_AS(dcov::bracketing_1d(1.5), std::domain_error);
}

TEST_CASE("closed-form bound values") {
    CHECK(dcov::bound_gnewuch(1, 0.5) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(dcov::bound_gnewuch(2, 0.5) == doctest::Approx(36.0).epsilon(1e-12));
    CHECK(dcov::bound_gnewuch(2, 0.1) == doctest::Approx(484.0).epsilon(1e-12));
    CHECK(dcov::bound_pw(2, 0.5) == doctest::Approx(19.5).epsilon(1e-12));
    CHECK(dcov::bound_pw(1, 0.5) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(dcov::bound_pw(2, 0.1) == doctest::Approx(247.5).epsilon(1e-12));
    CHECK(dcov::bound_general(2, 0.5) == doctest::Approx(18.0).epsilon(1e-12));
    CHECK(dcov::bound_general(3, 0.5) == doctest::Approx(121.5).epsilon(1e-12));
    CHECK(dcov::bound_general(1, 0.25) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(std::isinf(dcov::bound_general(400, 0.01)));
}

TEST_CASE("layered d=2 bound") {
    // 8 ln2 + 6(ln2+1) - (13/9 ln2 - 1) and the delta = 0.1 analogue
    CHECK(dcov::bound_d2(0.5) == doctest::Approx(15.702847933697091).epsilon(1e-12));
    CHECK(dcov::bound_d2(0.1) == doctest::Approx(189.42263893464525).epsilon(1e-12));
    // leading-term dominance as delta -> 0
    const double ratio = dcov::bound_d2(1e-6) / (2.0 * std::log(2.0) * 1e12);
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("bd factor") {
    CHECK(dcov::bd_factor(2) == 1.0);
    CHECK(dcov::bd_factor(101) == 1.0);
    CHECK(dcov::bd_factor(103) == doctest::Approx(1.21).epsilon(1e-12));
}

TEST_CASE("bound ordering general <= pw <= gnewuch") {
    for (int d = 2; d <= 101; ++d) {
        for (double delta : {0.5, 0.25, 0.1, 0.01}) {
            const double g = dcov::bound_general(d, delta);
            const double p = dcov::bound_pw(d, delta);
            const double n = dcov::bound_gnewuch(d, delta);
            CHECK(g <= p * (1.0 + 1e-12));
            CHECK(p <= n * (1.0 + 1e-12));
            if (d >= 3) {
                CHECK(g < p);
                CHECK(p < n);
            }
        }
    }
}

TEST_CASE("d=2 layered bound beats the general bound") {
    for (double delta : {0.5, 0.25, 0.1, 0.05, 0.01})
        CHECK(dcov::bound_d2(delta) < dcov::bound_general(2, delta));
}

TEST_CASE("lemma 2.5 maximizer") {
    CHECK(dcov::f_argmax_formula(9) == 2);
    CHECK(dcov::f_argmax_formula(102) == 8);
    CHECK(dcov::f_argmax_formula(1) == 1);
    CHECK(dcov::f_argmax(9) == 2);  // ties at k=3 resolve to the first maximum
    for (int d = 2; d <= 500; ++d)
        CHECK(dcov::f_argmax(d) == dcov::f_argmax_formula(d));
    CHECK_THROWS_AS(dcov::f_d(5, 6), std::domain_error);
}

TEST_CASE("g function and its maximizer") {
    // the k >= 2 scan: k=1 belongs to the separately handled lowest power
    CHECK(dcov::g_d(102, 1) == doctest::Approx(13.0 / 12.0));
    CHECK(dcov::g_argmax(102) == 7);
    CHECK(dcov::g_d(102, 7) == doctest::Approx(1.0402561109396888).epsilon(1e-12));
    CHECK(dcov::g_d(102, 7) / 1.1 <= 1.0);
    CHECK(dcov::g_argmax(36) < 4);
    CHECK(dcov::k0_of_d(103) == 7);
    for (int d = 2; d <= 500; ++d)
        CHECK(dcov::g_argmax(d) <= std::max(2, dcov::k0_of_d(d)));
}

TEST_CASE("u(k) is d-free and peaks at k=7") {
    CHECK(dcov::u_of_k(7, 100) == doctest::Approx(1.05747126).epsilon(1e-8));
    CHECK(dcov::u_of_k(7, 100) == doctest::Approx(1104.0 / 1044.0).epsilon(1e-15));
    for (int k = 1; k <= 60; ++k)
        CHECK(dcov::u_of_k(k, 100) == doctest::Approx(dcov::u_of_k(k, 400)).epsilon(1e-14));
    int argmax = 1;
    double best = dcov::u_of_k(1, 200);
    for (int k = 2; k <= 100; ++k) {
        double v = dcov::u_of_k(k, 200);
        if (v > best) { best = v; argmax = k; }
    }
    CHECK(argmax == 7);
    // u(k) -> 1 from above, roughly like 1 + 1/k
    CHECK(dcov::u_of_k(199, 500) > 1.0);
    CHECK(dcov::u_of_k(199, 500) < 1.01);
    CHECK(dcov::u_of_k(2000, 5000) > 1.0);
    CHECK(dcov::u_of_k(2000, 5000) < 1.001);
}

TEST_CASE("A coefficients stay below one through d = 101") {
    CHECK(dcov::A_coeff(10, 2) <= 1.0);
    // worst case over the whole range sits at (d,k) = (101,7)
    CHECK(dcov::A_coeff(101, 7) == doctest::Approx(0.9997650740995389).epsilon(1e-12));
    auto rep = dcov::check_A_coeffs(101);
    CHECK(rep.pass);
    // A is dominated by g pointwise
    for (int d : {10, 36, 77, 101})
        for (int k = 2; k <= d - 2; ++k)
            CHECK(dcov::A_coeff(d, k) < dcov::g_d(d, k));
    CHECK_THROWS_AS(dcov::A_coeff_exact(10, 9), std::domain_error);
    CHECK_THROWS_AS(dcov::A_coeff_exact(3, 2), std::domain_error);
}

TEST_CASE("large-d tail checks") {
    auto rep = dcov::check_large_d(300);
    CHECK(rep.pass);
    // spot values behind the report
    CHECK(std::exp(-39.0 * std::log(1.1)) <= 1.0 / 40.0);
    const double gtilde103 = dcov::f0_of_k(dcov::k0_of_d(103)) / (1.1 * 1.1);
    CHECK(gtilde103 == doctest::Approx(0.9986225895316803).epsilon(1e-12));
    CHECK(gtilde103 < 0.999);
}

TEST_CASE("low-power coefficient comparisons") {
    for (int d : {2, 3, 5, 10, 50, 101}) {
        auto rep = dcov::check_small_powers(d);
        CHECK(rep.pass);
    }
    CHECK(dcov::check_small_powers(150).pass);  // log-space path
}
