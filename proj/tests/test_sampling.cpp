#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "dcov/sampling.hpp"

namespace {
dcov::SamplerSpec spec_of(dcov::SamplerKind kind, int d, std::size_t n, std::uint64_t seed) {
    dcov::SamplerSpec s;
    s.kind = kind;
    s.d = d;
    s.n = n;
    s.seed = seed;
    return s;
}
}  // namespace

TEST_CASE("determinism and stream separation") {
    const auto spec = spec_of(dcov::SamplerKind::MC, 3, 100, 42);
    CHECK(dcov::mc_sample(spec).x == dcov::mc_sample(spec).x);
    CHECK(dcov::mc_sample(spec, 1).x != dcov::mc_sample(spec, 2).x);
    const auto lspec = spec_of(dcov::SamplerKind::LHS, 3, 100, 42);
    CHECK(dcov::lhs_sample(lspec).x == dcov::lhs_sample(lspec).x);
    CHECK(dcov::draw_sample(lspec).x == dcov::lhs_sample(lspec).x);
}

TEST_CASE("coordinates live in the half-open cube") {
    for (auto kind : {dcov::SamplerKind::MC, dcov::SamplerKind::LHS}) {
        const auto p = dcov::draw_sample(spec_of(kind, 4, 500, 7));
        for (double v : p.x) {
            CHECK(v >= 0.0);
            CHECK(v < 1.0);
        }
    }
}

TEST_CASE("MC coordinate means") {
    const auto p = dcov::mc_sample(spec_of(dcov::SamplerKind::MC, 2, 100000, 123));
    for (int j = 0; j < 2; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < p.n(); ++i) sum += p.at(i, j);
        const double mean = sum / static_cast<double>(p.n());
        // ~3 sigma with sigma = 1/sqrt(12 * 1e5)
        CHECK(std::fabs(mean - 0.5) < 0.005);
    }
}

TEST_CASE("MC uniformity smoke test (chi-square, 10x10 grid)") {
    const auto p = dcov::mc_sample(spec_of(dcov::SamplerKind::MC, 2, 100000, 2718));
    std::vector<std::size_t> counts(100, 0);
    for (std::size_t i = 0; i < p.n(); ++i) {
        const int cx = std::min(9, static_cast<int>(p.at(i, 0) * 10.0));
        const int cy = std::min(9, static_cast<int>(p.at(i, 1) * 10.0));
        ++counts[cx * 10 + cy];
    }
    const double expected = 1000.0;
    double chi2 = 0.0;
    for (std::size_t c : counts) {
        const double diff = static_cast<double>(c) - expected;
        chi2 += diff * diff / expected;
    }
    // chi-square(99) upper quantile at significance 1e-6 is 181.08
    // (Wilson-Hilferty: 99 (1 - 2/891 + 4.7534 sqrt(2/891))^3)
    CHECK(chi2 < 181.1);
}

TEST_CASE("LHS stratification") {
    for (std::uint64_t seed : {1ull, 5ull, 99ull}) {
        const std::size_t n = 37;
        const auto p = dcov::lhs_sample(spec_of(dcov::SamplerKind::LHS, 3, n, seed));
        for (int j = 0; j < 3; ++j) {
            std::vector<int> hits(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                const int stratum = static_cast<int>(p.at(i, j) * static_cast<double>(n));
                REQUIRE(stratum >= 0);
                REQUIRE(stratum < static_cast<int>(n));
                ++hits[stratum];
            }
            CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        }
    }
}

TEST_CASE("LHS d=1 n=4 fills the quarters") {
    auto p = dcov::lhs_sample(spec_of(dcov::SamplerKind::LHS, 1, 4, 11));
    std::vector<double> v(p.x);
    std::sort(v.begin(), v.end());
    for (int k = 0; k < 4; ++k) {
        CHECK(v[k] >= k * 0.25);
        CHECK(v[k] < (k + 1) * 0.25);
    }
}

TEST_CASE("exchangeable shuffle preserves the multiset") {
    const auto p = dcov::mc_sample(spec_of(dcov::SamplerKind::MC, 2, 50, 3));
    const auto s = dcov::shuffle_exchangeable(p, 999);
    CHECK(s.x != p.x);  // a 50-point identity permutation would be astronomically unlikely
    auto rows = [](const dcov::PointSet& q) {
        std::vector<std::vector<double>> r;
        for (std::size_t i = 0; i < q.n(); ++i)
            r.emplace_back(q.row(i), q.row(i) + q.d);
        std::sort(r.begin(), r.end());
        return r;
    };
    CHECK(rows(p) == rows(s));
    CHECK(dcov::shuffle_exchangeable(p, 999).x == s.x);
}
