#pragma once

#include <cstdint>
#include <vector>

#include "dcov/cover.hpp"
#include "dcov/pointset.hpp"

namespace dcov {

// Local discrepancy |#{p in P : p < x componentwise}/N - vol([0,x))|.
// Membership in [0,x) is strict in every coordinate.
double local_disc(const PointSet& p, const double* x);

enum class DiscKind { Exact, CoverUpper, CoverLower };

struct DiscResult {
    double value = 0.0;
    DiscKind kind = DiscKind::Exact;
    std::vector<double> witness;  // anchored-box corner attaining the max
};

inline constexpr std::size_t kDefaultCornerCap = 20'000'000;  // N * grid corners

// Exact star-discrepancy by two-sided critical-grid enumeration. Per axis the
// grid is the set of point coordinates plus 1; at each corner y both the open
// deficiency vol(y) - |{p < y}|/N and the closed excess |{p <= y}|/N - vol(y)
// are evaluated, and the maximum positive part over all corners is the
// supremum over anchored half-open boxes. Ties resolve to the
// lexicographically smallest witness, so the parallel kernel reproduces the
// serial reference bit for bit.
DiscResult star_disc_exact(const PointSet& p, std::size_t corner_cap = kDefaultCornerCap);

struct CoverBoundResult {
    double upper = 0.0;  // min(1, max_x local_disc + delta)
    double lower = 0.0;  // max_x local_disc alone, a certified lower bound
    std::vector<double> witness;
};

// Cover-based two-sided estimate: D* <= max_{x in cover} local_disc + delta,
// and the max alone is a lower bound.
CoverBoundResult star_disc_upper_cover(const PointSet& p, const DeltaCover& cover);

// Nonnegative weight per nonempty coordinate subset (bitmask, bit j = coord j).
struct WeightScheme {
    int d = 0;
    std::vector<std::pair<std::uint32_t, double>> weights;

    // Product weights gamma_u = prod_{j in u} gamma_j over all nonempty subsets.
    static WeightScheme product(const std::vector<double>& per_coordinate);
    void validate() const;
};

enum class WeightedMode { Exact, Cover };

struct WeightedResult {
    double value = 0.0;
    std::uint32_t arg_mask = 0;  // subset attaining the max
};

// max over nonempty u of gamma_u * D*(projection of P onto u); the
// supremum over (z_u, 1) corners reduces to the projected star-discrepancy.
// Cover mode bounds each projection via a delta-cover at tolerance
// cover_delta (one cover built per subset size).
WeightedResult weighted_star_disc(const PointSet& p, const WeightScheme& w,
                                  WeightedMode mode, double cover_delta = 0.1,
                                  std::size_t corner_cap = kDefaultCornerCap);

namespace serial_ref {
DiscResult star_disc_exact(const PointSet& p, std::size_t corner_cap = kDefaultCornerCap);
CoverBoundResult star_disc_upper_cover(const PointSet& p, const DeltaCover& cover);
}  // namespace serial_ref

// Classical sorted formula for d = 1: max_k max(k/N - x_(k), x_(k) - (k-1)/N).
double star_disc_1d_formula(const PointSet& p);

}  // namespace dcov
