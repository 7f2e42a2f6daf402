#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcov {

// Axis-parallel brackets [lo, hi] of [0,1]^d, stored row-major. The weight of
// a bracket is vol([0,hi]) - vol([0,lo]).
struct BracketingCover {
    int d = 0;
    double delta = 0.0;
    std::vector<double> lo;
    std::vector<double> hi;

    std::size_t count() const { return d == 0 ? 0 : lo.size() / static_cast<std::size_t>(d); }
    const double* lower(std::size_t i) const { return lo.data() + i * static_cast<std::size_t>(d); }
    const double* upper(std::size_t i) const { return hi.data() + i * static_cast<std::size_t>(d); }
    double weight(std::size_t i) const;
    void push(const double* lower, const double* upper);
};

struct DeltaCover {
    int d = 0;
    double delta = 0.0;
    std::vector<double> pts;

    std::size_t count() const { return d == 0 ? 0 : pts.size() / static_cast<std::size_t>(d); }
    const double* point(std::size_t i) const { return pts.data() + i * static_cast<std::size_t>(d); }
};

// Thrown when a requested construction or enumeration exceeds its size cap.
class infeasible_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kWeightTol = 1e-12;
inline constexpr std::size_t kDefaultBracketCap = 5'000'000;

// Per-layer bound 2f(delta_q) - 1 with f(x) = ceil(-2 ln2 / ln(1-x)) + 1.
long layer_count_2d(double delta_q);

// Uniform 1-d cover: brackets [(k-1)/n, k/n], k = 1..n, n = ceil(1/delta).
BracketingCover build_cover_1d(double delta);

// Layered d=2 construction. Each layer q covers the shell between the
// diagonal points a_{q-1} and a_q (a_q = sqrt(1-q delta)) with strip
// brackets of weight exactly delta plus two closing brackets of weight
// <= delta; the last layer is the single bracket [0, a_{n-1} (1,1)].
struct Layer2D {
    int q = 0;
    double a_prev = 0.0;
    double a_q = 0.0;
    double delta_q = 0.0;
    long count = 0;
    long count_bound = 0;                 // 2 f(delta_q) - 1
    std::vector<std::size_t> closing;     // indices of brackets with weight <= delta
};

struct Cover2D {
    BracketingCover cover;
    std::vector<Layer2D> layers;
};

Cover2D build_cover_2d_layers(double delta);
BracketingCover build_cover_2d(double delta);

// General-d construction: shells between diagonal points a_q = (1-q delta)^{1/d}
// are split into d overlapping axis slabs; slab m is covered by a (d-1)-dim
// cover at the reduced tolerance delta_q - (1 - (1-delta_q)^{1/d}), extended
// along coordinate m. d = 1 and d = 2 delegate to the exact constructions.
BracketingCover build_cover_nd(int d, double delta,
                               std::size_t max_brackets = kDefaultBracketCap);

// Deduplicated lower+upper corners of all brackets; the origin is implied
// and never stored. Cardinality <= 2 * brackets.
DeltaCover cover_to_delta_cover(const BracketingCover& cover);

struct CoverValidation {
    bool structure_ok = true;
    bool weight_ok = true;
    bool coverage_ok = true;
    std::size_t brackets = 0;
    std::size_t points_tested = 0;
    std::size_t uncovered = 0;
    double max_weight = 0.0;
    double max_weight_excess = 0.0;  // max over brackets of (weight - delta)
    std::optional<std::size_t> first_bad_bracket;
    std::vector<std::vector<double>> witnesses;  // first uncovered points (capped)
    bool pass() const { return structure_ok && weight_ok && coverage_ok; }
};

// Checks every bracket weight <= delta + 1e-12 and coverage of (a) a
// deterministic grid built from bracket corner coordinates, thinned to
// grid_cap combinations, and (b) n_random seeded uniform points.
// Points are tested concurrently; the outcome is identical to the serial
// reference for any thread count.
CoverValidation validate_cover(const BracketingCover& cover, std::size_t n_random,
                               std::uint64_t seed, std::size_t grid_cap = 1u << 17);

namespace serial_ref {
// Plain loops, no spatial index; the oracle the parallel kernel is tested against.
CoverValidation validate_cover(const BracketingCover& cover, std::size_t n_random,
                               std::uint64_t seed, std::size_t grid_cap = 1u << 17);
}  // namespace serial_ref

// CSV: first line "d,delta,count", then one bracket per row as 2d columns
// (lower coordinates then upper coordinates, shortest round-trip decimals).
void write_cover(std::ostream& out, const BracketingCover& cover);
void write_cover_file(const std::string& path, const BracketingCover& cover);
BracketingCover read_cover(std::istream& in);
BracketingCover read_cover_file(const std::string& path);

// Delta-cover file: one point per row, d columns.
void write_delta_cover_file(const std::string& path, const DeltaCover& dc);

}  // namespace dcov
