#include "dcov/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace dcov {

double local_disc(const PointSet& p, const double* x) {
    const int d = p.d;
    std::size_t count = 0;
    for (std::size_t i = 0; i < p.n(); ++i) {
        const double* row = p.row(i);
        bool strict = true;
        for (int j = 0; j < d; ++j)
            if (!(row[j] < x[j])) { strict = false; break; }
        if (strict) ++count;
    }
    double vol = 1.0;
    for (int j = 0; j < d; ++j) vol *= x[j];
    return std::fabs(static_cast<double>(count) / static_cast<double>(p.n()) - vol);
}

namespace {

struct Grid {
    int d = 0;
    std::vector<std::vector<double>> axis;  // sorted unique coords + 1.0
    std::size_t corners = 1;
};

Grid make_grid(const PointSet& p, std::size_t corner_cap) {
    Grid g;
    g.d = p.d;
    g.axis.resize(p.d);
    for (int j = 0; j < p.d; ++j) {
        auto& vals = g.axis[j];
        vals.reserve(p.n() + 1);
        for (std::size_t i = 0; i < p.n(); ++i) vals.push_back(p.at(i, j));
        vals.push_back(1.0);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }
    g.corners = 1;
    for (int j = 0; j < p.d; ++j) {
        if (g.corners > corner_cap / g.axis[j].size() + 1) {
            g.corners = corner_cap + 1;  // saturate, the cap check below fires
            break;
        }
        g.corners *= g.axis[j].size();
    }
    if (g.corners == 0 || p.n() > corner_cap / g.corners)
        throw infeasible_error("star_disc_exact: N * corner count exceeds cap");
    return g;
}

// Candidate value at one grid corner: the larger of open deficiency and
// closed excess. Identical arithmetic on every path.
inline double corner_value(const PointSet& p, const double* y) {
    const int d = p.d;
    std::size_t open = 0, closed = 0;
    for (std::size_t i = 0; i < p.n(); ++i) {
        const double* row = p.row(i);
        bool lt = true, le = true;
        for (int j = 0; j < d; ++j) {
            const double c = row[j];
            if (!(c < y[j])) lt = false;
            if (!(c <= y[j])) { le = false; break; }
        }
        if (lt) ++open;
        if (le) ++closed;
    }
    double vol = 1.0;
    for (int j = 0; j < d; ++j) vol *= y[j];
    const double n = static_cast<double>(p.n());
    const double deficiency = vol - static_cast<double>(open) / n;
    const double excess = static_cast<double>(closed) / n - vol;
    return deficiency > excess ? deficiency : excess;
}

void corner_from_flat(const Grid& g, std::size_t flat, double* y) {
    for (int j = g.d - 1; j >= 0; --j) {
        const std::size_t sz = g.axis[j].size();
        y[j] = g.axis[j][flat % sz];
        flat /= sz;
    }
}

DiscResult best_to_result(const Grid& g, double best, std::size_t best_flat) {
    DiscResult r;
    r.kind = DiscKind::Exact;
    r.value = best < 0.0 ? 0.0 : best;
    r.witness.resize(g.d);
    corner_from_flat(g, best_flat, r.witness.data());
    return r;
}

}  // namespace

DiscResult star_disc_exact(const PointSet& p, std::size_t corner_cap) {
    p.validate();
    const Grid g = make_grid(p, corner_cap);
    const long long total = static_cast<long long>(g.corners);

    double best = -1.0;
    std::size_t best_flat = 0;
#pragma omp parallel
    {
        double loc_best = -1.0;
        std::size_t loc_flat = 0;
        std::vector<double> y(g.d);
#pragma omp for schedule(static) nowait
        for (long long f = 0; f < total; ++f) {
            corner_from_flat(g, static_cast<std::size_t>(f), y.data());
            const double v = corner_value(p, y.data());
            if (v > loc_best) {
                loc_best = v;
                loc_flat = static_cast<std::size_t>(f);
            }
        }
#pragma omp critical(dcov_star_disc_merge)
        {
            if (loc_best > best || (loc_best == best && loc_flat < best_flat)) {
                best = loc_best;
                best_flat = loc_flat;
            }
        }
    }
    return best_to_result(g, best, best_flat);
}

namespace serial_ref {
DiscResult star_disc_exact(const PointSet& p, std::size_t corner_cap) {
    p.validate();
    const Grid g = make_grid(p, corner_cap);
    double best = -1.0;
    std::size_t best_flat = 0;
    std::vector<double> y(g.d);
    for (std::size_t f = 0; f < g.corners; ++f) {
        corner_from_flat(g, f, y.data());
        const double v = corner_value(p, y.data());
        if (v > best) {
            best = v;
            best_flat = f;
        }
    }
    return best_to_result(g, best, best_flat);
}
}  // namespace serial_ref

namespace {
CoverBoundResult upper_cover_impl(const PointSet& p, const DeltaCover& cover, bool parallel) {
    if (cover.d != p.d) throw std::domain_error("star_disc_upper_cover: dimension mismatch");
    const std::size_t n = cover.count();
    double best = 0.0;  // the origin contributes local disc 0
    std::size_t best_i = n;

    if (parallel) {
#pragma omp parallel
        {
            double loc_best = 0.0;
            std::size_t loc_i = n;
#pragma omp for schedule(static) nowait
            for (long long i = 0; i < static_cast<long long>(n); ++i) {
                const double v = local_disc(p, cover.point(static_cast<std::size_t>(i)));
                if (v > loc_best || (v == loc_best && static_cast<std::size_t>(i) < loc_i)) {
                    loc_best = v;
                    loc_i = static_cast<std::size_t>(i);
                }
            }
#pragma omp critical(dcov_upper_cover_merge)
            {
                if (loc_best > best || (loc_best == best && loc_i < best_i)) {
                    best = loc_best;
                    best_i = loc_i;
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double v = local_disc(p, cover.point(i));
            if (v > best) {
                best = v;
                best_i = i;
            }
        }
    }

    CoverBoundResult r;
    r.lower = best;
    r.upper = std::min(1.0, best + cover.delta);
    if (best_i < n) r.witness.assign(cover.point(best_i), cover.point(best_i) + cover.d);
    return r;
}
}  // namespace

CoverBoundResult star_disc_upper_cover(const PointSet& p, const DeltaCover& cover) {
    return upper_cover_impl(p, cover, true);
}

namespace serial_ref {
CoverBoundResult star_disc_upper_cover(const PointSet& p, const DeltaCover& cover) {
    return upper_cover_impl(p, cover, false);
}
}  // namespace serial_ref

WeightScheme WeightScheme::product(const std::vector<double>& per_coordinate) {
    const int d = static_cast<int>(per_coordinate.size());
    if (d < 1 || d > 16)
        throw std::domain_error("WeightScheme::product: d must lie in {1..16}");
    WeightScheme w;
    w.d = d;
    const std::uint32_t full = (1u << d) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        double g = 1.0;
        for (int j = 0; j < d; ++j)
            if (mask & (1u << j)) g *= per_coordinate[j];
        w.weights.emplace_back(mask, g);
    }
    return w;
}

void WeightScheme::validate() const {
    if (d < 1) throw std::domain_error("WeightScheme: d must be >= 1");
    bool any_positive = false;
    for (const auto& [mask, g] : weights) {
        if (mask == 0 || mask >= (1u << d))
            throw std::domain_error("WeightScheme: subset mask out of range");
        if (g < 0.0) throw std::domain_error("WeightScheme: weights must be nonnegative");
        if (g > 0.0) any_positive = true;
    }
    if (!any_positive) throw std::domain_error("WeightScheme: need at least one positive weight");
}

WeightedResult weighted_star_disc(const PointSet& p, const WeightScheme& w, WeightedMode mode,
                                  double cover_delta, std::size_t corner_cap) {
    w.validate();
    if (w.d != p.d) throw std::domain_error("weighted_star_disc: dimension mismatch");

    std::map<int, DeltaCover> covers_by_dim;
    WeightedResult out;
    bool first = true;
    for (const auto& [mask, gamma] : w.weights) {
        if (gamma == 0.0) continue;
        const PointSet proj = p.project(mask);
        double dstar = 0.0;
        if (mode == WeightedMode::Exact) {
            dstar = star_disc_exact(proj, corner_cap).value;
        } else {
            auto it = covers_by_dim.find(proj.d);
            if (it == covers_by_dim.end()) {
                DeltaCover dc = cover_to_delta_cover(build_cover_nd(proj.d, cover_delta));
                it = covers_by_dim.emplace(proj.d, std::move(dc)).first;
            }
            dstar = star_disc_upper_cover(proj, it->second).upper;
        }
        const double v = gamma * dstar;
        if (first || v > out.value) {
            out.value = v;
            out.arg_mask = mask;
            first = false;
        }
    }
    return out;
}

double star_disc_1d_formula(const PointSet& p) {
    if (p.d != 1) throw std::domain_error("star_disc_1d_formula: d must be 1");
    std::vector<double> s(p.x);
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double best = 0.0;
    for (std::size_t k = 1; k <= s.size(); ++k) {
        const double xk = s[k - 1];
        best = std::max(best, static_cast<double>(k) / n - xk);
        best = std::max(best, xk - (static_cast<double>(k) - 1.0) / n);
    }
    return best;
}

}  // namespace dcov
