#include "dcov/cover.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "dcov/bounds.hpp"
#include "dcov/csv.hpp"
#include "dcov/rng.hpp"

namespace dcov {

namespace {
double anchored_volume(const double* p, int d) {
    double v = 1.0;
    for (int j = 0; j < d; ++j) v *= p[j];
    return v;
}

void require_delta_open(double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::domain_error("cover: delta must lie in (0,1)");
}
}  // namespace

double BracketingCover::weight(std::size_t i) const {
    return anchored_volume(upper(i), d) - anchored_volume(lower(i), d);
}

void BracketingCover::push(const double* lower, const double* upper) {
    lo.insert(lo.end(), lower, lower + d);
    hi.insert(hi.end(), upper, upper + d);
}

long layer_count_2d(double delta_q) {
    require_delta_open(delta_q);
    const double f = std::ceil(-2.0 * std::log(2.0) / std::log1p(-delta_q)) + 1.0;
    return 2 * static_cast<long>(f) - 1;
}

BracketingCover build_cover_1d(double delta) {
    if (!(delta > 0.0) || !(delta <= 1.0))
        throw std::domain_error("build_cover_1d: delta must lie in (0,1]");
    const long n = bracketing_1d(delta);
    BracketingCover c;
    c.d = 1;
    c.delta = delta;
    c.lo.reserve(n);
    c.hi.reserve(n);
    for (long k = 1; k <= n; ++k) {
        double a = static_cast<double>(k - 1) / static_cast<double>(n);
        double b = static_cast<double>(k) / static_cast<double>(n);
        c.push(&a, &b);
    }
    return c;
}

Cover2D build_cover_2d_layers(double delta) {
    require_delta_open(delta);
    const long n = bracketing_1d(delta);
    Cover2D out;
    out.cover.d = 2;
    out.cover.delta = delta;

    for (long q = 1; q <= n - 1; ++q) {
        const double shell = 1.0 - static_cast<double>(q - 1) * delta;  // = a_{q-1}^2
        const double s = std::sqrt(shell);                              // a_{q-1}
        const double a_q = std::sqrt(1.0 - static_cast<double>(q) * delta);
        const double dq = delta / shell;

        Layer2D layer;
        layer.q = static_cast<int>(q);
        layer.a_prev = s;
        layer.a_q = a_q;
        layer.delta_q = dq;
        layer.count_bound = layer_count_2d(dq);

        // b_0 = 1, b_1 = sqrt(1-dq), b_{i+1} = (b_i - dq)/b_1 while b_i > dq
        std::vector<double> b{1.0, std::sqrt(1.0 - dq)};
        const long guard = layer.count_bound + 4;
        while (b.back() > dq) {
            b.push_back((b.back() - dq) / b[1]);
            if (static_cast<long>(b.size()) > guard)
                throw std::runtime_error("build_cover_2d: layer recursion failed to terminate");
        }
        const std::size_t i_stop = b.size() - 1;  // first index with b_i <= dq

        auto push_scaled = [&](double lx, double ly, double hx, double hy) {
            double l[2] = {lx * s, ly * s};
            double h[2] = {hx * s, hy * s};
            out.cover.push(l, h);
        };

        // top strip brackets [(b_j, b_1), (b_{j-1}, 1)], weight exactly dq
        for (std::size_t j = 1; j <= i_stop; ++j)
            push_scaled(b[j], b[1], b[j - 1], 1.0);
        // closing bracket [0, (b_i, 1)], weight b_i <= dq
        layer.closing.push_back(out.cover.count());
        push_scaled(0.0, 0.0, b[i_stop], 1.0);
        // reflected strip, minus the shared diagonal bracket j = 1
        for (std::size_t j = 2; j <= i_stop; ++j)
            push_scaled(b[1], b[j], 1.0, b[j - 1]);
        layer.closing.push_back(out.cover.count());
        push_scaled(0.0, 0.0, 1.0, b[i_stop]);

        layer.count = static_cast<long>(2 * i_stop + 1);
        out.layers.push_back(std::move(layer));
    }

    // final layer: the single bracket [0, a_{n-1} (1,1)], weight 1-(n-1)delta <= delta
    {
        const double a = std::sqrt(1.0 - static_cast<double>(n - 1) * delta);
        Layer2D layer;
        layer.q = static_cast<int>(n);
        layer.a_prev = a;
        layer.a_q = 0.0;
        layer.delta_q = delta / (1.0 - static_cast<double>(n - 1) * delta);
        layer.count = 1;
        layer.count_bound = 1;
        layer.closing.push_back(out.cover.count());
        double l[2] = {0.0, 0.0};
        double h[2] = {a, a};
        out.cover.push(l, h);
        out.layers.push_back(std::move(layer));
    }
    return out;
}

BracketingCover build_cover_2d(double delta) { return build_cover_2d_layers(delta).cover; }

namespace {
void build_nd_recursive(int d, double delta, std::size_t cap, BracketingCover& out) {
    if (d == 1) {
        BracketingCover c1 = build_cover_1d(delta);
        if (out.count() + c1.count() > cap) throw infeasible_error("build_cover_nd: bracket cap exceeded");
        out.lo.insert(out.lo.end(), c1.lo.begin(), c1.lo.end());
        out.hi.insert(out.hi.end(), c1.hi.begin(), c1.hi.end());
        return;
    }
    if (d == 2) {
        BracketingCover c2 = build_cover_2d(delta);
        if (out.count() + c2.count() > cap) throw infeasible_error("build_cover_nd: bracket cap exceeded");
        out.lo.insert(out.lo.end(), c2.lo.begin(), c2.lo.end());
        out.hi.insert(out.hi.end(), c2.hi.begin(), c2.hi.end());
        return;
    }

    const long n = bracketing_1d(delta);
    std::vector<double> l(d), h(d);
    for (long q = 1; q <= n - 1; ++q) {
        const double shell = 1.0 - static_cast<double>(q - 1) * delta;  // = A^d
        const double A = std::pow(shell, 1.0 / d);
        const double B = std::pow(1.0 - static_cast<double>(q) * delta, 1.0 / d);
        const double dq = delta / shell;
        const double beta = B / A;                  // = (1-dq)^{1/d}
        const double sub_delta = dq - (1.0 - beta); // > 0 for d >= 2

        BracketingCover sub;
        sub.d = d - 1;
        sub.delta = sub_delta;
        build_nd_recursive(d - 1, sub_delta, cap, sub);

        for (int m = 0; m < d; ++m) {
            for (std::size_t i = 0; i < sub.count(); ++i) {
                const double* slo = sub.lower(i);
                const double* shi = sub.upper(i);
                int c = 0;
                for (int j = 0; j < d; ++j) {
                    if (j == m) {
                        l[j] = B;
                        h[j] = A;
                    } else {
                        l[j] = slo[c] * A;
                        h[j] = shi[c] * A;
                        ++c;
                    }
                }
                if (out.count() >= cap) throw infeasible_error("build_cover_nd: bracket cap exceeded");
                out.push(l.data(), h.data());
            }
        }
    }
    const double a_last = std::pow(1.0 - static_cast<double>(n - 1) * delta, 1.0 / d);
    std::fill(l.begin(), l.end(), 0.0);
    std::fill(h.begin(), h.end(), a_last);
    if (out.count() >= cap) throw infeasible_error("build_cover_nd: bracket cap exceeded");
    out.push(l.data(), h.data());
}
}  // namespace

BracketingCover build_cover_nd(int d, double delta, std::size_t max_brackets) {
    if (d < 1) throw std::domain_error("build_cover_nd: d must be >= 1");
    if (d == 1) {
        if (!(delta > 0.0) || !(delta <= 1.0))
            throw std::domain_error("build_cover_nd: delta must lie in (0,1]");
    } else {
        require_delta_open(delta);
    }
    BracketingCover out;
    out.d = d;
    out.delta = delta;
    build_nd_recursive(d, delta, max_brackets, out);
    return out;
}

DeltaCover cover_to_delta_cover(const BracketingCover& cover) {
    const int d = cover.d;
    std::vector<std::vector<double>> corners;
    corners.reserve(2 * cover.count());
    for (std::size_t i = 0; i < cover.count(); ++i) {
        corners.emplace_back(cover.lower(i), cover.lower(i) + d);
        corners.emplace_back(cover.upper(i), cover.upper(i) + d);
    }
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());

    DeltaCover dc;
    dc.d = d;
    dc.delta = cover.delta;
    for (const auto& c : corners) {
        if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; })) continue;
        dc.pts.insert(dc.pts.end(), c.begin(), c.end());
    }
    return dc;
}

namespace {

bool contains(const double* lo, const double* hi, const double* y, int d) {
    for (int j = 0; j < d; ++j)
        if (y[j] < lo[j] || y[j] > hi[j]) return false;
    return true;
}

// Deterministic test-point generation shared by both validators: a thinned
// grid over bracket corner coordinates, then n_random seeded uniforms.
std::vector<double> make_test_points(const BracketingCover& cover, std::size_t n_random,
                                     std::uint64_t seed, std::size_t grid_cap) {
    const int d = cover.d;
    std::vector<std::vector<double>> axis(d);
    for (int j = 0; j < d; ++j) {
        auto& vals = axis[j];
        vals.reserve(2 * cover.count());
        for (std::size_t i = 0; i < cover.count(); ++i) {
            vals.push_back(cover.lower(i)[j]);
            vals.push_back(cover.upper(i)[j]);
        }
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }

    std::size_t target = std::max<std::size_t>(2, static_cast<std::size_t>(
        std::floor(std::pow(static_cast<double>(grid_cap), 1.0 / d))));
    for (int j = 0; j < d; ++j) {
        auto& vals = axis[j];
        if (vals.size() <= target) continue;
        std::vector<double> thin;
        thin.reserve(target);
        for (std::size_t t = 0; t < target; ++t) {
            std::size_t idx = t * (vals.size() - 1) / (target - 1);
            thin.push_back(vals[idx]);
        }
        thin.erase(std::unique(thin.begin(), thin.end()), thin.end());
        vals = std::move(thin);
    }

    std::size_t grid_total = 1;
    for (int j = 0; j < d; ++j) grid_total *= axis[j].size();

    std::vector<double> pts;
    pts.reserve((grid_total + n_random) * d);
    std::vector<std::size_t> odo(d, 0);
    for (std::size_t t = 0; t < grid_total; ++t) {
        for (int j = 0; j < d; ++j) pts.push_back(axis[j][odo[j]]);
        for (int j = d - 1; j >= 0; --j) {
            if (++odo[j] < axis[j].size()) break;
            odo[j] = 0;
        }
    }
    Rng rng(seed, 0);
    for (std::size_t i = 0; i < n_random; ++i)
        for (int j = 0; j < d; ++j) pts.push_back(rng.u01());
    return pts;
}

void check_structure_and_weights(const BracketingCover& cover, CoverValidation& rep) {
    const int d = cover.d;
    rep.brackets = cover.count();
    for (std::size_t i = 0; i < cover.count(); ++i) {
        const double* lo = cover.lower(i);
        const double* hi = cover.upper(i);
        for (int j = 0; j < d; ++j) {
            if (!(lo[j] >= -kWeightTol) || !(hi[j] <= 1.0 + kWeightTol) || lo[j] > hi[j]) {
                rep.structure_ok = false;
                if (!rep.first_bad_bracket) rep.first_bad_bracket = i;
            }
        }
        const double w = cover.weight(i);
        rep.max_weight = std::max(rep.max_weight, w);
        const double excess = w - cover.delta;
        rep.max_weight_excess = std::max(rep.max_weight_excess, excess);
        if (excess > kWeightTol) {
            rep.weight_ok = false;
            if (!rep.first_bad_bracket) rep.first_bad_bracket = i;
        }
    }
}

void collect_coverage_report(const BracketingCover& cover, const std::vector<double>& pts,
                             const std::vector<unsigned char>& covered, CoverValidation& rep) {
    const int d = cover.d;
    const std::size_t npts = pts.size() / d;
    rep.points_tested = npts;
    for (std::size_t i = 0; i < npts; ++i) {
        if (covered[i]) continue;
        ++rep.uncovered;
        rep.coverage_ok = false;
        if (rep.witnesses.size() < 8)
            rep.witnesses.emplace_back(pts.begin() + i * d, pts.begin() + (i + 1) * d);
    }
}

// Uniform cell index over the first one or two axes. Long thin brackets
// (the anchored closing ones) land in many cells, which is fine.
struct CellIndex {
    int d = 0;
    std::size_t g0 = 1, g1 = 1;
    std::vector<std::vector<std::uint32_t>> cells;

    static CellIndex build(const BracketingCover& cover) {
        CellIndex ix;
        ix.d = cover.d;
        const std::size_t n = cover.count();
        const std::size_t g = std::min<std::size_t>(
            96, std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n)))));
        ix.g0 = g;
        ix.g1 = cover.d >= 2 ? g : 1;
        ix.cells.resize(ix.g0 * ix.g1);
        for (std::size_t i = 0; i < n; ++i) {
            const double* lo = cover.lower(i);
            const double* hi = cover.upper(i);
            const std::size_t x0 = ix.cell_of(lo[0], ix.g0), x1 = ix.cell_of(hi[0], ix.g0);
            std::size_t y0 = 0, y1 = 0;
            if (ix.d >= 2) {
                y0 = ix.cell_of(lo[1], ix.g1);
                y1 = ix.cell_of(hi[1], ix.g1);
            }
            for (std::size_t a = x0; a <= x1; ++a)
                for (std::size_t b = y0; b <= y1; ++b)
                    ix.cells[a * ix.g1 + b].push_back(static_cast<std::uint32_t>(i));
        }
        return ix;
    }

    std::size_t cell_of(double v, std::size_t g) const {
        double c = std::floor(v * static_cast<double>(g));
        if (c < 0) c = 0;
        if (c > static_cast<double>(g - 1)) c = static_cast<double>(g - 1);
        return static_cast<std::size_t>(c);
    }

    const std::vector<std::uint32_t>& candidates(const double* y) const {
        std::size_t a = cell_of(y[0], g0);
        std::size_t b = d >= 2 ? cell_of(y[1], g1) : 0;
        return cells[a * g1 + b];
    }
};

}  // namespace

CoverValidation validate_cover(const BracketingCover& cover, std::size_t n_random,
                               std::uint64_t seed, std::size_t grid_cap) {
    CoverValidation rep;
    check_structure_and_weights(cover, rep);
    const int d = cover.d;
    const std::vector<double> pts = make_test_points(cover, n_random, seed, grid_cap);
    const std::size_t npts = pts.size() / d;
    std::vector<unsigned char> covered(npts, 0);
    const CellIndex ix = CellIndex::build(cover);

#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(npts); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        const double* y = pts.data() + i * d;
        for (std::uint32_t b : ix.candidates(y)) {
            if (contains(cover.lower(b), cover.upper(b), y, d)) {
                covered[i] = 1;
                break;
            }
        }
    }
    collect_coverage_report(cover, pts, covered, rep);
    return rep;
}

namespace serial_ref {
CoverValidation validate_cover(const BracketingCover& cover, std::size_t n_random,
                               std::uint64_t seed, std::size_t grid_cap) {
    CoverValidation rep;
    check_structure_and_weights(cover, rep);
    const int d = cover.d;
    const std::vector<double> pts = make_test_points(cover, n_random, seed, grid_cap);
    const std::size_t npts = pts.size() / d;
    std::vector<unsigned char> covered(npts, 0);
    for (std::size_t i = 0; i < npts; ++i) {
        const double* y = pts.data() + i * d;
        for (std::size_t b = 0; b < cover.count(); ++b) {
            if (contains(cover.lower(b), cover.upper(b), y, d)) {
                covered[i] = 1;
                break;
            }
        }
    }
    collect_coverage_report(cover, pts, covered, rep);
    return rep;
}
}  // namespace serial_ref

void write_cover(std::ostream& out, const BracketingCover& cover) {
    out << cover.d << ',' << fmt_double(cover.delta) << ',' << cover.count() << '\n';
    for (std::size_t i = 0; i < cover.count(); ++i) {
        const double* lo = cover.lower(i);
        const double* hi = cover.upper(i);
        for (int j = 0; j < cover.d; ++j) out << (j ? "," : "") << fmt_double(lo[j]);
        for (int j = 0; j < cover.d; ++j) out << ',' << fmt_double(hi[j]);
        out << '\n';
    }
}

void write_cover_file(const std::string& path, const BracketingCover& cover) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write cover file: " + path);
    write_cover(out, cover);
}

BracketingCover read_cover(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("cover file: missing header");
    auto head = split_csv_line(line);
    if (head.size() != 3) throw std::runtime_error("cover file: header must be d,delta,count");
    BracketingCover c;
    c.d = static_cast<int>(parse_double(head[0]));
    c.delta = parse_double(head[1]);
    const std::size_t count = static_cast<std::size_t>(parse_double(head[2]));
    if (c.d < 1) throw std::runtime_error("cover file: bad dimension");
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (static_cast<int>(cells.size()) != 2 * c.d)
            throw std::runtime_error("cover file: row must have 2d columns");
        for (int j = 0; j < c.d; ++j) c.lo.push_back(parse_double(cells[j]));
        for (int j = 0; j < c.d; ++j) c.hi.push_back(parse_double(cells[c.d + j]));
    }
    if (c.count() != count)
        throw std::runtime_error("cover file: row count does not match header");
    return c;
}

BracketingCover read_cover_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cover file: " + path);
    return read_cover(in);
}

void write_delta_cover_file(const std::string& path, const DeltaCover& dc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write delta-cover file: " + path);
    for (std::size_t i = 0; i < dc.count(); ++i) {
        const double* p = dc.point(i);
        for (int j = 0; j < dc.d; ++j) out << (j ? "," : "") << fmt_double(p[j]);
        out << '\n';
    }
}

}  // namespace dcov
