#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dcov/bounds.hpp"
#include "dcov/cover.hpp"
#include "dcov/csv.hpp"
#include "dcov/discrepancy.hpp"
#include "dcov/faulhaber.hpp"
#include "dcov/probbounds.hpp"
#include "dcov/sampling.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

std::vector<dcov::Rational> parse_r_grid(const std::string& spec) {
    std::vector<dcov::Rational> grid;
    for (const auto& tok : dcov::split_csv_line(spec)) grid.push_back(dcov::Rational::parse(tok));
    return grid;
}

int cmd_faulhaber_verify(unsigned n_max, unsigned j_max, const std::string& r_grid_spec) {
    const auto grid = r_grid_spec.empty() ? dcov::rational_grid(8) : parse_r_grid(r_grid_spec);
    const auto rep = dcov::verify_gfi(n_max, j_max, grid);
    std::cout << "checked " << rep.checked << " triples (n <= " << n_max << ", j <= " << j_max
              << ", " << grid.size() << " shifts): " << (rep.pass ? "PASS" : "FAIL") << "\n";
    std::cout << "equality cases: " << rep.equality_count << "\n";
    for (std::size_t i = 0; i < rep.equalities.size() && i < 6; ++i) {
        const auto& e = rep.equalities[i];
        std::cout << "  equality at n=" << e.n << " j=" << e.j << " r=" << e.r.str() << "\n";
    }
    if (rep.equalities.size() > 6) std::cout << "  ...\n";
    if (!rep.pass && rep.counterexample) {
        const auto& c = *rep.counterexample;
        std::cout << "counterexample: n=" << c.n << " j=" << c.j << " r=" << c.r.str() << "\n";
    }
    return rep.pass ? kExitOk : kExitCheckFailed;
}

int cmd_bounds_table(const std::vector<int>& ds, const std::vector<double>& deltas,
                     const std::string& out_path) {
    if (ds.empty() || deltas.empty())
        throw CLI::ValidationError("bounds table", "need at least one --d and one --delta");
    std::ofstream file;
    std::ostream& out = open_or_stdout(file, out_path);
    out << "d,delta,gnewuch,pw,d2,general\n";
    for (int d : ds) {
        for (double delta : deltas) {
            out << d << ',' << dcov::fmt_double(delta) << ','
                << dcov::fmt_double(dcov::bound_gnewuch(d, delta)) << ','
                << dcov::fmt_double(dcov::bound_pw(d, delta)) << ',';
            if (d == 2) out << dcov::fmt_double(dcov::bound_d2(delta));
            out << ',' << dcov::fmt_double(dcov::bound_general(d, delta)) << '\n';
        }
    }
    return kExitOk;
}

void print_report(const dcov::CheckReport& rep) {
    for (const auto& item : rep.items) {
        std::cout << (item.pass ? "PASS" : "FAIL") << "  " << item.name;
        if (!item.detail.empty()) std::cout << "  (" << item.detail << ")";
        std::cout << "\n";
    }
}

int cmd_bounds_check24(int d_max) {
    bool all = true;

    auto rep_a = dcov::check_A_coeffs(101);
    print_report(rep_a);
    all = all && rep_a.pass;

    auto rep_large = dcov::check_large_d(d_max);
    print_report(rep_large);
    all = all && rep_large.pass;

    bool small_ok = true;
    for (int d : {2, 3, 5, 10, 50, 101, 150}) {
        auto rep = dcov::check_small_powers(d);
        if (!rep.pass) {
            small_ok = false;
            print_report(rep);
        }
    }
    std::cout << (small_ok ? "PASS" : "FAIL")
              << "  low-power coefficient comparisons (d in {2,3,5,10,50,101,150})\n";
    all = all && small_ok;

    bool argmax_ok = true;
    for (int d = 2; d <= 500; ++d) {
        if (dcov::f_argmax(d) != dcov::f_argmax_formula(d)) argmax_ok = false;
        const int ga = dcov::g_argmax(d);
        if (ga > std::max(2, dcov::k0_of_d(d))) argmax_ok = false;
    }
    std::cout << (argmax_ok ? "PASS" : "FAIL") << "  argmax scans match closed forms (d <= 500)\n";
    all = all && argmax_ok;

    return all ? kExitOk : kExitCheckFailed;
}

int cmd_cover_build(int d, double delta, const std::string& out_path,
                    const std::string& points_out, std::size_t max_brackets) {
    const auto cover = dcov::build_cover_nd(d, delta, max_brackets);
    double bound = 0.0;
    const char* bound_name = "";
    if (d == 1) {
        bound = static_cast<double>(dcov::bracketing_1d(delta));
        bound_name = "ceil(1/delta)";
    } else if (d == 2) {
        bound = dcov::bound_d2(delta);
        bound_name = "layered d=2 bound";
    } else {
        bound = dcov::bound_general(d, delta);
        bound_name = "general bound";
    }
    std::cout << "d=" << d << " delta=" << dcov::fmt_double(delta)
              << " brackets=" << cover.count() << " " << bound_name << "="
              << dcov::fmt_double(bound)
              << (static_cast<double>(cover.count()) <= bound ? " (within bound)"
                                                              : " (exceeds bound)")
              << "\n";
    if (!out_path.empty()) dcov::write_cover_file(out_path, cover);
    if (!points_out.empty())
        dcov::write_delta_cover_file(points_out, dcov::cover_to_delta_cover(cover));
    return kExitOk;
}

int cmd_cover_verify(const std::string& in_path, std::size_t n_random, std::uint64_t seed) {
    const auto cover = dcov::read_cover_file(in_path);
    const auto rep = dcov::validate_cover(cover, n_random, seed);
    std::cout << "brackets=" << rep.brackets << " points=" << rep.points_tested
              << " max_weight=" << dcov::fmt_double(rep.max_weight) << "\n";
    if (rep.pass()) {
        std::cout << "PASS\n";
        return kExitOk;
    }
    if (!rep.structure_ok || !rep.weight_ok) {
        std::cout << "FAIL weight/structure: bracket "
                  << (rep.first_bad_bracket ? std::to_string(*rep.first_bad_bracket) : "?")
                  << " excess=" << dcov::fmt_double(rep.max_weight_excess) << "\n";
    }
    if (!rep.coverage_ok) {
        std::cout << "FAIL coverage: " << rep.uncovered << " uncovered";
        if (!rep.witnesses.empty()) {
            std::cout << ", witness=(";
            for (std::size_t j = 0; j < rep.witnesses[0].size(); ++j)
                std::cout << (j ? "," : "") << dcov::fmt_double(rep.witnesses[0][j]);
            std::cout << ")";
        }
        std::cout << "\n";
    }
    return kExitCheckFailed;
}

int cmd_disc_exact(const std::string& points_path, std::size_t cap) {
    const auto p = dcov::read_point_set_file(points_path);
    const auto r = dcov::star_disc_exact(p, cap);
    std::cout << "dstar=" << dcov::fmt_double(r.value) << " witness=(";
    for (std::size_t j = 0; j < r.witness.size(); ++j)
        std::cout << (j ? "," : "") << dcov::fmt_double(r.witness[j]);
    std::cout << ")\n";
    return kExitOk;
}

int cmd_disc_upper(const std::string& points_path, const std::string& cover_path) {
    const auto p = dcov::read_point_set_file(points_path);
    const auto cover = dcov::read_cover_file(cover_path);
    const auto dc = dcov::cover_to_delta_cover(cover);
    const auto r = dcov::star_disc_upper_cover(p, dc);
    std::cout << "upper=" << dcov::fmt_double(r.upper)
              << " certified_lower=" << dcov::fmt_double(r.lower)
              << " delta=" << dcov::fmt_double(dc.delta) << "\n";
    return kExitOk;
}

int cmd_disc_weighted(const std::string& points_path, const std::string& product_weights,
                      const std::string& weights_file, const std::string& mode_name,
                      double delta, std::size_t cap) {
    const auto p = dcov::read_point_set_file(points_path);
    dcov::WeightScheme scheme;
    if (!product_weights.empty()) {
        std::vector<double> gammas;
        for (const auto& tok : dcov::split_csv_line(product_weights))
            gammas.push_back(dcov::parse_double(tok));
        if (static_cast<int>(gammas.size()) != p.d)
            throw CLI::ValidationError("disc weighted",
                                       "--product-weights must list one weight per coordinate");
        scheme = dcov::WeightScheme::product(gammas);
    } else if (!weights_file.empty()) {
        std::ifstream in(weights_file);
        if (!in) throw std::runtime_error("cannot open weights file: " + weights_file);
        scheme.d = p.d;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto cells = dcov::split_csv_line(line);
            if (cells.size() != 2)
                throw std::runtime_error("weights file: rows must be 'mask,gamma'");
            scheme.weights.emplace_back(
                static_cast<std::uint32_t>(std::stoul(cells[0])), dcov::parse_double(cells[1]));
        }
    } else {
        throw CLI::ValidationError("disc weighted",
                                   "need --product-weights or --weights-file");
    }
    const auto mode =
        mode_name == "cover" ? dcov::WeightedMode::Cover : dcov::WeightedMode::Exact;
    const auto r = dcov::weighted_star_disc(p, scheme, mode, delta, cap);
    std::cout << "weighted_dstar=" << dcov::fmt_double(r.value) << " arg_subset_mask="
              << r.arg_mask << "\n";
    return kExitOk;
}

int cmd_experiment_run(const std::string& sampler, int d, std::size_t n, std::size_t reps,
                       std::uint64_t seed, const std::vector<double>& c_list, double rho,
                       const std::string& out_path, const std::string& summary_path,
                       const std::string& points_out, std::size_t cap) {
    dcov::SamplerSpec spec;
    spec.kind = sampler == "lhs" ? dcov::SamplerKind::LHS : dcov::SamplerKind::MC;
    spec.d = d;
    spec.n = n;
    spec.seed = seed;

    // the sample a consumer would get from replication 0
    if (!points_out.empty()) dcov::write_point_set_file(points_out, dcov::draw_sample(spec, 0));

    const auto dstar = dcov::run_replications(spec, reps, cap);

    std::ofstream file;
    std::ostream& out = open_or_stdout(file, out_path);
    out << "rep,sampler,d,n,seed,dstar,threshold_c,below\n";
    const double scale = std::sqrt(static_cast<double>(d) / static_cast<double>(n));
    for (std::size_t r = 0; r < reps; ++r) {
        for (double c : c_list) {
            out << r << ',' << sampler << ',' << d << ',' << n << ',' << seed << ','
                << dcov::fmt_double(dstar[r]) << ',' << dcov::fmt_double(c) << ','
                << (dstar[r] <= c * scale ? 1 : 0) << '\n';
        }
    }

    std::ofstream sfile;
    std::ostream& sum = summary_path.empty() ? std::cout : open_or_stdout(sfile, summary_path);
    sum << "metric,c,bound,empirical,lo95,hi95\n";
    for (double c : c_list) {
        const auto est = dcov::estimate_probability(dstar, c, d, n);
        sum << "probability," << dcov::fmt_double(c) << ','
            << dcov::fmt_double(dcov::thm31_probability(c, d, rho)) << ','
            << dcov::fmt_double(est.fraction) << ',' << dcov::fmt_double(est.wilson_lo) << ','
            << dcov::fmt_double(est.wilson_hi) << '\n';
    }
    const auto expe = dcov::estimate_expectation(dstar);
    const auto bound = dcov::expected_disc_bound(d, n);
    sum << "expectation,," << dcov::fmt_double(bound.simple * scale) << ','
        << dcov::fmt_double(expe.mean) << ','
        << dcov::fmt_double(expe.mean - 2.0 * expe.stderr_mean) << ','
        << dcov::fmt_double(expe.mean + 2.0 * expe.stderr_mean) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"delta-bracketing covers, star-discrepancy bounds and experiments"};
    app.require_subcommand(1);

    // faulhaber verify
    auto* faulhaber = app.add_subcommand("faulhaber", "exact shifted power-sum checks");
    faulhaber->require_subcommand(1);
    auto* fverify = faulhaber->add_subcommand("verify", "exhaustive exact inequality check");
    unsigned n_max = 50, j_max = 20;
    std::string r_grid_spec;
    fverify->add_option("--n-max", n_max, "largest n")->check(CLI::PositiveNumber);
    fverify->add_option("--j-max", j_max, "largest exponent j")->check(CLI::PositiveNumber);
    fverify->add_option("--r-grid", r_grid_spec, "comma-separated rational shifts (default eighths)");

    // bounds table | check-theorem24
    auto* bounds = app.add_subcommand("bounds", "bracketing-number bound evaluators");
    bounds->require_subcommand(1);
    auto* btable = bounds->add_subcommand("table", "emit bound table CSV");
    std::vector<int> table_ds;
    std::vector<double> table_deltas;
    std::string table_out;
    btable->add_option("--d", table_ds, "dimensions")->delimiter(',')->required();
    btable->add_option("--delta", table_deltas, "tolerances")->delimiter(',')->required();
    btable->add_option("--out", table_out, "output CSV path (default stdout)");
    auto* bcheck = bounds->add_subcommand("check-theorem24", "run the coefficient checks");
    int check_d_max = 300;
    bcheck->add_option("--d-max", check_d_max, "upper end of the tail scan")
        ->check(CLI::Range(102, 100000));

    // cover build | verify
    auto* cover = app.add_subcommand("cover", "bracketing-cover construction and validation");
    cover->require_subcommand(1);
    auto* cbuild = cover->add_subcommand("build", "construct a cover");
    int cover_d = 2;
    double cover_delta = 0.5;
    std::string cover_out, cover_points_out;
    std::size_t cover_cap = dcov::kDefaultBracketCap;
    cbuild->add_option("--d", cover_d, "dimension")->check(CLI::Range(1, 32))->required();
    cbuild->add_option("--delta", cover_delta, "tolerance in (0,1)")->required();
    cbuild->add_option("--out", cover_out, "cover CSV path");
    cbuild->add_option("--points-out", cover_points_out, "delta-cover points path");
    cbuild->add_option("--max-brackets", cover_cap, "bracket cap");
    auto* cverify = cover->add_subcommand("verify", "validate a cover CSV");
    std::string cover_in;
    std::size_t n_random = 100000;
    std::uint64_t cover_seed = 1;
    cverify->add_option("--in", cover_in, "cover CSV path")->required();
    cverify->add_option("--n-random", n_random, "random test points");
    cverify->add_option("--seed", cover_seed, "seed for random test points");

    // disc exact | upper | weighted
    auto* disc = app.add_subcommand("disc", "star-discrepancy of a point set");
    disc->require_subcommand(1);
    std::string pts_path, disc_cover_path, product_weights, weights_file, wmode = "exact";
    std::size_t disc_cap = dcov::kDefaultCornerCap;
    double wdelta = 0.1;
    auto* dexact = disc->add_subcommand("exact", "exact value (critical-grid enumeration)");
    dexact->add_option("--points", pts_path, "point set CSV")->required();
    dexact->add_option("--cap", disc_cap, "enumeration cap (N * corners)");
    auto* dupper = disc->add_subcommand("upper", "two-sided cover estimate");
    dupper->add_option("--points", pts_path, "point set CSV")->required();
    dupper->add_option("--cover", disc_cover_path, "bracketing cover CSV")->required();
    auto* dweighted = disc->add_subcommand("weighted", "weighted star-discrepancy");
    dweighted->add_option("--points", pts_path, "point set CSV")->required();
    dweighted->add_option("--product-weights", product_weights, "per-coordinate weights");
    dweighted->add_option("--weights-file", weights_file, "rows 'subset-bitmask,gamma'");
    dweighted->add_option("--mode", wmode, "exact | cover")
        ->check(CLI::IsMember({"exact", "cover"}));
    dweighted->add_option("--delta", wdelta, "cover tolerance for --mode cover");
    dweighted->add_option("--cap", disc_cap, "enumeration cap");

    // experiment run
    auto* experiment = app.add_subcommand("experiment", "seeded sampling experiments");
    experiment->require_subcommand(1);
    auto* erun = experiment->add_subcommand("run", "replications vs bound values");
    std::string sampler = "mc";
    int exp_d = 2;
    std::size_t exp_n = 64, exp_reps = 100;
    std::uint64_t exp_seed = 1;
    std::vector<double> c_list{2.5, 3.0};
    double rho = 0.0;
    std::string exp_out, exp_summary, exp_points_out;
    erun->add_option("--sampler", sampler, "mc | lhs")->check(CLI::IsMember({"mc", "lhs"}));
    erun->add_option("--d", exp_d, "dimension")->check(CLI::Range(1, 16));
    erun->add_option("--n", exp_n, "points per replication")->check(CLI::PositiveNumber);
    erun->add_option("--reps", exp_reps, "replications")->check(CLI::PositiveNumber);
    erun->add_option("--seed", exp_seed, "base seed (replication r uses substream r)");
    erun->add_option("--c", c_list, "threshold coefficients")->delimiter(',');
    erun->add_option("--rho", rho, "dependence parameter (0 for MC)");
    erun->add_option("--out", exp_out, "per-replication CSV path (default stdout)");
    erun->add_option("--summary-out", exp_summary, "summary CSV path");
    erun->add_option("--points-out", exp_points_out, "write replication 0 as a point set CSV");
    erun->add_option("--cap", disc_cap, "oracle enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (fverify->parsed()) return cmd_faulhaber_verify(n_max, j_max, r_grid_spec);
        if (btable->parsed()) return cmd_bounds_table(table_ds, table_deltas, table_out);
        if (bcheck->parsed()) return cmd_bounds_check24(check_d_max);
        if (cbuild->parsed())
            return cmd_cover_build(cover_d, cover_delta, cover_out, cover_points_out, cover_cap);
        if (cverify->parsed()) return cmd_cover_verify(cover_in, n_random, cover_seed);
        if (dexact->parsed()) return cmd_disc_exact(pts_path, disc_cap);
        if (dupper->parsed()) return cmd_disc_upper(pts_path, disc_cover_path);
        if (dweighted->parsed())
            return cmd_disc_weighted(pts_path, product_weights, weights_file, wmode, wdelta,
                                     disc_cap);
        if (erun->parsed())
            return cmd_experiment_run(sampler, exp_d, exp_n, exp_reps, exp_seed, c_list, rho,
                                      exp_out, exp_summary, exp_points_out, disc_cap);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dcov::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
