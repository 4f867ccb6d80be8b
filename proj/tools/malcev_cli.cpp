#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/artifacts.hpp"
#include "malcev/bch.hpp"
#include "malcev/errors.hpp"
#include "malcev/harmonics.hpp"
#include "malcev/moufang.hpp"
#include "malcev/octonion.hpp"
#include "malcev/rng.hpp"
#include "malcev/spectral.hpp"
#include "malcev/verify.hpp"

namespace {

using namespace malcev;

Vector parse_vector(const std::string& text, int expected, const std::string& what) {
    std::vector<double> vals;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string cell =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        try {
            vals.push_back(std::stod(cell, &used));
        } catch (const std::exception&) {
            throw ParseError(what + ": bad coefficient \"" + cell + "\"");
        }
        if (used != cell.size()) throw ParseError(what + ": bad coefficient \"" + cell + "\"");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (expected >= 0 && static_cast<int>(vals.size()) != expected)
        throw DimensionMismatch(what + ": expected " + std::to_string(expected) +
                                " comma-separated coefficients, got " +
                                std::to_string(vals.size()));
    Vector out(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) out[static_cast<Eigen::Index>(i)] = vals[i];
    return out;
}

std::vector<double> parse_scales(const std::string& text) {
    const Vector v = parse_vector(text, -1, "--scales");
    return {v.data(), v.data() + v.size()};
}

AlgebraSpec resolve_algebra(const std::string& name) {
    if (std::filesystem::exists(name)) return load_algebra(name);
    return builtin(name);
}

void require_octonion(const AlgebraSpec& alg, const std::string& sub) {
    if (alg.name() != "octonion")
        throw UnsupportedAlgebra(sub + " operates on the octonion builtin only");
}

void write_output(const std::string& content, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file " + path);
    out << content;
    if (!out) throw ParseError("write failed: " + path);
}

void require_native_format(const std::string& requested, const std::string& native,
                           const std::string& sub) {
    if (!requested.empty() && requested != native)
        throw ParseError(sub + " emits " + native + " only");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Octonionic Malcev-algebra toolkit: invariant verification, adjoint spectra,\n"
        "sphere flows, BCH truncation, and Laplacian tables. All numeric output uses\n"
        "17 significant digits; identical configuration and seed give identical bytes\n"
        "(the verify/defect timestamp is suppressed by --reproducible)."};
    app.require_subcommand(1);

    std::string algebra = "octonion";
    std::uint64_t seed = kDefaultSeed;
    double tol = 1e-9;
    std::string format;
    std::string output = "-";
    bool reproducible = false;
    app.add_option("--algebra", algebra,
                   "builtin name (octonion, su2, im_quaternion, m3, sl2) or algebra JSON path")
        ->capture_default_str();
    app.add_option("--seed", seed, "RNG seed for sampled checks")->capture_default_str();
    app.add_option("--tol", tol, "spectral grouping / classification tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "artifact format (each subcommand has a native one)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", output, "output path; - for stdout")->capture_default_str();
    app.add_flag("--reproducible", reproducible, "omit the timestamp field from JSON artifacts");

    int rc = 0;

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "run the invariant suite and emit a JSON report (exit 1 on failure)");
    verify_cmd->fallthrough();
    std::string verify_check;
    verify_cmd->add_option("--check", verify_check, "validate an existing verify JSON instead");
    verify_cmd->callback([&]() {
        require_native_format(format, "json", "verify");
        if (!verify_check.empty()) {
            check_verify_json(verify_check);
            return;
        }
        const AlgebraSpec alg = resolve_algebra(algebra);
        const VerifyReport rep = run_verify(alg, seed, tol);
        write_output(verify_to_json(rep, !reproducible), output);
        rc = rep.pass ? 0 : 1;
    });

    // spectrum
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "eigenvalue groups of ad(x) as a JSON report");
    spectrum_cmd->fallthrough();
    std::string spectrum_x, spectrum_check;
    spectrum_cmd->add_option("--x", spectrum_x, "generator coefficients, comma-separated");
    spectrum_cmd->add_option("--check", spectrum_check,
                             "validate an existing spectrum JSON instead");
    spectrum_cmd->callback([&]() {
        require_native_format(format, "json", "spectrum");
        if (!spectrum_check.empty()) {
            check_spectrum_json(spectrum_check);
            return;
        }
        if (spectrum_x.empty()) throw ParseError("spectrum: --x is required");
        const AlgebraSpec alg = resolve_algebra(algebra);
        const Vector x = parse_vector(spectrum_x, alg.dim(), "--x");
        write_output(spectrum_to_json(spectrum_ad(alg, x, tol)), output);
    });

    // orbit
    auto* orbit_cmd =
        app.add_subcommand("orbit", "sample a unit-sphere flow trajectory to CSV");
    orbit_cmd->fallthrough();
    std::string orbit_x, orbit_p0 = "1,0,0,0,0,0,0,0", orbit_conv = "left", orbit_check;
    double orbit_tmax = 0.0;
    int orbit_steps = 1000;
    orbit_cmd->add_option("--x", orbit_x, "flow generator, 7 comma-separated coefficients");
    orbit_cmd->add_option("--p0", orbit_p0, "base point, 8 comma-separated coefficients")
        ->capture_default_str();
    orbit_cmd->add_option("--t-max", orbit_tmax, "time horizon (> 0)");
    orbit_cmd->add_option("--steps", orbit_steps, "grid intervals (rows = steps + 1)")
        ->capture_default_str();
    orbit_cmd->add_option("--convention", orbit_conv, "translation side: left | right")
        ->capture_default_str()
        ->check(CLI::IsMember({"left", "right"}));
    orbit_cmd->add_option("--check", orbit_check, "validate an existing trajectory CSV instead");
    orbit_cmd->callback([&]() {
        require_native_format(format, "csv", "orbit");
        if (!orbit_check.empty()) {
            check_trajectory_csv(orbit_check);
            return;
        }
        require_octonion(resolve_algebra(algebra), "orbit");
        if (orbit_x.empty()) throw ParseError("orbit: --x is required");
        if (!(orbit_tmax > 0.0)) throw ParseError("orbit: --t-max must be positive");
        const Vector x = parse_vector(orbit_x, 7, "--x");
        const Vector p0v = parse_vector(orbit_p0, 8, "--p0");
        Octonion p0{};
        for (int i = 0; i < 8; ++i) p0.c[static_cast<std::size_t>(i)] = p0v[i];
        const auto traj = flow_trajectory(x, p0, make_time_grid(orbit_tmax, orbit_steps),
                                          convention_from_string(orbit_conv));
        write_output(trajectory_to_csv(traj), output);
    });

    // defect
    auto* defect_cmd =
        app.add_subcommand("defect", "defect-operator norms over basis and sampled pairs");
    defect_cmd->fallthrough();
    int defect_samples = 100;
    std::string defect_check;
    defect_cmd->add_option("--samples", defect_samples, "random unit pairs to sample")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    defect_cmd->add_option("--check", defect_check, "validate an existing defect JSON instead");
    defect_cmd->callback([&]() {
        require_native_format(format, "json", "defect");
        if (!defect_check.empty()) {
            check_defect_json(defect_check);
            return;
        }
        const AlgebraSpec alg = resolve_algebra(algebra);
        DefectArtifact art;
        art.algebra = alg.name();
        art.norm = defect_norm(alg, defect_samples, seed);
        art.sample_count = defect_samples;
        art.seed = seed;
        write_output(defect_to_json(art, !reproducible), output);
    });

    // bch
    auto* bch_cmd = app.add_subcommand(
        "bch", "truncation error of the BCH series against log(exp x . exp y)");
    bch_cmd->fallthrough();
    int bch_order = 6;
    double bch_B = 2.0, bch_K = 1.0;
    std::string bch_scales = "1", bch_x, bch_y, bch_check;
    bch_cmd->add_option("--order", bch_order, "truncation order, 1..6")->capture_default_str();
    bch_cmd->add_option("--B", bch_B, "bracket continuity constant")->capture_default_str();
    bch_cmd->add_option("--K", bch_K, "BCH coefficient bound (>= 1)")->capture_default_str();
    bch_cmd->add_option("--scales", bch_scales,
                        "comma-separated scale factors applied to the direction pair")
        ->capture_default_str();
    bch_cmd->add_option("--x", bch_x, "first direction (default 0.05 e1)");
    bch_cmd->add_option("--y", bch_y, "second direction (default 0.05 e3)");
    bch_cmd->add_option("--check", bch_check, "validate an existing bch JSON instead");
    bch_cmd->callback([&]() {
        require_native_format(format, "json", "bch");
        if (!bch_check.empty()) {
            check_bch_json(bch_check);
            return;
        }
        require_octonion(resolve_algebra(algebra), "bch");
        BchConfig cfg;
        cfg.order = bch_order;
        cfg.B = bch_B;
        cfg.K = bch_K;
        if (cfg.K < 1.0) throw ParseError("bch: --K must be >= 1");
        Vector x0 = Vector::Zero(7), y0 = Vector::Zero(7);
        x0[0] = 0.05;
        y0[2] = 0.05;
        if (!bch_x.empty()) x0 = parse_vector(bch_x, 7, "--x");
        if (!bch_y.empty()) y0 = parse_vector(bch_y, 7, "--y");
        const auto scales = parse_scales(bch_scales);
        std::vector<BchArtifactRow> rows;
        for (const double s : scales) {
            BchArtifactRow row;
            row.scale = s;
            row.error = bch_error(s * x0, s * y0, cfg.order);
            row.radius_ok = bch_radius_ok(cfg, s * x0, s * y0);
            rows.push_back(row);
        }
        write_output(bch_to_json(cfg.order, bch_radius_bound(cfg), rows), output);
    });

    // laplacian
    auto* lap_cmd = app.add_subcommand(
        "laplacian", "sphere-Laplacian eigenvalue/multiplicity table as CSV");
    lap_cmd->fallthrough();
    int lap_kmax = 6;
    std::string lap_check;
    lap_cmd->add_option("--k-max", lap_kmax, "largest degree (0..8)")->capture_default_str();
    lap_cmd->add_option("--check", lap_check, "validate an existing laplacian CSV instead");
    lap_cmd->callback([&]() {
        require_native_format(format, "csv", "laplacian");
        if (!lap_check.empty()) {
            check_laplacian_csv(lap_check);
            return;
        }
        if (lap_kmax < 0) throw ParseError("laplacian: --k-max must be nonnegative");
        if (lap_kmax > 8)
            throw ParseError("laplacian: --k-max above 8 (kernel oracle cost grows "
                             "combinatorially)");
        write_output(laplacian_to_csv(laplacian_table(lap_kmax)), output);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
