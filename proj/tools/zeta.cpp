// zeta.cpp
//
// Command-line front end:
//
//   zeta run       full pipeline into --output-dir
//   zeta zeros     critical zeros on [--t-min, --t-max] -> zeros.csv
//   zeta trace     contours for strips --m a..b -> contours/, traces.json
//   zeta strips    strips.csv from the traces and zeros in --output-dir
//   zeta report    figure CSVs and report.json from strips.csv
//   zeta validate  cross-module checks
//   zeta eval      zeta(sigma + it) as JSON
//
// Exit status: 0 success, 2 failed validation or rejected configuration,
// 1 any other error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetastrips/errors.hpp"
#include "zetastrips/io.hpp"
#include "zetastrips/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace zetastrips;

namespace {

void add_config_flags(CLI::App* cmd, RunConfig& c, std::string& out_dir) {
    cmd->add_option("--m-max", c.m_max, "Number of strips")->envname("ZETA_M_MAX");
    cmd->add_option("--sigma-right", c.sigma_right, "Seed line")->envname("ZETA_SIGMA_RIGHT");
    cmd->add_option("--sigma-left", c.sigma_left, "Left trace boundary")->envname("ZETA_SIGMA_LEFT");
    cmd->add_option("--measurement-sigma", c.measurement_sigma, "Where strip edges are read off")
        ->envname("ZETA_MEASUREMENT_SIGMA");
    cmd->add_option("--rounding-emulation", c.rounding_emulation, "Round strip edges to integers (true/false)")
        ->envname("ZETA_ROUNDING_EMULATION");
    cmd->add_option("--output-dir", out_dir, "Artifact directory")->envname("ZETA_OUTPUT_DIR");
    cmd->add_option("--scan-step", c.scan_step, "Zero scan step in t")->envname("ZETA_SCAN_STEP");
    cmd->add_option("--worker-count", c.worker_count, "Worker threads (0: all cores)")->envname("ZETA_WORKER_COUNT");
}

// "a..b" or "b" (meaning 1..b)
std::pair<int, int> parse_strip_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) return {1, std::stoi(text)};
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ConfigError("--m expects 'a..b' or 'b', got '" + text + "'");
    }
}

std::vector<CriticalZero> zeros_for(const RunConfig& config, const fs::path& dir) {
    const fs::path path = dir / "zeros.csv";
    if (fs::exists(path)) {
        auto zeros = io::parse_zeros_csv(io::read_text(path));
        if (!zeros.empty() && zeros.front().t < strip_asymptote(1, AsymptoteKind::Primary) &&
            zeros.back().t > zero_range_max(config) - 10.0) {
            return zeros;
        }
    }
    auto zeros = compute_zeros(config);
    io::write_text_atomic(path, io::zeros_csv(zeros));
    return zeros;
}

int cmd_eval(double sigma, double t) {
    const auto r = eval_zeta({sigma, t});
    json out = {{"sigma", sigma},
                {"t", t},
                {"value", {{"re", r.value.real()}, {"im", r.value.imag()}}},
                {"abs_error_bound", r.abs_error_bound}};
    try {
        out["phase"] = phase({sigma, t}).theta;
    } catch (const NearZeroError&) {
        out["phase"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_zeros(RunConfig config, double t_min, double t_max) {
    if (std::isnan(t_max)) t_max = zero_range_max(config);
    const auto zeros = find_critical_zeros(t_min, t_max, zero_options(config));
    io::write_text_atomic(config.output_dir / "zeros.csv", io::zeros_csv(zeros));
    const auto rep = verify_count(zeros, t_min, t_max);
    std::cout << zeros.size() << " zeros on [" << t_min << ", " << t_max << "], count check "
              << (rep.pass ? "passed" : "FAILED") << " -> " << (config.output_dir / "zeros.csv").string() << "\n";
    return 0;
}

int cmd_trace(RunConfig config, const std::string& range) {
    const auto [first, last] = parse_strip_range(range);
    if (first < 1 || last < first) throw ConfigError("invalid strip range '" + range + "'");
    config.m_max = last;
    validate_config(config);
    const auto zeros = zeros_for(config, config.output_dir);
    std::vector<Seed> seeds;
    for (const auto& s : seed_starts(last, config.sigma_right)) {
        if (s.k >= 2 * first) seeds.push_back(s);
    }
    const auto traces = trace_all(seeds, zeros, trace_options(config), config.worker_count);
    io::write_traces(config.output_dir, traces,
                     {{"config_hash", stage_hash(config, "traces")},
                      {"sigma_right", config.sigma_right},
                      {"sigma_left", config.sigma_left}});
    std::cout << traces.size() << " traces -> " << (config.output_dir / "traces.json").string() << "\n";
    return 0;
}

int cmd_strips(const RunConfig& config) {
    const auto zeros = io::parse_zeros_csv(io::read_text(config.output_dir / "zeros.csv"));
    const auto traces = io::read_traces(config.output_dir);
    const auto strips = build_strips(traces, zeros, config.measurement_sigma);
    io::write_text_atomic(config.output_dir / "strips.csv", io::strips_csv(strips));
    std::cout << strips.size() << " strips -> " << (config.output_dir / "strips.csv").string() << "\n";
    return 0;
}

int cmd_report(const RunConfig& config) {
    const auto zeros = io::parse_zeros_csv(io::read_text(config.output_dir / "zeros.csv"));
    const auto strips =
        strips_from_csv(io::read_text(config.output_dir / "strips.csv"), zeros, config.measurement_sigma);
    write_series(config.output_dir, strips, config.rounding_emulation);
    const json report = build_report(strips, config);
    io::write_text_atomic(config.output_dir / "report.json", report.dump(2) + "\n");
    std::cout << "report -> " << (config.output_dir / "report.json").string() << "\n";
    return 0;
}

int cmd_run(const RunConfig& config) {
    const RunSummary s = run(config);
    std::cout << s.strips << " strips, " << s.zeros << " zeros, " << s.traces << " traces"
              << (s.resumed_traces ? " (traces resumed from cache)" : "") << "\n";
    if (s.report["fits"].contains("bottoms")) {
        const auto& b = s.report["fits"]["bottoms"];
        std::printf("bottoms fit: %.5f(%.5f) + %.4f(%.4f) * X\n", b["intercept"].get<double>(),
                    b["intercept_stderr"].get<double>(), b["slope"].get<double>(), b["slope_stderr"].get<double>());
    }
    std::cout << "primary agreement " << s.primary_agreement << "/" << s.strips << "\n";
    return 0;
}

int cmd_validate(const RunConfig& config) {
    const auto results = validate(config);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
        ok = ok && r.pass;
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann zeta strip decomposition"};
    app.require_subcommand(1);

    RunConfig config;
    std::string out_dir = config.output_dir.string();
    double sigma = 0.5, t = 14.0, t_min = kZeroRangeMin, t_max = std::nan("");
    std::string range = "1..200";

    auto* run_cmd = app.add_subcommand("run", "Full pipeline");
    auto* zeros_cmd = app.add_subcommand("zeros", "Critical-line zeros");
    auto* trace_cmd = app.add_subcommand("trace", "Trace Im zeta = 0 contours");
    auto* strips_cmd = app.add_subcommand("strips", "Assemble strips from traces");
    auto* report_cmd = app.add_subcommand("report", "Statistics and figure series");
    auto* validate_cmd = app.add_subcommand("validate", "Cross-module checks");
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate zeta(s)");
    for (auto* cmd : {run_cmd, zeros_cmd, trace_cmd, strips_cmd, report_cmd, validate_cmd}) {
        add_config_flags(cmd, config, out_dir);
    }
    zeros_cmd->add_option("--t-min", t_min, "Lower height");
    zeros_cmd->add_option("--t-max", t_max, "Upper height (default: just above strip m_max + 1)");
    trace_cmd->add_option("--m", range, "Strip range a..b");
    eval_cmd->add_option("--sigma", sigma, "Real part")->required();
    eval_cmd->add_option("--t", t, "Imaginary part")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    config.output_dir = out_dir;

    try {
        if (*eval_cmd) return cmd_eval(sigma, t);
        if (*validate_cmd) return cmd_validate(config);
        if (*trace_cmd) return cmd_trace(config, range);
        validate_config(config);
        if (*run_cmd) return cmd_run(config);
        if (*zeros_cmd) return cmd_zeros(config, t_min, t_max);
        if (*strips_cmd) return cmd_strips(config);
        if (*report_cmd) return cmd_report(config);
    } catch (const ConfigError& e) {
        std::cerr << "zeta: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "zeta: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
