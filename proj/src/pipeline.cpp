// pipeline.cpp

#include "zetastrips/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "zetastrips/errors.hpp"
#include "zetastrips/io.hpp"
#include "zetastrips/parallel.hpp"

namespace zetastrips {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string key(const char* name, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.17g;", name, v);
    return buf;
}

json config_json(const RunConfig& c) {
    return {{"m_max", c.m_max},
            {"sigma_right", c.sigma_right},
            {"sigma_left", c.sigma_left},
            {"measurement_sigma", c.measurement_sigma},
            {"rounding_emulation", c.rounding_emulation},
            {"scan_step", c.scan_step}};
}

std::vector<double> strip_numbers(std::span<const Strip> strips, double offset) {
    std::vector<double> xs;
    for (const auto& s : strips) xs.push_back(s.m - offset);
    return xs;
}

// Loads a cached stage or computes and caches it.
template <class Load, class Compute, class Store>
auto cached_stage(const fs::path& path, bool& resumed, Load load, Compute compute, Store store) {
    if (fs::exists(path)) {
        try {
            auto value = load(json::parse(io::read_text(path)));
            resumed = true;
            return value;
        } catch (const std::exception&) {
            // unreadable cache entry: recompute
        }
    }
    auto value = compute();
    io::write_text_atomic(path, store(value).dump() + "\n");
    return value;
}

}  // namespace

void validate_config(const RunConfig& c) {
    if (c.m_max < 1) throw ConfigError("m_max must be >= 1");
    if (!(c.sigma_left < c.measurement_sigma && c.measurement_sigma < c.sigma_right)) {
        throw ConfigError("need sigma_left < measurement_sigma < sigma_right");
    }
    if (!(c.scan_step > 0.0)) throw ConfigError("scan_step must be positive");
    if (zero_range_max(c) > 5000.0) throw ConfigError("m_max too large for the supported height range");
}

double zero_range_max(const RunConfig& config) {
    return strip_asymptote(std::max(config.m_max, 0) + 1, AsymptoteKind::Boundary) + 5.0;
}

ZeroScanOptions zero_options(const RunConfig& config) {
    ZeroScanOptions o;
    o.scan_step = config.scan_step;
    o.workers = config.worker_count;
    return o;
}

TraceOptions trace_options(const RunConfig& config) {
    TraceOptions o;
    o.sigma_left = config.sigma_left;
    o.sigma_right = config.sigma_right;
    return o;
}

std::string stage_hash(const RunConfig& c, const std::string& stage) {
    const ZetaConfig z{};
    std::string text = "zeros;" + key("t_min", kZeroRangeMin) + key("t_max", zero_range_max(c)) +
                       key("scan_step", c.scan_step) + key("beta", z.beta) + key("p", z.bernoulli_terms);
    if (stage != "zeros") {
        const TraceOptions t = trace_options(c);
        text += "traces;" + key("m_max", c.m_max) + key("sigma_right", t.sigma_right) +
                key("sigma_left", t.sigma_left) + key("h_min", t.h_min) + key("h_max", t.h_max) +
                key("tol", t.corrector_tol);
    }
    if (stage != "zeros" && stage != "traces") {
        text += "run;" + key("measurement_sigma", c.measurement_sigma) +
                key("rounding", c.rounding_emulation ? 1.0 : 0.0);
    }
    return io::fnv1a_hex(text);
}

std::vector<CriticalZero> compute_zeros(const RunConfig& config) {
    return find_critical_zeros(kZeroRangeMin, zero_range_max(config), zero_options(config));
}

std::vector<ContourTrace> compute_traces(const RunConfig& config, std::span<const CriticalZero> zeros) {
    const auto seeds = seed_starts(config.m_max, config.sigma_right);
    return trace_all(seeds, zeros, trace_options(config), config.worker_count);
}

std::vector<PrimaryCheck> cross_check_primaries(std::span<const Strip> strips, const TraceOptions& options,
                                                unsigned workers) {
    struct Job {
        std::size_t strip;
        CriticalZero zero;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < strips.size(); ++i) {
        for (const auto& z : strips[i].zeros) jobs.push_back({i, z});
    }
    std::vector<ZeroContourClass> classes(jobs.size());
    parallel_for(jobs.size(), workers, [&](std::size_t j) {
        try {
            classes[j] = classify_zero_contour(jobs[j].zero, options);
        } catch (const ZetaError& e) {
            throw BranchError("strip " + std::to_string(strips[jobs[j].strip].m) + ": " + e.what());
        }
    });
    std::vector<PrimaryCheck> out(strips.size());
    for (std::size_t i = 0; i < strips.size(); ++i) {
        out[i].m = strips[i].m;
        out[i].primary_ordinal = strips[i].zeros.at(static_cast<std::size_t>(strips[i].primary_index - 1)).ordinal;
    }
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        if (classes[j] == ZeroContourClass::RightInfinity) out[jobs[j].strip].right_infinity.push_back(jobs[j].zero.ordinal);
    }
    for (auto& c : out) c.agrees = c.right_infinity.size() == 1 && c.right_infinity.front() == c.primary_ordinal;
    return out;
}

json build_report(std::span<const Strip> strips, const RunConfig& config, std::span<const PrimaryCheck> checks,
                  const CountReport* zero_count) {
    const bool rounding = config.rounding_emulation;
    json report;
    report["config"] = config_json(config);
    report["config_hash"] = stage_hash(config, "run");
    std::size_t total_zeros = 0;
    for (const auto& s : strips) total_zeros += s.zeros.size();
    report["counts"] = {{"strips", strips.size()}, {"zeros_in_strips", total_zeros}};

    const auto bottoms = values_of(series(strips, SeriesId::Bottoms, rounding));
    const auto tops = values_of(series(strips, SeriesId::Tops, rounding));
    const auto scores = values_of(series(strips, SeriesId::PrimaryScore, rounding));
    json fits = json::object();
    if (strips.size() >= 3) {
        const auto x = strip_numbers(strips, 0.0);
        const auto x0 = strip_numbers(strips, 1.0);
        fits["bottoms"] = io::to_json(linfit(x, bottoms));
        fits["bottoms_x_minus_1"] = io::to_json(linfit(x0, bottoms));
        fits["tops"] = io::to_json(linfit(x, tops));
        fits["tops_x_minus_1"] = io::to_json(linfit(x0, tops));
        fits["bottoms_unrounded"] = io::to_json(linfit(x, values_of(series(strips, SeriesId::Bottoms, false))));
        fits["primary_score"] = io::to_json(linfit(x, scores));
    }
    report["fits"] = fits;

    const SampleStats score_stats = sample_stats(scores);
    const double score_se = std::sqrt(score_stats.variance / static_cast<double>(std::max<std::size_t>(score_stats.n, 1)));
    report["primary_score"] = {{"mean", score_stats.mean},
                               {"variance", score_stats.variance},
                               {"stderr", score_se},
                               {"mean_within_2se_of_half", std::abs(score_stats.mean - 0.5) <= 2.0 * score_se}};
    if (strips.size() >= 4) {
        const DispersionReport d = dispersion_compare(scores);
        report["halves"] = {{"first", io::to_json(d.first)},
                            {"second", io::to_json(d.second)},
                            {"pooled", io::to_json(d.pooled)},
                            {"variance_ratio", d.variance_ratio}};
        const auto zeros_rows = series(strips, SeriesId::Zeros, rounding);
        const auto zpw_rows = series(strips, SeriesId::ZerosPerWidth, rounding);
        const ScatterReport sc = scatter_dispersion(zeros_rows, zpw_rows);
        report["scatter"] = {{"zeros_cv", sc.cv_a}, {"zeros_per_width_cv", sc.cv_b}, {"ratio", sc.ratio}};
        const auto zeros_values = values_of(zeros_rows);
        const std::size_t half = zeros_values.size() / 2;
        report["zeros_per_strip"] = {
            {"mean_first_half", sample_stats(std::span(zeros_values).first(half)).mean},
            {"mean_second_half", sample_stats(std::span(zeros_values).subspan(half)).mean}};
    }
    if (!checks.empty()) {
        int agree = 0;
        for (const auto& c : checks) agree += c.agrees ? 1 : 0;
        report["primary_agreement"] = {{"agree", agree}, {"strips", checks.size()}};
    }
    if (zero_count) {
        report["zero_count_check"] = {{"pass", zero_count->pass},
                                      {"found", zero_count->found},
                                      {"expected", zero_count->expected},
                                      {"residual", zero_count->residual}};
    }
    report["series"] = {{"bottoms", "fig1.csv"},       {"tops", "fig1_tops.csv"},
                        {"widths", "fig2.csv"},        {"zeros", "fig3.csv"},
                        {"zeros_per_width", "fig4.csv"}, {"primary_score", "fig5.csv"}};
    report["plot"] = {{"fig3.csv", {{"x_scale", "log"}}}, {"fig4.csv", {{"x_scale", "log"}}}};
    return report;
}

void write_series(const fs::path& dir, std::span<const Strip> strips, bool rounding) {
    const std::pair<SeriesId, const char*> files[] = {
        {SeriesId::Bottoms, "fig1.csv"}, {SeriesId::Tops, "fig1_tops.csv"},       {SeriesId::Widths, "fig2.csv"},
        {SeriesId::Zeros, "fig3.csv"},   {SeriesId::ZerosPerWidth, "fig4.csv"}, {SeriesId::PrimaryScore, "fig5.csv"}};
    for (const auto& [id, name] : files) {
        io::write_text_atomic(dir / name, io::series_csv(series(strips, id, rounding), to_string(id)));
    }
}

RunSummary run(const RunConfig& config) {
    validate_config(config);
    const fs::path out = config.output_dir;
    const std::string hash = stage_hash(config, "run");
    const fs::path staging = out / (".staging-" + hash);
    fs::remove_all(staging);
    fs::create_directories(staging);

    RunSummary summary;
    try {
        const auto zeros = cached_stage(
            out / "stages" / ("zeros-" + stage_hash(config, "zeros") + ".json"), summary.resumed_zeros,
            [](const json& j) { return io::zeros_from_json(j); }, [&] { return compute_zeros(config); },
            [](const std::vector<CriticalZero>& z) { return io::zeros_to_json(z); });
        io::write_text_atomic(staging / "zeros.csv", io::zeros_csv(zeros));
        const CountReport zero_count = verify_count(zeros, kZeroRangeMin, zero_range_max(config));

        const auto traces = cached_stage(
            out / "stages" / ("traces-" + stage_hash(config, "traces") + ".json"), summary.resumed_traces,
            [](const json& j) { return io::traces_from_json(j); }, [&] { return compute_traces(config, zeros); },
            [](const std::vector<ContourTrace>& t) { return io::traces_to_json(t); });
        io::write_traces(staging, traces,
                         {{"config_hash", stage_hash(config, "traces")},
                          {"sigma_right", config.sigma_right},
                          {"sigma_left", config.sigma_left}});

        const auto strips = build_strips(traces, zeros, config.measurement_sigma);
        io::write_text_atomic(staging / "strips.csv", io::strips_csv(strips));

        const auto checks = cross_check_primaries(strips, trace_options(config), config.worker_count);
        write_series(staging, strips, config.rounding_emulation);
        summary.report = build_report(strips, config, checks, &zero_count);
        io::write_text_atomic(staging / "report.json", summary.report.dump(2) + "\n");

        for (const auto& entry : fs::directory_iterator(staging)) {
            const fs::path target = out / entry.path().filename();
            fs::remove_all(target);
            fs::rename(entry.path(), target);
        }
        fs::remove_all(staging);

        summary.strips = strips.size();
        summary.zeros = zeros.size();
        summary.traces = traces.size();
        for (const auto& c : checks) summary.primary_agreement += c.agrees ? 1 : 0;
        return summary;
    } catch (const std::exception& e) {
        const fs::path quarantine = out / "quarantine" / hash;
        fs::remove_all(quarantine);
        fs::create_directories(quarantine.parent_path());
        fs::rename(staging, quarantine);
        io::write_text_atomic(quarantine / "error.json", json{{"error", e.what()}}.dump(2) + "\n");
        throw;
    }
}

std::vector<CheckResult> validate(const RunConfig& config) {
    std::vector<CheckResult> results;
    auto add = [&](std::string name, bool pass, std::string detail) {
        results.push_back({std::move(name), pass, std::move(detail)});
        return pass;
    };
    try {
        validate_config(config);
    } catch (const ConfigError& e) {
        add("config", false, e.what());
        return results;
    }
    add("config", true, "");

    {
        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> sigma(0.0, 1.0), height(10.0, 2000.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double s = sigma(rng);
            const double t = height(rng);
            if (s == 0.0) continue;
            worst = std::max(worst, functional_eq_residual({s, t}));
        }
        std::ostringstream d;
        d << "max relative residual " << worst;
        add("functional_equation_grid", worst < 1e-8, d.str());
    }

    try {
        seed_starts(config.m_max, config.sigma_right);
        add("seeds", true, "");
    } catch (const ZetaError& e) {
        add("seeds", false, e.what());
        return results;
    }

    std::vector<CriticalZero> zeros;
    try {
        zeros = compute_zeros(config);
        const CountReport rep = verify_count(zeros, kZeroRangeMin, zero_range_max(config));
        add("zero_count", rep.pass,
            "found " + std::to_string(rep.found) + ", expected " + std::to_string(rep.expected));
    } catch (const ZetaError& e) {
        add("zero_count", false, e.what());
        return results;
    }

    std::vector<Strip> strips;
    try {
        const auto traces = compute_traces(config, zeros);
        int bad = 0;
        for (const auto& tr : traces) {
            const auto want = tr.kind == TraceKind::Boundary ? TerminusType::LeftBoundary : TerminusType::Zero;
            bad += tr.terminus.type == want ? 0 : 1;
        }
        add("trace_termini", bad == 0, std::to_string(bad) + " unexpected termini");
        strips = build_strips(traces, zeros, config.measurement_sigma);
    } catch (const ZetaError& e) {
        add("strips", false, e.what());
        return results;
    }

    {
        bool tiled = true;
        std::size_t inside = 0;
        for (std::size_t i = 0; i < strips.size(); ++i) {
            if (i + 1 < strips.size() && strips[i].top_t != strips[i + 1].bottom_t) tiled = false;
            inside += strips[i].zeros.size();
        }
        std::size_t expected = 0;
        for (const auto& z : zeros) {
            if (z.t > strips.front().bottom_t && z.t < strips.back().top_t) ++expected;
        }
        add("tiling", tiled && inside == expected,
            std::to_string(inside) + " zeros in strips, " + std::to_string(expected) + " in range");
    }

    {
        int mismatched = 0;
        for (const auto& s : strips) {
            const long n = adjusted_zero_count(s.top_t, zeros, kZeroRangeMin, zero_range_max(config)) -
                           adjusted_zero_count(s.bottom_t, zeros, kZeroRangeMin, zero_range_max(config));
            mismatched += n == static_cast<long>(s.zeros.size()) ? 0 : 1;
        }
        add("strip_zero_counts", mismatched == 0, std::to_string(mismatched) + " strips disagree");
    }

    try {
        const auto checks = cross_check_primaries(strips, trace_options(config), config.worker_count);
        int agree = 0;
        for (const auto& c : checks) agree += c.agrees ? 1 : 0;
        add("primary_agreement", agree == static_cast<int>(checks.size()),
            std::to_string(agree) + "/" + std::to_string(checks.size()));
    } catch (const ZetaError& e) {
        add("primary_agreement", false, e.what());
    }
    return results;
}

std::vector<Strip> strips_from_csv(const std::string& strips_text, std::span<const CriticalZero> zeros,
                                   double measurement_sigma) {
    std::vector<Strip> strips;
    for (const auto& row : io::parse_strips_csv(strips_text)) {
        Strip s;
        s.m = row.m;
        s.bottom_t = row.bottom_t;
        s.top_t = row.top_t;
        s.primary_index = row.primary_index;
        s.measurement_sigma = measurement_sigma;
        for (const auto& z : zeros) {
            if (z.t > s.bottom_t && z.t < s.top_t) s.zeros.push_back(z);
        }
        if (static_cast<long>(s.zeros.size()) != row.n_zeros) {
            throw IoError("strip " + std::to_string(s.m) + " lists " + std::to_string(row.n_zeros) +
                          " zeros but zeros.csv has " + std::to_string(s.zeros.size()) + " inside it");
        }
        strips.push_back(std::move(s));
    }
    return strips;
}

}  // namespace zetastrips
