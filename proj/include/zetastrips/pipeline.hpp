// pipeline.hpp
//
// End-to-end orchestration: zeros -> traces -> strips -> statistics.
//
// `run` writes the published artifacts into config.output_dir only after every
// stage succeeded. Completed zero and trace stages are cached under
// output_dir/stages/, keyed by a hash of the parameters they depend on, and
// reused on the next run. A failed run leaves its partial outputs in
// output_dir/quarantine/<hash>/ together with error.json.

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetastrips/contour.hpp"
#include "zetastrips/stats.hpp"
#include "zetastrips/strips.hpp"
#include "zetastrips/zeros.hpp"

namespace zetastrips {

struct RunConfig {
    int m_max = 200;
    double sigma_right = 8.0;
    double sigma_left = -3.0;
    double measurement_sigma = 0.5;
    bool rounding_emulation = true;
    std::filesystem::path output_dir = "zeta_output";
    double scan_step = 0.05;
    unsigned worker_count = 0;  // 0: available parallelism
};

inline constexpr double kZeroRangeMin = 8.0;

// Throws ConfigError.
void validate_config(const RunConfig& config);

// Upper end of the zero search: the asymptote of strip m_max + 1 plus a margin.
double zero_range_max(const RunConfig& config);

ZeroScanOptions zero_options(const RunConfig& config);
TraceOptions trace_options(const RunConfig& config);

// Hash of the parameters a stage ("zeros", "traces", "run") depends on.
std::string stage_hash(const RunConfig& config, const std::string& stage);

std::vector<CriticalZero> compute_zeros(const RunConfig& config);
std::vector<ContourTrace> compute_traces(const RunConfig& config, std::span<const CriticalZero> zeros);

struct PrimaryCheck {
    int m = 0;
    long primary_ordinal = 0;
    std::vector<long> right_infinity;  // ordinals classified RightInfinity
    bool agrees = false;               // exactly one, and it is the primary
};

std::vector<PrimaryCheck> cross_check_primaries(std::span<const Strip> strips, const TraceOptions& options,
                                                unsigned workers);

// report.json contents. `checks` and `zero_count` are optional.
nlohmann::json build_report(std::span<const Strip> strips, const RunConfig& config,
                            std::span<const PrimaryCheck> checks = {}, const CountReport* zero_count = nullptr);

// Writes fig1..fig5 CSVs (plus fig1_tops.csv) into dir.
void write_series(const std::filesystem::path& dir, std::span<const Strip> strips, bool rounding_emulation);

struct RunSummary {
    std::size_t strips = 0;
    std::size_t zeros = 0;
    std::size_t traces = 0;
    bool resumed_zeros = false;
    bool resumed_traces = false;
    int primary_agreement = 0;
    nlohmann::json report;
};

RunSummary run(const RunConfig& config);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> validate(const RunConfig& config);

// Rebuilds strips from strips.csv text and the zeros it was built from;
// throws IoError if the zero counts disagree.
std::vector<Strip> strips_from_csv(const std::string& strips_text, std::span<const CriticalZero> zeros,
                                   double measurement_sigma);

}  // namespace zetastrips
