// zeros.cpp

#include "zetastrips/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "zetastrips/errors.hpp"
#include "zetastrips/parallel.hpp"

namespace zetastrips {
namespace {

constexpr double kCheckpointSpacing = 0.25;
constexpr int kCheckpoints = 7;

double smooth_count(double T) { return rs_theta(T) / kPi + 1.0; }

// Integer nearest to the smooth count whose parity matches sign Z(T):
// zeta(1/2 + iT) = Z(T) e^{-i theta(T)} forces N(T) odd exactly when Z(T) > 0.
long parity_count(double T, const ZetaConfig& zeta) {
    const double smooth = smooth_count(T);
    if (hardy_z(T, zeta) > 0.0) return 2 * std::lround((smooth - 1.0) / 2.0) + 1;
    return 2 * std::lround(smooth / 2.0);
}

long zeros_in(std::span<const CriticalZero> zeros, double lo, double hi) {
    // count of zeros with lo < t <= hi
    auto first = std::upper_bound(zeros.begin(), zeros.end(), lo,
                                  [](double v, const CriticalZero& z) { return v < z.t; });
    auto last = std::upper_bound(zeros.begin(), zeros.end(), hi,
                                 [](double v, const CriticalZero& z) { return v < z.t; });
    return static_cast<long>(last - first);
}

std::vector<double> scan_brackets(double t_min, double t_max, double step, const ZeroScanOptions& options,
                                  std::vector<std::pair<double, double>>& brackets) {
    const auto intervals = static_cast<std::size_t>(std::ceil((t_max - t_min) / step));
    std::vector<double> grid(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        grid[i] = i == intervals ? t_max : t_min + (t_max - t_min) * static_cast<double>(i) / intervals;
    }
    std::vector<double> values(grid.size());
    parallel_for(grid.size(), options.workers, [&](std::size_t i) { values[i] = hardy_z(grid[i], options.zeta); });
    brackets.clear();
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if ((values[i - 1] < 0.0) != (values[i] < 0.0)) brackets.emplace_back(grid[i - 1], grid[i]);
    }
    return grid;
}

}  // namespace

double count_zeros_rvm(double T) {
    if (!(T >= 10.0)) throw DomainError("count_zeros_rvm requires T >= 10");
    return smooth_count(T);
}

long adjusted_zero_count(double T, std::span<const CriticalZero> zeros, double window_lo, double window_hi,
                         const ZetaConfig& zeta) {
    const double direction = (T - window_lo) >= (window_hi - T) ? -1.0 : 1.0;
    std::map<long, int> votes;
    std::map<long, int> first_seen;
    for (int j = 0; j < kCheckpoints; ++j) {
        const double c = T + direction * kCheckpointSpacing * j;
        if (c < window_lo || c > window_hi) break;
        long prediction = parity_count(c, zeta);
        if (c < T) prediction += zeros_in(zeros, c, T);
        if (c > T) prediction -= zeros_in(zeros, T, c);
        ++votes[prediction];
        first_seen.try_emplace(prediction, j);
    }
    long best = 0;
    int best_votes = -1;
    for (const auto& [value, count] : votes) {
        if (count > best_votes || (count == best_votes && first_seen[value] < first_seen[best])) {
            best = value;
            best_votes = count;
        }
    }
    return best;
}

CountReport verify_count(std::span<const CriticalZero> zeros, double t_min, double t_max, const ZetaConfig& zeta) {
    CountReport report;
    report.found = zeros_in(zeros, t_min, t_max);
    if (t_max <= t_min) {
        report.pass = report.found == 0;
        report.residual = static_cast<double>(report.found);
        return report;
    }
    report.expected = adjusted_zero_count(t_max, zeros, t_min, t_max, zeta) -
                      adjusted_zero_count(t_min, zeros, t_min, t_max, zeta);
    report.residual = static_cast<double>(report.found - report.expected);
    report.smooth_residual = static_cast<double>(report.found) - (smooth_count(t_max) - smooth_count(t_min));
    report.pass = std::abs(report.residual) < 0.5;
    return report;
}

double refine_zero(double lo, double hi, const ZeroScanOptions& options) {
    double z_lo = hardy_z(lo, options.zeta);
    for (int it = 0; it < options.max_bisections && hi - lo > options.bracket_width; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double z_mid = hardy_z(mid, options.zeta);
        if ((z_mid < 0.0) == (z_lo < 0.0)) {
            lo = mid;
            z_lo = z_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<CriticalZero> find_critical_zeros(double t_min, double t_max, const ZeroScanOptions& options) {
    if (!(t_min >= 1.0) || !(t_max <= 5000.0) || !(t_min <= t_max)) {
        throw DomainError("zero search range must satisfy 1 <= t_min <= t_max <= 5000");
    }
    if (!(options.scan_step > 0.0)) throw DomainError("scan step must be positive");
    if (t_min == t_max) return {};

    double step = options.scan_step;
    CountReport last;
    for (int attempt = 0; attempt <= options.max_halvings; ++attempt, step /= 2.0) {
        std::vector<std::pair<double, double>> brackets;
        scan_brackets(t_min, t_max, step, options, brackets);
        std::vector<CriticalZero> zeros(brackets.size());
        parallel_for(brackets.size(), options.workers, [&](std::size_t i) {
            zeros[i].t = refine_zero(brackets[i].first, brackets[i].second, options);
        });
        last = verify_count(zeros, t_min, t_max, options.zeta);
        if (!last.pass) continue;
        const long below = adjusted_zero_count(t_min, zeros, t_min, t_max, options.zeta);
        for (std::size_t i = 0; i < zeros.size(); ++i) zeros[i].ordinal = below + static_cast<long>(i) + 1;
        return zeros;
    }
    throw ScanResolutionError("count check failed on [" + std::to_string(t_min) + ", " + std::to_string(t_max) +
                              "]: found " + std::to_string(last.found) + ", expected " +
                              std::to_string(last.expected));
}

}  // namespace zetastrips
