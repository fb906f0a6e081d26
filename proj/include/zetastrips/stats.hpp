// stats.hpp
//
// Least-squares fits with parameter standard errors, per-strip series and
// the dispersion comparisons run over a strip decomposition.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "zetastrips/strips.hpp"

namespace zetastrips {

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double intercept_stderr = 0.0;
    std::size_t n = 0;
};

// Ordinary least squares, residual variance with n - 2 degrees of freedom.
FitResult linfit(std::span<const double> xs, std::span<const double> ys);

enum class SeriesId { Bottoms, Tops, Widths, Zeros, ZerosPerWidth, PrimaryScore };

struct SeriesRow {
    int m = 0;
    double value = 0.0;
    SeriesId id = SeriesId::Bottoms;
};

// With rounding emulation on, bottoms/tops/widths (and the width used in
// zeros_per_width) are the half-up rounded values.
std::vector<SeriesRow> series(std::span<const Strip> strips, SeriesId id, bool rounding_emulation);

std::vector<double> values_of(std::span<const SeriesRow> rows);

const char* to_string(SeriesId id);

struct SampleStats {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased
};

SampleStats sample_stats(std::span<const double> values);

struct DispersionReport {
    SampleStats first;
    SampleStats second;
    SampleStats pooled;
    double variance_ratio = 1.0;  // first / second; 1 when both vanish
};

// Splits the scores into a lower and an upper half by strip order.
DispersionReport dispersion_compare(std::span<const double> scores);

struct ScatterReport {
    double cv_a = 0.0;
    double cv_b = 0.0;
    double ratio = 1.0;  // cv_b / cv_a; 1 when both vanish
};

// Coefficient of variation of each series after removing its least-squares
// trend against log m: residual standard error over |mean|.
ScatterReport scatter_dispersion(std::span<const SeriesRow> series_a, std::span<const SeriesRow> series_b);

}  // namespace zetastrips
