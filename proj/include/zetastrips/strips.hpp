// strips.hpp
//
// Strip m is the region between the boundary traces k = 2m and k = 2m + 2,
// measured where they cross a vertical line (sigma = 1/2 by default). Its
// primary zero is where the trace k = 2m + 1 ends.

#pragma once

#include <span>
#include <vector>

#include "zetastrips/contour.hpp"
#include "zetastrips/zeros.hpp"

namespace zetastrips {

struct Strip {
    int m = 0;
    double bottom_t = 0.0;
    double top_t = 0.0;
    std::vector<CriticalZero> zeros;  // ordered by height
    int primary_index = 0;            // 1-based, counted from the bottom
    double measurement_sigma = 0.5;
};

struct PrimaryScore {
    double value = 0.0;
};

struct RoundedStrip {
    int m = 0;
    long bottom = 0;
    long top = 0;
    long width = 0;
};

inline constexpr double kPartitionGuard = 1e-6;

// `traces` must contain the boundary traces k = 2a .. 2b + 2 and the primary
// traces k = 2a + 1 .. 2b + 1 for strips a..b, in any order.
std::vector<Strip> build_strips(std::span<const ContourTrace> traces, std::span<const CriticalZero> zeros,
                                double measurement_sigma, const ZetaConfig& zeta = {});

// Same assembly from precomputed boundary crossings (index i is the crossing
// of trace k = 2(first_m + i)) and the zero ordinal each primary trace ended on.
std::vector<Strip> assemble_strips(int first_m, std::span<const double> boundary_crossings,
                                   std::span<const long> primary_ordinals, std::span<const CriticalZero> zeros,
                                   double measurement_sigma);

double strip_width(const Strip& strip);

// floor(x + 1/2) on both edges, then differenced.
RoundedStrip rounded_strip(const Strip& strip);

PrimaryScore primary_score(const Strip& strip);

}  // namespace zetastrips
