// strips.cpp

#include "zetastrips/strips.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "zetastrips/errors.hpp"

namespace zetastrips {

std::vector<Strip> build_strips(std::span<const ContourTrace> traces, std::span<const CriticalZero> zeros,
                                double measurement_sigma, const ZetaConfig& zeta) {
    std::map<int, const ContourTrace*> by_k;
    for (const auto& tr : traces) by_k[tr.k] = &tr;
    if (by_k.empty()) throw PartitionError("no traces");
    const int first_m = (by_k.begin()->first + 1) / 2;
    int m_max = first_m - 1;
    while (by_k.count(2 * m_max + 2) && by_k.count(2 * m_max + 3) && by_k.count(2 * m_max + 4)) ++m_max;
    if (m_max < first_m) throw PartitionError("traces do not cover a single strip");

    std::vector<double> crossings;
    for (int m = first_m; m <= m_max + 1; ++m) {
        const ContourTrace& tr = *by_k.at(2 * m);
        if (tr.terminus.type != TerminusType::LeftBoundary) {
            throw PartitionError("boundary trace k = " + std::to_string(tr.k) + " ended with " +
                                 to_string(tr.terminus.type) + " " + tr.terminus.reason);
        }
        crossings.push_back(crossing_at_sigma(tr, measurement_sigma, zeta));
    }
    std::vector<long> primaries;
    for (int m = first_m; m <= m_max; ++m) {
        const ContourTrace& tr = *by_k.at(2 * m + 1);
        if (tr.terminus.type != TerminusType::Zero) {
            throw MissingPrimaryError("primary trace k = " + std::to_string(tr.k) + " ended with " +
                                      to_string(tr.terminus.type) + " " + tr.terminus.reason);
        }
        primaries.push_back(tr.zero_ordinal);
    }
    return assemble_strips(first_m, crossings, primaries, zeros, measurement_sigma);
}

std::vector<Strip> assemble_strips(int first_m, std::span<const double> boundary_crossings,
                                   std::span<const long> primary_ordinals, std::span<const CriticalZero> zeros,
                                   double measurement_sigma) {
    if (boundary_crossings.size() != primary_ordinals.size() + 1) {
        throw PartitionError("need exactly one more boundary than primary trace");
    }
    std::vector<Strip> strips;
    for (std::size_t i = 0; i < primary_ordinals.size(); ++i) {
        Strip s;
        s.m = first_m + static_cast<int>(i);
        s.bottom_t = boundary_crossings[i];
        s.top_t = boundary_crossings[i + 1];
        s.measurement_sigma = measurement_sigma;
        if (!(s.bottom_t < s.top_t)) {
            throw PartitionError("strip " + std::to_string(s.m) + " has bottom >= top");
        }
        for (const auto& z : zeros) {
            if (std::abs(z.t - s.bottom_t) < kPartitionGuard || std::abs(z.t - s.top_t) < kPartitionGuard) {
                throw PartitionError("zero at t = " + std::to_string(z.t) + " sits on a boundary of strip " +
                                     std::to_string(s.m));
            }
            if (z.t > s.bottom_t && z.t < s.top_t) s.zeros.push_back(z);
        }
        const auto it = std::find_if(s.zeros.begin(), s.zeros.end(),
                                     [&](const CriticalZero& z) { return z.ordinal == primary_ordinals[i]; });
        if (it == s.zeros.end()) {
            throw MissingPrimaryError("primary zero #" + std::to_string(primary_ordinals[i]) +
                                      " is not inside strip " + std::to_string(s.m));
        }
        s.primary_index = static_cast<int>(it - s.zeros.begin()) + 1;
        strips.push_back(std::move(s));
    }
    return strips;
}

double strip_width(const Strip& strip) { return strip.top_t - strip.bottom_t; }

RoundedStrip rounded_strip(const Strip& strip) {
    RoundedStrip r;
    r.m = strip.m;
    r.bottom = static_cast<long>(std::floor(strip.bottom_t + 0.5));
    r.top = static_cast<long>(std::floor(strip.top_t + 0.5));
    r.width = r.top - r.bottom;
    return r;
}

PrimaryScore primary_score(const Strip& strip) {
    const auto n = static_cast<double>(strip.zeros.size());
    return {(strip.primary_index - 0.5) / n};
}

}  // namespace zetastrips
