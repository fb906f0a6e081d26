// stats.cpp

#include "zetastrips/stats.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "zetastrips/errors.hpp"

namespace zetastrips {

FitResult linfit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw DegenerateError("xs and ys differ in length");
    const std::size_t n = xs.size();
    if (n < 3) throw DegenerateError("need at least 3 points");
    const double nd = static_cast<double>(n);
    const double x_mean = std::accumulate(xs.begin(), xs.end(), 0.0) / nd;
    const double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / nd;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    }
    if (sxx == 0.0) throw DegenerateError("xs are all equal");
    FitResult fit;
    fit.n = n;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ssr += r * r;
    }
    const double s2 = ssr / (nd - 2.0);
    fit.slope_stderr = std::sqrt(s2 / sxx);
    fit.intercept_stderr = std::sqrt(s2 * (1.0 / nd + x_mean * x_mean / sxx));
    return fit;
}

std::vector<SeriesRow> series(std::span<const Strip> strips, SeriesId id, bool rounding_emulation) {
    std::vector<SeriesRow> rows;
    rows.reserve(strips.size());
    for (const auto& s : strips) {
        const RoundedStrip r = rounded_strip(s);
        const double width = rounding_emulation ? static_cast<double>(r.width) : strip_width(s);
        double v = 0.0;
        switch (id) {
            case SeriesId::Bottoms: v = rounding_emulation ? static_cast<double>(r.bottom) : s.bottom_t; break;
            case SeriesId::Tops: v = rounding_emulation ? static_cast<double>(r.top) : s.top_t; break;
            case SeriesId::Widths: v = width; break;
            case SeriesId::Zeros: v = static_cast<double>(s.zeros.size()); break;
            case SeriesId::ZerosPerWidth:
                if (width <= 0.0) throw DegenerateError("strip " + std::to_string(s.m) + " has zero width");
                v = static_cast<double>(s.zeros.size()) / width;
                break;
            case SeriesId::PrimaryScore: v = primary_score(s).value; break;
        }
        rows.push_back({s.m, v, id});
    }
    return rows;
}

std::vector<double> values_of(std::span<const SeriesRow> rows) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.value);
    return out;
}

const char* to_string(SeriesId id) {
    switch (id) {
        case SeriesId::Bottoms: return "bottoms";
        case SeriesId::Tops: return "tops";
        case SeriesId::Widths: return "widths";
        case SeriesId::Zeros: return "zeros";
        case SeriesId::ZerosPerWidth: return "zeros_per_width";
        case SeriesId::PrimaryScore: return "primary_score";
    }
    return "?";
}

SampleStats sample_stats(std::span<const double> values) {
    SampleStats st;
    st.n = values.size();
    if (st.n == 0) return st;
    st.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(st.n);
    if (st.n > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - st.mean) * (v - st.mean);
        st.variance = ss / static_cast<double>(st.n - 1);
    }
    return st;
}

DispersionReport dispersion_compare(std::span<const double> scores) {
    const std::size_t half = scores.size() / 2;
    if (half < 2) throw DegenerateError("need at least 2 scores per half");
    DispersionReport rep;
    rep.first = sample_stats(scores.first(half));
    rep.second = sample_stats(scores.subspan(half));
    rep.pooled = sample_stats(scores);
    if (rep.first.variance == 0.0 && rep.second.variance == 0.0) {
        rep.variance_ratio = 1.0;
    } else if (rep.second.variance == 0.0) {
        rep.variance_ratio = std::numeric_limits<double>::infinity();
    } else {
        rep.variance_ratio = rep.first.variance / rep.second.variance;
    }
    return rep;
}

namespace {

double detrended_cv(std::span<const SeriesRow> rows) {
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
        xs.push_back(std::log(static_cast<double>(r.m)));
        ys.push_back(r.value);
    }
    const FitResult fit = linfit(xs, ys);
    double ssr = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double res = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ssr += res * res;
    }
    const double sd = std::sqrt(ssr / static_cast<double>(xs.size() - 2));
    if (sd == 0.0) return 0.0;
    const double mean = std::abs(sample_stats(ys).mean);
    return mean == 0.0 ? std::numeric_limits<double>::infinity() : sd / mean;
}

}  // namespace

ScatterReport scatter_dispersion(std::span<const SeriesRow> series_a, std::span<const SeriesRow> series_b) {
    if (series_a.size() != series_b.size()) throw DegenerateError("series lengths differ");
    ScatterReport rep;
    rep.cv_a = detrended_cv(series_a);
    rep.cv_b = detrended_cv(series_b);
    if (rep.cv_a == 0.0 && rep.cv_b == 0.0) {
        rep.ratio = 1.0;
    } else {
        rep.ratio = rep.cv_a == 0.0 ? std::numeric_limits<double>::infinity() : rep.cv_b / rep.cv_a;
    }
    return rep;
}

}  // namespace zetastrips
