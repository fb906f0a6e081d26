#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "zetastrips/errors.hpp"
#include "zetastrips/stats.hpp"

using namespace zetastrips;

namespace {

Strip make_strip(int m, double bottom, double top, int n_zeros, int primary_index) {
    Strip s;
    s.m = m;
    s.bottom_t = bottom;
    s.top_t = top;
    for (int i = 0; i < n_zeros; ++i) s.zeros.push_back({bottom + (top - bottom) * (i + 1) / (n_zeros + 1), i + 1L});
    s.primary_index = primary_index;
    return s;
}

}  // namespace

TEST_CASE("exact line") {
    std::vector<double> xs, ys;
    for (int m = 1; m <= 20; ++m) {
        xs.push_back(m);
        ys.push_back(9.06472 * m);
    }
    const auto fit = linfit(xs, ys);
    CHECK(fit.slope == doctest::Approx(9.06472).epsilon(1e-14));
    CHECK(std::abs(fit.intercept) < 1e-12);
    CHECK(fit.slope_stderr < 1e-12);
    CHECK(fit.intercept_stderr < 1e-11);
    CHECK(fit.n == 20);
}

TEST_CASE("fit matches the normal-equation oracle") {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> noise(0.0, 0.7);
    std::vector<double> xs, ys;
    for (int m = 1; m <= 200; ++m) {
        xs.push_back(m);
        ys.push_back(0.05 + 9.0646 * m + noise(rng));
    }
    const auto fit = linfit(xs, ys);
    const auto want = oracle::normal_equations(xs, ys);
    CHECK(fit.slope == doctest::Approx(want.slope).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(want.intercept).epsilon(1e-9));
    CHECK(fit.slope_stderr == doctest::Approx(want.slope_stderr).epsilon(1e-10));
    CHECK(fit.intercept_stderr == doctest::Approx(want.intercept_stderr).epsilon(1e-10));
}

TEST_CASE("degenerate fits") {
    const std::vector<double> two{1.0, 2.0};
    CHECK_THROWS_AS(linfit(two, two), DegenerateError);
    const std::vector<double> flat{3.0, 3.0, 3.0}, ys{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(linfit(flat, ys), DegenerateError);
    const std::vector<double> four{1.0, 2.0, 3.0, 4.0};
    CHECK_THROWS_AS(linfit(four, ys), DegenerateError);
}

TEST_CASE("series") {
    const std::vector<Strip> strips{make_strip(1, 9.67, 17.85, 1, 1), make_strip(2, 17.85, 27.0, 3, 2),
                                    make_strip(3, 27.0, 36.5, 4, 1)};
    const auto bottoms = series(strips, SeriesId::Bottoms, true);
    CHECK(values_of(bottoms) == std::vector<double>{10.0, 18.0, 27.0});
    CHECK(values_of(series(strips, SeriesId::Bottoms, false)) == std::vector<double>{9.67, 17.85, 27.0});
    CHECK(values_of(series(strips, SeriesId::Widths, true)) == std::vector<double>{8.0, 9.0, 10.0});
    CHECK(values_of(series(strips, SeriesId::Zeros, true)) == std::vector<double>{1.0, 3.0, 4.0});
    const auto zpw = values_of(series(strips, SeriesId::ZerosPerWidth, true));
    CHECK(zpw[1] == doctest::Approx(1.0 / 3.0));
    CHECK(values_of(series(strips, SeriesId::PrimaryScore, true)) == std::vector<double>{0.5, 0.5, 0.125});
    CHECK(bottoms[2].m == 3);
    CHECK(std::string(to_string(SeriesId::ZerosPerWidth)) == "zeros_per_width");

    const std::vector<Strip> thin{make_strip(1, 10.2, 10.4, 1, 1)};
    CHECK_THROWS_AS(series(thin, SeriesId::ZerosPerWidth, true), DegenerateError);
}

TEST_CASE("sample stats and halves") {
    const std::vector<double> v{0.1, 0.3, 0.5, 0.7, 0.2, 0.4, 0.6, 0.8};
    const auto st = sample_stats(v);
    CHECK(st.mean == doctest::Approx(0.45));
    CHECK(st.variance == doctest::Approx(0.06).epsilon(1e-12));

    const auto rep = dispersion_compare(v);
    CHECK(rep.first.n == 4);
    CHECK(rep.first.mean == doctest::Approx(0.4));
    CHECK(rep.second.mean == doctest::Approx(0.5));
    CHECK(rep.variance_ratio == doctest::Approx(1.0));

    const std::vector<double> same(6, 0.5);
    CHECK(dispersion_compare(same).variance_ratio == 1.0);
    const std::vector<double> three{0.1, 0.2, 0.3};
    CHECK_THROWS_AS(dispersion_compare(three), DegenerateError);
}

TEST_CASE("scatter comparison") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> noisy(0.0, 1.0), quiet(0.0, 0.01);
    std::vector<SeriesRow> a, b;
    for (int m = 1; m <= 100; ++m) {
        a.push_back({m, 2.0 + std::log(m) + noisy(rng), SeriesId::Zeros});
        b.push_back({m, 1.0 + 0.1 * std::log(m) + quiet(rng), SeriesId::ZerosPerWidth});
    }
    const auto rep = scatter_dispersion(a, b);
    CHECK(rep.cv_b < rep.cv_a);
    CHECK(rep.ratio == doctest::Approx(rep.cv_b / rep.cv_a));

    // a pure log trend has no scatter left
    std::vector<SeriesRow> clean;
    for (int m = 1; m <= 10; ++m) clean.push_back({m, 3.0 * std::log(m) + 1.0, SeriesId::Zeros});
    CHECK(scatter_dispersion(clean, clean).cv_a < 1e-12);
    a.pop_back();
    CHECK_THROWS_AS(scatter_dispersion(a, b), DegenerateError);
}
