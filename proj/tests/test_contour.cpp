#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "oracle.hpp"
#include "zetastrips/contour.hpp"
#include "zetastrips/errors.hpp"

using namespace zetastrips;

namespace {

const std::vector<CriticalZero>& low_zeros() {
    static const auto zeros = find_critical_zeros(8.0, 60.0);
    return zeros;
}

// Bisection for a root of Im zeta(sigma + it) in [lo, hi], evaluated by the oracle.
double oracle_im_root(double sigma, double lo, double hi) {
    auto f = [&](double t) { return oracle::zeta(sigma, t).imag(); };
    double f_lo = f(lo);
    REQUIRE((f_lo < 0.0) != (f(hi) < 0.0));
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Follows Im zeta = 0 from (8, t_start) down to sigma = 1/2 by re-solving
// in t on vertical lines, all with the oracle.
double oracle_follow_to_half(double t_start) {
    double t = t_start;
    for (int i = 0; i <= 150; ++i) {
        const double sigma = 8.0 - 0.05 * i;
        for (int it = 0; it < 30; ++it) {
            const double f = oracle::zeta(sigma, t).imag();
            const double df = oracle::zeta_deriv(sigma, t).real();
            const double dt = f / df;
            t -= dt;
            if (std::abs(dt) < 1e-13) break;
        }
    }
    return t;
}

Seed seed_for(int k) {
    for (const auto& s : seed_starts(3, 8.0)) {
        if (s.k == k) return s;
    }
    FAIL("no seed");
    return {};
}

}  // namespace

TEST_CASE("seeds") {
    const auto seeds = seed_starts(1, 8.0);
    REQUIRE(seeds.size() == 3);
    // Im zeta(8 + it) = -sum_n n^-8 sin(t ln n); the n >= 3 terms move the
    // root away from k pi / ln 2 by at most their total over 2^-8 ln 2.
    double tail = 0.0;
    for (int n = 3; n < 100000; ++n) tail += std::pow(n, -8.0);
    const double max_shift = tail / (std::pow(2.0, -8.0) * kLn2);
    for (std::size_t i = 0; i < 3; ++i) {
        const int k = static_cast<int>(i) + 2;
        CHECK(seeds[i].k == k);
        CHECK(seeds[i].start.sigma == 8.0);
        CHECK(seeds[i].kind == (k % 2 == 0 ? TraceKind::Boundary : TraceKind::PrimaryCandidate));
        CHECK(std::abs(eval_zeta(seeds[i].start).value.imag()) < 1e-12);
        CHECK(std::abs(seeds[i].start.t - k * kPi / kLn2) < max_shift);
        CHECK(std::abs(oracle::zeta(8.0, seeds[i].start.t).imag()) < 1e-12);
    }
    CHECK(seeds[0].start.t == doctest::Approx(9.065).epsilon(0.01));
    CHECK(seeds[1].start.t == doctest::Approx(13.597).epsilon(0.01));
    CHECK(seeds[2].start.t == doctest::Approx(18.129).epsilon(0.01));

    CHECK(seed_starts(200, 8.0).size() == 401);
    CHECK_THROWS_AS(seed_starts(1, 2.0), SeedError);
    CHECK_THROWS_AS(seed_starts(0, 8.0), DomainError);
}

TEST_CASE("strip 1 bottom boundary") {
    const auto tr = trace_im_zero(seed_for(2), low_zeros());
    CHECK(tr.terminus.type == TerminusType::LeftBoundary);
    CHECK(tr.kind == TraceKind::Boundary);
    CHECK(tr.points.back().sigma < -3.0);

    const double at_half = crossing_at_sigma(tr, 0.5);
    const double want = oracle_im_root(0.5, 9.5, 9.9);
    CHECK(std::abs(at_half - want) < 1e-9);
    CHECK(oracle::zeta(0.5, want).real() > 0.0);
    CHECK(at_half == doctest::Approx(9.67).epsilon(1e-3));
    CHECK(std::floor(at_half + 0.5) == 10.0);

    const double at_two = crossing_at_sigma(tr, 2.0);
    CHECK(at_two > 9.06);
    CHECK(at_two < 9.68);
    CHECK(std::abs(at_two - oracle_im_root(2.0, 9.06, 9.68)) < 1e-9);

    CHECK(crossing_at_sigma(tr, 8.0) == doctest::Approx(tr.start.t).epsilon(1e-12));
    CHECK_THROWS_AS(crossing_at_sigma(tr, 9.0), NoCrossingError);
}

TEST_CASE("strip 1 primary trace ends at the first zero") {
    const auto tr = trace_im_zero(seed_for(3), low_zeros());
    REQUIRE(tr.terminus.type == TerminusType::Zero);
    CHECK(tr.terminus.value == doctest::Approx(14.134725).epsilon(1e-7));
    CHECK(tr.zero_ordinal == 1);
}

TEST_CASE("trace invariants") {
    TraceOptions opts;
    for (int k = 2; k <= 8; ++k) {
        CAPTURE(k);
        const auto tr = trace_im_zero(seed_for(k), low_zeros(), opts);
        CHECK(tr.terminus.type == (k % 2 == 0 ? TerminusType::LeftBoundary : TerminusType::Zero));
        // the last point of a Zero trace is the snapped zero itself
        const std::size_t n = tr.points.size() - (tr.terminus.type == TerminusType::Zero ? 1 : 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto r = eval_zeta(tr.points[i]);
            const double tol = std::max(opts.corrector_tol * std::max(1.0, std::abs(r.value)), 4.0 * r.abs_error_bound);
            CHECK(std::abs(r.value.imag()) <= tol);
            CHECK(std::hypot(tr.points[i].sigma - 1.0, tr.points[i].t) > 1e-3);
            if (i > 0) {
                const double gap = std::hypot(tr.points[i].sigma - tr.points[i - 1].sigma,
                                              tr.points[i].t - tr.points[i - 1].t);
                CHECK(gap <= 1.5 * opts.h_max);
            }
        }
    }
}

TEST_CASE("conjugate start gives the mirror trace") {
    const Seed up = seed_for(2);
    Seed down = up;
    down.start.t = -up.start.t;
    const auto a = trace_im_zero(up, low_zeros());
    const auto b = trace_im_zero(down, low_zeros());
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(std::abs(a.points[i].sigma - b.points[i].sigma) < 1e-12);
        CHECK(std::abs(a.points[i].t + b.points[i].t) < 1e-12);
    }
    CHECK(b.terminus.type == TerminusType::LeftBoundary);
}

TEST_CASE("trace_all matches single traces") {
    const auto seeds = seed_starts(2, 8.0);
    const auto all = trace_all(seeds, low_zeros(), {}, 2);
    REQUIRE(all.size() == seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const auto one = trace_im_zero(seeds[i], low_zeros());
        CHECK(all[i].k == seeds[i].k);
        CHECK(all[i].points == one.points);
    }
}

TEST_CASE("missing zero aborts the primary trace") {
    std::vector<CriticalZero> without_first(low_zeros().begin() + 1, low_zeros().end());
    const auto tr = trace_im_zero(seed_for(3), without_first);
    CHECK(tr.terminus.type == TerminusType::Aborted);
    CHECK_FALSE(tr.terminus.reason.empty());
}

TEST_CASE("classify zero contours") {
    const auto& zeros = low_zeros();
    CHECK(classify_zero_contour(zeros[0]) == ZeroContourClass::RightInfinity);
    CHECK(classify_zero_contour(zeros[1]) == ZeroContourClass::RightInfinity);
    CHECK(classify_zero_contour(zeros[2]) == ZeroContourClass::LeftInfinity);
    // the curve entering at 5 pi / ln 2 reaches the critical line at the second zero
    const double end = oracle_follow_to_half(5.0 * kPi / kLn2);
    CHECK(std::abs(end - zeros[1].t) < 1e-8);
    const auto tr = trace_im_zero(seed_for(5), zeros);
    CHECK(tr.zero_ordinal == 2);
    // strips 1..3 span [9.67, 36.1]; one RightInfinity zero in each
    int right = 0;
    for (const auto& z : zeros) {
        if (z.t < 36.0) right += classify_zero_contour(z) == ZeroContourClass::RightInfinity ? 1 : 0;
    }
    CHECK(right == 3);
    CHECK(std::string(to_string(ZeroContourClass::LeftInfinity)) == "LeftInfinity");
}
