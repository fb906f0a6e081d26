// contour.cpp

#include "zetastrips/contour.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "zetastrips/errors.hpp"
#include "zetastrips/parallel.hpp"

namespace zetastrips {
namespace {

constexpr Complex kI{0.0, 1.0};

struct Sample {
    Complex s;
    Complex z;
    Complex dz;
    double bound = 0.0;
};

Sample sample(Complex s, const ZetaConfig& zeta) {
    const auto r = eval_zeta_with_deriv(ComplexPoint::from(s), zeta);
    return {s, r.value.value, r.deriv.value, r.value.abs_error_bound};
}

double level_tol(const Sample& x, const TraceOptions& options) {
    return std::max(options.corrector_tol * std::max(1.0, std::abs(x.z)), 4.0 * x.bound);
}

// Newton on Im zeta along grad Im zeta = i conj(zeta'): s <- s - i Im(zeta) / zeta'.
std::optional<Sample> correct(Complex q, const TraceOptions& options) {
    for (int it = 0;; ++it) {
        const Sample x = sample(q, options.zeta);
        if (std::abs(x.z.imag()) <= level_tol(x, options)) return x;
        if (it >= options.max_newton || x.dz == 0.0) return std::nullopt;
        q -= kI * x.z.imag() / x.dz;
    }
}

// Direction of increasing Re zeta along the level curve, times orient.
Complex tangent(const Sample& x, int orient) { return static_cast<double>(orient) * std::conj(x.dz) / std::abs(x.dz); }

double natural_step(const Sample& x, const TraceOptions& options) {
    const double scale = options.step_fraction * std::abs(x.z) / std::abs(x.dz);
    return std::clamp(scale, options.h_min, options.h_max);
}

struct ZeroHit {
    double t;
    long ordinal;
};

// Converges complex Newton to the zero near `from` and snaps it to the list.
std::optional<ZeroHit> capture_zero(Complex from, std::span<const CriticalZero> zeros, const TraceOptions& options) {
    Complex r = from;
    for (int it = 0; it < 50; ++it) {
        const auto e = eval_zeta_with_deriv(ComplexPoint::from(r), options.zeta);
        if (e.deriv.value == 0.0) return std::nullopt;
        const Complex step = e.value.value / e.deriv.value;
        r -= step;
        if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(r))) break;
    }
    if (std::abs(r.real() - 0.5) > 1e-6 || std::abs(from - r) > options.capture_dist) return std::nullopt;
    const double height = std::abs(r.imag());
    auto it = std::lower_bound(zeros.begin(), zeros.end(), height,
                               [](const CriticalZero& z, double v) { return z.t < v; });
    const CriticalZero* best = nullptr;
    if (it != zeros.end()) best = &*it;
    if (it != zeros.begin() && (!best || height - std::prev(it)->t < best->t - height)) best = &*std::prev(it);
    if (!best || std::abs(best->t - height) > options.capture_dist) return std::nullopt;
    return ZeroHit{std::copysign(best->t, r.imag()), best->ordinal};
}

struct Walk {
    std::vector<ComplexPoint> points;
    Terminus terminus;
    long zero_ordinal = 0;
};

// Follows the level curve through `cur` in the direction orient * conj(zeta').
// orient = -1 walks towards decreasing Re zeta and stops at zeros.
Walk walk(Sample cur, int orient, bool stop_right, std::span<const CriticalZero> zeros, const TraceOptions& options) {
    Walk out;
    out.points.push_back(ComplexPoint::from(cur.s));
    double h = natural_step(cur, options);
    int failures = 0;
    const double cos_turn = std::cos(options.max_turn);

    for (int step = 0; step < options.max_steps; ++step) {
        if (cur.s.real() < options.sigma_left) {
            out.terminus = {TerminusType::LeftBoundary, options.sigma_left, {}};
            return out;
        }
        if (stop_right && cur.s.real() >= options.sigma_right) {
            out.terminus = {TerminusType::RightBoundary, options.sigma_right, {}};
            return out;
        }
        if (orient < 0 && (std::abs(cur.z) < options.capture_abs || cur.z.real() <= 0.0)) {
            if (auto hit = capture_zero(cur.s, zeros, options)) {
                out.points.push_back({0.5, hit->t});
                out.terminus = {TerminusType::Zero, hit->t, {}};
                out.zero_ordinal = hit->ordinal;
                return out;
            }
            if (cur.z.real() <= 0.0) {
                out.terminus = {TerminusType::Aborted, 0.0, "passed a zero missing from the zero list"};
                return out;
            }
        }

        const Complex dir = tangent(cur, orient);
        const Complex predicted = cur.s + h * dir;
        const auto next = correct(predicted, options);
        bool accepted = false;
        if (next && next->dz != 0.0) {
            const double noise = level_tol(cur, options) + level_tol(*next, options);
            const bool close = std::abs(next->s - predicted) <= 0.5 * h;
            const bool smooth = (tangent(*next, orient) * std::conj(dir)).real() >= cos_turn;
            const bool monotone = orient * (next->z.real() - cur.z.real()) > -noise;
            // Crossing a zero flips Re zeta; capture handles that on the next pass.
            const bool through_zero = orient < 0 && next->z.real() <= 0.0 && close;
            accepted = close && (smooth || through_zero) && (monotone || through_zero);
        }
        if (!accepted) {
            if (h <= options.h_min) {
                if (++failures >= options.max_failures) {
                    throw StallError("corrector failed " + std::to_string(failures) + " times near sigma = " +
                                     std::to_string(cur.s.real()) + ", t = " + std::to_string(cur.s.imag()));
                }
            }
            h = std::max(0.5 * h, options.h_min);
            continue;
        }
        failures = 0;
        cur = *next;
        out.points.push_back(ComplexPoint::from(cur.s));
        h = std::min(1.5 * h, natural_step(cur, options));
        h = std::clamp(h, options.h_min, options.h_max);
    }
    out.terminus = {TerminusType::Aborted, 0.0, "step budget exhausted"};
    return out;
}

double polish_crossing(double sigma, double t_guess, double scale, const ZetaConfig& zeta) {
    auto eval = [&](double t) { return eval_zeta_with_deriv({sigma, t}, zeta); };
    double t = t_guess;
    for (int it = 0; it < 30; ++it) {
        const auto e = eval(t);
        const double f = e.value.value.imag();
        const double df = e.deriv.value.real();  // d/dt Im zeta = Re zeta'
        if (std::abs(f) <= 4.0 * e.value.abs_error_bound || df == 0.0) break;
        const double dt = f / df;
        t -= dt;
        if (std::abs(dt) < 1e-14 * std::max(1.0, std::abs(t))) break;
    }
    if (std::abs(t - t_guess) <= scale) return t;

    // Newton left the neighbourhood: bracket the nearest sign change and bisect.
    auto f = [&](double x) { return eval_zeta({sigma, x}, zeta).value.imag(); };
    const double delta = scale / 8.0;
    const double f0 = f(t_guess);
    for (int j = 1; j <= 16; ++j) {
        for (const double side : {-1.0, 1.0}) {
            double lo = t_guess + side * (j - 1) * delta;
            double hi = t_guess + side * j * delta;
            double f_lo = j == 1 ? f0 : f(lo);
            if ((f_lo < 0.0) == (f(hi) < 0.0)) continue;
            for (int it = 0; it < 60 && std::abs(hi - lo) > 1e-13 * std::abs(hi); ++it) {
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
    }
    throw NoCrossingError("no root of Im zeta near t = " + std::to_string(t_guess) + " at sigma = " +
                          std::to_string(sigma));
}

}  // namespace

std::vector<Seed> seed_starts(int m_max, double sigma_right, const ZetaConfig& zeta) {
    if (m_max < 1) throw DomainError("m_max must be >= 1");
    if (!(sigma_right > 1.0) || !(eval_zeta({sigma_right, 0.0}, zeta).value.real() - 1.0 < 0.3)) {
        throw SeedError("sigma_right = " + std::to_string(sigma_right) +
                        " does not guarantee |zeta - 1| < 0.3 along the seed line");
    }
    const double half_spacing = 0.5 * kPi / kLn2;
    std::vector<Seed> seeds;
    for (int k = 2; k <= 2 * m_max + 2; ++k) {
        const double t0 = k * kPi / kLn2;
        double t = t0;
        bool converged = false;
        for (int it = 0; it < 50; ++it) {
            const auto e = eval_zeta_with_deriv({sigma_right, t}, zeta);
            const double f = e.value.value.imag();
            if (std::abs(f) < 1e-13) {
                converged = e.value.value.real() > 0.0;
                break;
            }
            t -= f / e.deriv.value.real();
            if (!std::isfinite(t) || std::abs(t - t0) > half_spacing) break;
        }
        if (!converged) {
            throw SeedError("seed polishing diverged for k = " + std::to_string(k) + " at sigma = " +
                            std::to_string(sigma_right));
        }
        seeds.push_back({k, {sigma_right, t}, k % 2 == 0 ? TraceKind::Boundary : TraceKind::PrimaryCandidate});
    }
    return seeds;
}

ContourTrace trace_im_zero(const Seed& seed, std::span<const CriticalZero> zeros, const TraceOptions& options) {
    const auto start = correct(seed.start.to_complex(), options);
    if (!start) throw StallError("start point is not on a level curve Im zeta = 0");
    if (start->dz == 0.0) throw StallError("zeta' vanishes at the start point");
    // Leftward means the first tangent has negative sigma component.
    const int orient = std::conj(start->dz).real() < 0.0 ? 1 : -1;
    Walk w = walk(*start, orient, false, zeros, options);
    ContourTrace trace;
    trace.k = seed.k;
    trace.kind = seed.kind;
    trace.start = seed.start;
    trace.points = std::move(w.points);
    trace.terminus = std::move(w.terminus);
    trace.zero_ordinal = w.zero_ordinal;
    return trace;
}

std::vector<ContourTrace> trace_all(std::span<const Seed> seeds, std::span<const CriticalZero> zeros,
                                    const TraceOptions& options, unsigned workers) {
    std::vector<ContourTrace> out(seeds.size());
    parallel_for(seeds.size(), workers, [&](std::size_t i) {
        try {
            out[i] = trace_im_zero(seeds[i], zeros, options);
        } catch (const ZetaError& e) {
            throw StallError("trace k = " + std::to_string(seeds[i].k) + ": " + e.what());
        }
    });
    return out;
}

double crossing_at_sigma(const ContourTrace& trace, double sigma, const ZetaConfig& zeta) {
    const auto& pts = trace.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].sigma == sigma) return polish_crossing(sigma, pts[i].t, 1e-3, zeta);
        if (i + 1 == pts.size()) break;
        const double a = pts[i].sigma - sigma;
        const double b = pts[i + 1].sigma - sigma;
        if ((a < 0.0) == (b < 0.0)) continue;
        const double w = a / (a - b);
        const double t_interp = pts[i].t + w * (pts[i + 1].t - pts[i].t);
        const double seg = std::hypot(pts[i + 1].sigma - pts[i].sigma, pts[i + 1].t - pts[i].t);
        return polish_crossing(sigma, t_interp, std::max(2.0 * seg, 1e-3), zeta);
    }
    throw NoCrossingError("trace k = " + std::to_string(trace.k) + " never reaches sigma = " + std::to_string(sigma));
}

ZeroContourClass classify_zero_contour(const CriticalZero& zero, const TraceOptions& options) {
    const auto at_zero = eval_zeta_with_deriv({0.5, zero.t}, options.zeta);
    const Complex dz = at_zero.deriv.value;
    if (dz == 0.0) throw BranchError("zeta' vanishes at t = " + std::to_string(zero.t));
    // zeta(rho + r d) ~ zeta'(rho) r d is real positive for d = conj(zeta') / |zeta'|.
    const Complex launch = Complex(0.5, zero.t) + options.launch_radius * std::conj(dz) / std::abs(dz);
    const auto start = correct(launch, options);
    if (!start || start->z.real() <= 0.0 || std::abs(start->s - launch) > options.launch_radius) {
        throw BranchError("no theta = 0 branch within the launch radius of t = " + std::to_string(zero.t));
    }
    const Walk w = walk(*start, 1, true, {}, options);
    switch (w.terminus.type) {
        case TerminusType::RightBoundary: return ZeroContourClass::RightInfinity;
        case TerminusType::LeftBoundary: return ZeroContourClass::LeftInfinity;
        default:
            throw BranchError("theta = 0 branch from t = " + std::to_string(zero.t) + " ended: " + w.terminus.reason);
    }
}

const char* to_string(TerminusType type) {
    switch (type) {
        case TerminusType::LeftBoundary: return "LeftBoundary";
        case TerminusType::RightBoundary: return "RightBoundary";
        case TerminusType::Zero: return "Zero";
        case TerminusType::Aborted: return "Aborted";
    }
    return "?";
}

const char* to_string(TraceKind kind) { return kind == TraceKind::Boundary ? "boundary" : "primary"; }

const char* to_string(ZeroContourClass cls) {
    return cls == ZeroContourClass::RightInfinity ? "RightInfinity" : "LeftInfinity";
}

}  // namespace zetastrips
