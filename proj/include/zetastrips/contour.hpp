// contour.hpp
//
// Continuation of the level curves Im zeta(s) = 0.
//
// On such a curve the Cauchy-Riemann equations give grad Re zeta =
// (Re zeta', -Im zeta'), so conj(zeta') is both the tangent and the direction
// in which Re zeta increases. Re zeta is strictly monotone along the curve
// between critical points of zeta, which is what the tracer uses to detect a
// corrector that has jumped onto a neighbouring curve.
//
// Curves entering from sigma = +inf near t = k pi / ln 2:
//   k even  Re zeta > 1, grows leftward, the curve runs off to sigma = -inf
//           (strip boundary);
//   k odd   Re zeta < 1, shrinks leftward until it ends at a zero (the
//           strip's primary zero).

#pragma once

#include <span>
#include <string>
#include <vector>

#include "zetastrips/zeros.hpp"
#include "zetastrips/zeta.hpp"

namespace zetastrips {

enum class TraceKind { Boundary, PrimaryCandidate };

enum class TerminusType { LeftBoundary, RightBoundary, Zero, Aborted };

struct Terminus {
    TerminusType type = TerminusType::Aborted;
    double value = 0.0;  // sigma for boundaries, t for Zero
    std::string reason;  // Aborted only
};

struct Seed {
    int k = 0;  // asymptote index: t ~ k pi / ln 2
    ComplexPoint start;
    TraceKind kind = TraceKind::Boundary;
};

struct ContourTrace {
    int k = 0;
    TraceKind kind = TraceKind::Boundary;
    ComplexPoint start;
    std::vector<ComplexPoint> points;
    Terminus terminus;
    long zero_ordinal = 0;  // set when terminus is Zero
};

struct TraceOptions {
    double sigma_left = -3.0;
    double sigma_right = 8.0;
    double h_min = 1e-3;
    double h_max = 0.25;
    double step_fraction = 0.5;  // h <= step_fraction |zeta| / |zeta'|
    double max_turn = 0.35;      // radians of tangent rotation per step
    double corrector_tol = 1e-10;
    int max_newton = 8;
    int max_failures = 5;
    int max_steps = 20000;
    double capture_abs = 1e-4;
    double capture_dist = 0.05;
    double launch_radius = 1e-3;
    ZetaConfig zeta{};
};

// Starts at sigma_right for k = 2 .. 2 m_max + 2, polished so Im zeta = 0.
std::vector<Seed> seed_starts(int m_max, double sigma_right, const ZetaConfig& zeta = {});

// Traces leftward from `start` until sigma < sigma_left, a zero from `zeros`
// is reached, or the step budget runs out.
ContourTrace trace_im_zero(const Seed& seed, std::span<const CriticalZero> zeros, const TraceOptions& options = {});

// Traces every seed, in parallel.
std::vector<ContourTrace> trace_all(std::span<const Seed> seeds, std::span<const CriticalZero> zeros,
                                    const TraceOptions& options, unsigned workers);

// First crossing of the vertical line sigma, Newton-polished on Im zeta(sigma + it) = 0.
double crossing_at_sigma(const ContourTrace& trace, double sigma, const ZetaConfig& zeta = {});

enum class ZeroContourClass { RightInfinity, LeftInfinity };

// Follows the theta = 0 branch leaving `zero` (Im zeta = 0, Re zeta > 0).
ZeroContourClass classify_zero_contour(const CriticalZero& zero, const TraceOptions& options = {});

const char* to_string(TerminusType type);
const char* to_string(TraceKind kind);
const char* to_string(ZeroContourClass cls);

}  // namespace zetastrips
