// zeros.hpp
//
// Critical-line zeros from sign changes of Hardy's Z function, refined by
// bisection and checked against the smooth Riemann-von Mangoldt count.

#pragma once

#include <span>
#include <vector>

#include "zetastrips/zeta.hpp"

namespace zetastrips {

struct CriticalZero {
    double t = 0.0;
    long ordinal = 0;  // 1-based index by height
};

struct ZeroScanOptions {
    double scan_step = 0.05;
    int max_halvings = 3;
    int max_bisections = 60;
    double bracket_width = 1e-10;
    unsigned workers = 0;  // 0: hardware concurrency
    ZetaConfig zeta{};
};

// theta_RS(T)/pi + 1, the smooth part of N(T). Requires T >= 10.
double count_zeros_rvm(double T);

// N(T) estimated from the smooth count, the parity implied by sign Z(T), and
// a vote over nearby checkpoints. `zeros` must hold every zero
// inside [window_lo, window_hi]; checkpoints are taken inside that window,
// stepping from T towards the interior.
long adjusted_zero_count(double T, std::span<const CriticalZero> zeros, double window_lo,
                         double window_hi, const ZetaConfig& zeta = {});

struct CountReport {
    bool pass = false;
    long found = 0;
    long expected = 0;
    double residual = 0.0;         // found - expected
    double smooth_residual = 0.0;  // found - (rvm(t_max) - rvm(t_min)), unadjusted
};

CountReport verify_count(std::span<const CriticalZero> zeros, double t_min, double t_max,
                         const ZetaConfig& zeta = {});

// Bisection of Z on a bracketing interval; returns the midpoint of the final bracket.
double refine_zero(double lo, double hi, const ZeroScanOptions& options = {});

// All zeros of Z in (t_min, t_max], 1 <= t_min <= t_max <= 5000. Halves the
// scan step on a failed count check, then throws ScanResolutionError.
std::vector<CriticalZero> find_critical_zeros(double t_min, double t_max,
                                              const ZeroScanOptions& options = {});

}  // namespace zetastrips
