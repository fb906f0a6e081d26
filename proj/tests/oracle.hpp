// oracle.hpp
//
// Reference values for the test suites, computed independently of the
// library: Euler-Maclaurin in 50-digit arithmetic with a generous truncation
// point and 40 Bernoulli corrections, complex Newton for zeros, and plain
// normal equations for straight-line fits.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using CReal = boost::multiprecision::cpp_complex_50;

inline CReal zeta_mp(const CReal& s) {
    const int p = 40;
    const double t = std::abs(static_cast<double>(s.imag()));
    const long n_cut = 40 + static_cast<long>(2.0 * t);
    const Real big_n = n_cut;
    CReal sum = 0;
    for (long n = 1; n < n_cut; ++n) sum += exp(-s * log(Real(n)));
    const CReal n_pow = exp(-s * log(big_n));  // N^-s
    sum += n_pow * big_n / (s - CReal(1)) + n_pow / Real(2);
    CReal rising = s;   // s (s+1) ... (s+2k-2)
    CReal power = n_pow / big_n;  // N^(-s-2k+1)
    Real fact = 2;      // (2k)!
    for (int k = 1; k <= p; ++k) {
        sum += boost::math::bernoulli_b2n<Real>(k) / fact * rising * power;
        rising *= (s + Real(2 * k - 1)) * (s + Real(2 * k));
        power /= big_n * big_n;
        fact *= Real(2 * k + 1) * Real(2 * k + 2);
    }
    return sum;
}

inline std::complex<double> zeta(double sigma, double t) {
    const CReal v = zeta_mp(CReal{Real(sigma), Real(t)});
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

inline std::complex<double> zeta_deriv(double sigma, double t) {
    const Real h("1e-18");
    const CReal s{Real(sigma), Real(t)};
    const CReal d = (zeta_mp(s + h) - zeta_mp(s - h)) / (Real(2) * h);
    return {static_cast<double>(d.real()), static_cast<double>(d.imag())};
}

// Newton on zeta from 1/2 + i t0; returns the height of the zero reached.
inline double critical_zero_near(double t0) {
    const Real h("1e-18");
    CReal s{Real("0.5"), Real(t0)};
    for (int i = 0; i < 30; ++i) {
        const CReal d = (zeta_mp(s + h) - zeta_mp(s - h)) / (Real(2) * h);
        const CReal step = zeta_mp(s) / d;
        s -= step;
        if (abs(step) < Real("1e-30")) break;
    }
    return static_cast<double>(s.imag());
}

// Stirling series after shifting the argument to |z| > 40.
inline CReal log_gamma_mp(CReal z) {
    CReal shift = 0;
    while (abs(z) < Real(40)) {
        shift += log(z);
        z += Real(1);
    }
    const Real half_log_2pi = log(Real(2) * boost::math::constants::pi<Real>()) / Real(2);
    CReal sum = (z - Real("0.5")) * log(z) - z + half_log_2pi;
    CReal zpow = z;
    const CReal z2 = z * z;
    for (int k = 1; k <= 20; ++k) {
        sum += boost::math::bernoulli_b2n<Real>(k) / (Real(2 * k) * Real(2 * k - 1) * zpow);
        zpow *= z2;
    }
    return sum - shift;
}

inline Real theta_mp(const Real& t) {
    const CReal z{Real("0.25"), t / Real(2)};
    return log_gamma_mp(z).imag() - t / Real(2) * log(boost::math::constants::pi<Real>());
}

// N(T) = theta(T)/pi + 1 + arg zeta(1/2 + iT)/pi, the argument followed
// continuously from sigma = 3 where Re zeta > 0.
inline long zero_count(double T) {
    const Real pi = boost::math::constants::pi<Real>();
    auto arg_at = [&](double sigma) {
        const CReal z = zeta_mp(CReal{Real(sigma), Real(T)});
        return atan2(z.imag(), z.real());
    };
    Real total = 0;
    Real prev = arg_at(3.0);
    total = prev;
    const int steps = 64;
    for (int i = 1; i <= steps; ++i) {
        const double sigma = 3.0 - 2.5 * i / steps;
        const Real cur = arg_at(sigma);
        Real d = cur - prev;
        if (d > pi) d -= 2 * pi;
        if (d < -pi) d += 2 * pi;
        if (abs(d) > Real(1)) throw std::runtime_error("oracle: argument step too coarse");
        total += d;
        prev = cur;
    }
    const Real n = theta_mp(Real(T)) / pi + Real(1) + total / pi;
    return static_cast<long>(round(n));
}

struct Line {
    double slope;
    double intercept;
    double slope_stderr;
    double intercept_stderr;
};

inline Line normal_equations(const std::vector<double>& xs, const std::vector<double>& ys) {
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    const Real n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += Real(xs[i]) * xs[i];
        sxy += Real(xs[i]) * ys[i];
    }
    const Real slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const Real intercept = (sy - slope * sx) / n;
    Real ssr = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Real r = Real(ys[i]) - intercept - slope * xs[i];
        ssr += r * r;
    }
    // (X^T X)^-1 scaled by the residual variance
    const Real s2 = ssr / (n - 2);
    const Real det = n * sxx - sx * sx;
    return {static_cast<double>(slope), static_cast<double>(intercept), static_cast<double>(sqrt(s2 * n / det)),
            static_cast<double>(sqrt(s2 * sxx / det))};
}

}  // namespace oracle
