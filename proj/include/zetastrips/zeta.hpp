// zeta.hpp
//
// Evaluation of the Riemann zeta function and its companions on the region
// 0 <= |t| <= 5000, -10 <= sigma <= 40.
//
//   zeta(s)      Euler-Maclaurin summation, truncated at N = ceil(beta (|t| + 10))
//                with a fixed number of Bernoulli corrections. The remainder is
//                bounded by the first omitted correction term (Edwards):
//
//                  |R_p| <= |s (s+1) ... (s+2p+1) B_{2p+2}|
//                           / ((2p+2)! (sigma+2p+1)) * N^(-sigma-2p-1)
//
//   zeta'(s)     Same sum differentiated term by term. Its remainder comes from
//                a Cauchy estimate of R_p on the unit circle around s.
//
//   theta(s)     Principal argument of zeta(s), refused near zeros.
//
//   Z(t)         Hardy's function exp(i theta_RS(t)) zeta(1/2 + it), real valued.
//
// All functions are pure; the only shared state is an immutable table of
// logarithms built on first use.

#pragma once

#include <complex>
#include <cstddef>

namespace zetastrips {

using Complex = std::complex<double>;

struct ComplexPoint {
    double sigma = 0.0;
    double t = 0.0;

    [[nodiscard]] Complex to_complex() const { return {sigma, t}; }
    [[nodiscard]] static ComplexPoint from(Complex s) { return {s.real(), s.imag()}; }
    friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

struct EvalResult {
    Complex value;
    // Truncation bound plus a statistical estimate of accumulated rounding.
    double abs_error_bound = 0.0;
};

struct PhaseValue {
    double theta = 0.0;  // in (-pi, pi]
};

// zeta(s) and zeta'(s) from one pass over the summands.
struct ZetaWithDeriv {
    EvalResult value;
    EvalResult deriv;
};

struct ZetaConfig {
    double beta = 1.2;
    int bernoulli_terms = 12;       // at most kMaxBernoulliTerms
    double target_bound = 1e-10;    // relative to max(1, |zeta|)
    double pole_radius = 1e-8;
    double zero_floor = 1e-12;
};

inline constexpr int kMaxBernoulliTerms = 12;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;

// Partial Dirichlet sum of n^-s for n = 1..terms, with the integral tail bound.
// Requires sigma > 1.
EvalResult eval_dirichlet(ComplexPoint s, std::size_t terms);

EvalResult eval_zeta(ComplexPoint s, const ZetaConfig& config = {});
EvalResult eval_zeta_deriv(ComplexPoint s, const ZetaConfig& config = {});
ZetaWithDeriv eval_zeta_with_deriv(ComplexPoint s, const ZetaConfig& config = {});

// Euler-Maclaurin truncation point used for height t.
std::size_t truncation_point(double t, const ZetaConfig& config = {});

PhaseValue phase(ComplexPoint s, const ZetaConfig& config = {});

// Riemann-Siegel theta. For t >= 10 the asymptotic series with four
// correction terms is used; below that, the exact log-gamma form.
double rs_theta(double t);
double hardy_z(double t, const ZetaConfig& config = {});

// Principal-branch-continuous log Gamma for complex arguments.
Complex log_gamma(Complex z);

// log chi(s), where zeta(s) = chi(s) zeta(1 - s).
Complex log_chi(Complex s);

// |zeta(s) - chi(s) zeta(1 - s)| / |zeta(s)|, both sides from eval_zeta.
double functional_eq_residual(ComplexPoint s, const ZetaConfig& config = {});

// Im(2^-s) = -2^-sigma sin(t ln 2): the two-term large-sigma approximation
// of Im zeta(s).
double asymptotic_im(ComplexPoint s);

enum class AsymptoteKind { Boundary, Primary };

// Boundary: 2 m pi / ln 2. Primary: (2m + 1) pi / ln 2.
double strip_asymptote(int m, AsymptoteKind kind);

}  // namespace zetastrips
