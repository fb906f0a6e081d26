// zeta.cpp

#include "zetastrips/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "zetastrips/errors.hpp"

namespace zetastrips {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLnPi = 1.14472988584940017414;
constexpr double kHalfLn2Pi = 0.91893853320467274178;

// B_{2k} for k = 1..13. The last entry only feeds the remainder bound.
constexpr std::array<double, kMaxBernoulliTerms + 1> kBernoulli = {
    1.0 / 6.0,           -1.0 / 30.0,     1.0 / 42.0,
    -1.0 / 30.0,         5.0 / 66.0,      -691.0 / 2730.0,
    7.0 / 6.0,           -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0,   854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0};

// B_{2k} / (2k)!
const std::array<double, kMaxBernoulliTerms + 1>& bernoulli_over_factorial() {
    static const auto table = [] {
        std::array<double, kMaxBernoulliTerms + 1> out{};
        double fact = 1.0;
        int n = 0;
        for (std::size_t k = 0; k < out.size(); ++k) {
            while (n < 2 * static_cast<int>(k + 1)) {
                ++n;
                fact *= n;
            }
            out[k] = kBernoulli[k] / fact;
        }
        return out;
    }();
    return table;
}

constexpr std::size_t kLogTableSize = 8192;

const std::vector<double>& log_table() {
    static const std::vector<double> table = [] {
        std::vector<double> out(kLogTableSize, 0.0);
        for (std::size_t n = 1; n < kLogTableSize; ++n) out[n] = std::log(static_cast<double>(n));
        return out;
    }();
    return table;
}

inline double log_n(std::size_t n, const std::vector<double>& table) {
    return n < table.size() ? table[n] : std::log(static_cast<double>(n));
}

// Neumaier compensated sum.
struct Accumulator {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    [[nodiscard]] double value() const { return sum + carry; }
};

// |s (s+1) ... (s+2p+1)| |B_{2p+2}| / ((2p+2)! (sigma+2p+1)) N^(-sigma-2p-1),
// optionally widened by `radius` in every |s+j| factor and shifted left in
// sigma by the same amount (Cauchy estimate for the derivative remainder).
double em_remainder_bound(ComplexPoint s, std::size_t n_trunc, int p, double radius) {
    const double sigma = s.sigma - radius;
    const double denom = sigma + 2.0 * p + 1.0;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    const double log_n_trunc = std::log(static_cast<double>(n_trunc));
    double log_bound = std::log(std::abs(bernoulli_over_factorial()[static_cast<std::size_t>(p)]));
    for (int j = 0; j <= 2 * p + 1; ++j) {
        const double mod = std::hypot(s.sigma + j, s.t) + radius;
        if (mod == 0.0) return 0.0;
        log_bound += std::log(mod);
    }
    log_bound += (-sigma - 2.0 * p - 1.0) * log_n_trunc;
    return std::exp(log_bound) / denom;
}

void check_pole(ComplexPoint s, const ZetaConfig& config) {
    if (std::hypot(s.sigma - 1.0, s.t) < config.pole_radius) {
        throw PoleError("s = " + std::to_string(s.sigma) + " + " + std::to_string(s.t) +
                        "i is within the pole radius of s = 1");
    }
    if (!std::isfinite(s.sigma) || !std::isfinite(s.t)) throw DomainError("non-finite argument");
}

ZetaWithDeriv euler_maclaurin(ComplexPoint sp, const ZetaConfig& config, bool want_deriv) {
    check_pole(sp, config);
    const int p = config.bernoulli_terms;
    if (p < 1 || p > kMaxBernoulliTerms) {
        throw DomainError("bernoulli_terms must be in [1, " + std::to_string(kMaxBernoulliTerms) + "]");
    }
    const Complex s = sp.to_complex();
    const std::size_t n_trunc = truncation_point(sp.t, config);
    const auto& logs = log_table();

    // Head: sum_{n < N} n^-s and -sum ln(n) n^-s.
    Accumulator re, im, dre, dim;
    double abs_sum = 0.0, sq_sum = 0.0, dsq_sum = 0.0;
    const double abs_t = std::abs(sp.t);
    for (std::size_t n = 1; n < n_trunc; ++n) {
        const double ln = log_n(n, logs);
        const double mag = std::exp(-sp.sigma * ln);
        const double arg = sp.t * ln;
        const double c = std::cos(arg);
        const double sn = std::sin(arg);
        re.add(mag * c);
        im.add(-mag * sn);
        const double w = mag * (1.0 + abs_t * ln);
        abs_sum += mag;
        sq_sum += w * w;
        if (want_deriv) {
            dre.add(-ln * mag * c);
            dim.add(ln * mag * sn);
            dsq_sum += (w * ln) * (w * ln);
        }
    }
    Complex zeta{re.value(), im.value()};
    Complex dzeta{dre.value(), dim.value()};

    const double ln_n = std::log(static_cast<double>(n_trunc));
    const Complex n_pow = std::exp(-s * ln_n);  // N^-s
    const Complex sm1 = s - 1.0;
    const Complex tail = static_cast<double>(n_trunc) * n_pow / sm1;
    zeta += tail + 0.5 * n_pow;
    if (want_deriv) dzeta += -ln_n * tail - tail / sm1 - 0.5 * ln_n * n_pow;

    // Bernoulli corrections B_{2k}/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1).
    const auto& coef = bernoulli_over_factorial();
    Complex poly = s;
    Complex dpoly = 1.0;
    Complex npow = n_pow / static_cast<double>(n_trunc);
    const double inv_n2 = 1.0 / (static_cast<double>(n_trunc) * static_cast<double>(n_trunc));
    for (int k = 1; k <= p; ++k) {
        const double ck = coef[static_cast<std::size_t>(k - 1)];
        zeta += ck * poly * npow;
        if (want_deriv) dzeta += ck * (dpoly - ln_n * poly) * npow;
        const Complex f1 = s + static_cast<double>(2 * k - 1);
        const Complex f2 = s + static_cast<double>(2 * k);
        if (want_deriv) dpoly = (dpoly * f1 + poly) * f2 + poly * f1;
        poly *= f1 * f2;
        npow *= inv_n2;
    }

    const double trunc = em_remainder_bound(sp, n_trunc, p, 0.0);
    if (!(trunc <= config.target_bound * std::max(1.0, std::abs(zeta)))) {
        throw PrecisionError("truncation bound " + std::to_string(trunc) + " at sigma = " +
                             std::to_string(sp.sigma) + ", t = " + std::to_string(sp.t));
    }
    const double rounding = kEps * (4.0 * std::sqrt(sq_sum) + abs_sum + std::abs(tail));

    ZetaWithDeriv out;
    out.value = {zeta, trunc + rounding};
    if (want_deriv) {
        const double dtrunc = em_remainder_bound(sp, n_trunc, p, 1.0);
        const double drounding = kEps * (4.0 * std::sqrt(dsq_sum) + abs_sum * ln_n + std::abs(tail) * ln_n);
        out.deriv = {dzeta, dtrunc + drounding};
    }
    return out;
}

}  // namespace

std::size_t truncation_point(double t, const ZetaConfig& config) {
    return static_cast<std::size_t>(std::ceil(config.beta * (std::abs(t) + 10.0)));
}

EvalResult eval_dirichlet(ComplexPoint s, std::size_t terms) {
    if (!(s.sigma > 1.0)) throw DomainError("Dirichlet series requires sigma > 1");
    if (terms < 1) throw DomainError("terms must be >= 1");
    const auto& logs = log_table();
    Accumulator re, im;
    double abs_sum = 0.0, sq_sum = 0.0;
    for (std::size_t n = 1; n <= terms; ++n) {
        const double ln = log_n(n, logs);
        const double mag = std::exp(-s.sigma * ln);
        re.add(mag * std::cos(s.t * ln));
        im.add(-mag * std::sin(s.t * ln));
        const double w = mag * (1.0 + std::abs(s.t) * ln);
        abs_sum += mag;
        sq_sum += w * w;
    }
    const double tail = std::pow(static_cast<double>(terms), 1.0 - s.sigma) / (s.sigma - 1.0);
    return {{re.value(), im.value()}, tail + kEps * (4.0 * std::sqrt(sq_sum) + abs_sum)};
}

EvalResult eval_zeta(ComplexPoint s, const ZetaConfig& config) {
    return euler_maclaurin(s, config, false).value;
}

EvalResult eval_zeta_deriv(ComplexPoint s, const ZetaConfig& config) {
    return euler_maclaurin(s, config, true).deriv;
}

ZetaWithDeriv eval_zeta_with_deriv(ComplexPoint s, const ZetaConfig& config) {
    return euler_maclaurin(s, config, true);
}

PhaseValue phase(ComplexPoint s, const ZetaConfig& config) {
    const Complex z = eval_zeta(s, config).value;
    if (std::abs(z) <= config.zero_floor) {
        throw NearZeroError("|zeta| below floor at sigma = " + std::to_string(s.sigma) +
                            ", t = " + std::to_string(s.t));
    }
    double theta = std::atan2(z.imag(), z.real());
    if (theta <= -kPi) theta = kPi;
    return {theta};
}

Complex log_gamma(Complex z) {
    if (z.real() < 0.5) {
        // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
        const Complex w = kPi * z;
        Complex log_sin;
        if (std::abs(w.imag()) < 20.0) {
            log_sin = std::log(std::sin(w));
        } else if (w.imag() > 0.0) {
            log_sin = -Complex(0.0, 1.0) * w + Complex(-kLn2, kPi / 2.0) +
                      std::log(1.0 - std::exp(Complex(0.0, 2.0) * w));
        } else {
            log_sin = Complex(0.0, 1.0) * w + Complex(-kLn2, -kPi / 2.0) +
                      std::log(1.0 - std::exp(Complex(0.0, -2.0) * w));
        }
        return kLnPi - log_sin - log_gamma(1.0 - z);
    }
    // Shift up until Stirling's series converges to double precision.
    Complex shift_log = 0.0;
    while (std::abs(z) < 15.0) {
        shift_log += std::log(z);
        z += 1.0;
    }
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv;
    for (int k = 1; k <= 10; ++k) {
        series += kBernoulli[static_cast<std::size_t>(k - 1)] / (2.0 * k * (2.0 * k - 1.0)) * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + kHalfLn2Pi + series - shift_log;
}

Complex log_chi(Complex s) {
    return (s - 0.5) * kLnPi + log_gamma((1.0 - s) / 2.0) - log_gamma(s / 2.0);
}

double rs_theta(double t) {
    if (!(t > 0.0)) throw DomainError("rs_theta requires t > 0");
    if (t < 10.0) {
        return log_gamma(Complex(0.25, t / 2.0)).imag() - t / 2.0 * kLnPi;
    }
    const double inv = 1.0 / t;
    const double inv2 = inv * inv;
    const double correction =
        inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0))));
    return t / 2.0 * std::log(t / (2.0 * kPi)) - t / 2.0 - kPi / 8.0 + correction;
}

double hardy_z(double t, const ZetaConfig& config) {
    if (!(t > 0.0)) throw DomainError("hardy_z requires t > 0");
    const Complex z = eval_zeta({0.5, t}, config).value;
    const double th = rs_theta(t);
    return std::cos(th) * z.real() - std::sin(th) * z.imag();
}

double functional_eq_residual(ComplexPoint s, const ZetaConfig& config) {
    if (s.sigma < -10.0 || s.sigma > 11.0 || std::abs(s.t) > 5000.0) {
        throw DomainError("s and 1 - s must both lie in the supported region");
    }
    if (std::abs(s.t) < 1e-8) {
        const double nearest = std::round(s.sigma);
        // Gamma(s/2) has poles at 0, -2, -4, ...; Gamma((1-s)/2) at 1, 3, 5, ...
        const bool even_nonpositive = nearest <= 0.0 && std::fmod(nearest, 2.0) == 0.0;
        const bool odd_positive = nearest >= 1.0 && std::fmod(nearest, 2.0) != 0.0;
        if (std::abs(s.sigma - nearest) < 1e-8 && (even_nonpositive || odd_positive)) {
            throw DomainError("gamma factor singular at s = " + std::to_string(nearest));
        }
    }
    const Complex lhs = eval_zeta(s, config).value;
    if (std::abs(lhs) <= config.zero_floor) throw NearZeroError("residual undefined at a zero");
    const Complex sc = s.to_complex();
    const Complex rhs = std::exp(log_chi(sc)) * eval_zeta(ComplexPoint::from(1.0 - sc), config).value;
    return std::abs(lhs - rhs) / std::abs(lhs);
}

double asymptotic_im(ComplexPoint s) {
    return std::exp(-s.sigma * kLn2) * -std::sin(s.t * kLn2);
}

double strip_asymptote(int m, AsymptoteKind kind) {
    if (m < 1) throw DomainError("strip number must be >= 1");
    const double k = kind == AsymptoteKind::Boundary ? 2.0 * m : 2.0 * m + 1.0;
    return k * kPi / kLn2;
}

}  // namespace zetastrips
