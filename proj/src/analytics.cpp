// SPDX-License-Identifier: Apache-2.0
#include "qce/analytics.hpp"

#include <cmath>
#include <numbers>

#include "qce/error.hpp"

namespace qce {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

double safety_margin(Complex beta, int m) {
    if (m < 2) throw Error(ErrorCode::invalid_argument, "PSK order must be at least 2");
    const double a = kPi / m;
    const double cot = std::cos(a) / std::sin(a);
    return beta.real() - std::abs(beta.imag()) * cot;
}

double q_function(double x) {
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double q_function_craig(double x, int panels) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::invalid_argument, "Craig quadrature requires x >= 0");
    }
    if (panels < 8) {
        throw Error(ErrorCode::invalid_argument, "Craig quadrature requires at least 8 panels");
    }
    const double half_x2 = 0.5 * x * x;
    const double inv_n = 1.0 / panels;
    double total = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double u = (k + 0.5) * inv_n;
        const double theta = 0.5 * kPi * (u - std::sin(2.0 * kPi * u) / (2.0 * kPi));
        const double weight = 0.5 * kPi * (1.0 - std::cos(2.0 * kPi * u));
        const double s = std::sin(theta);
        total += std::exp(-half_x2 / (s * s)) * weight;
    }
    return total * inv_n / kPi;
}

SepBounds sep_sandwich_fixed_beta(Complex beta, int m, double sigma2) {
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw Error(ErrorCode::invalid_sigma, "noise variance must be finite and positive");
    }
    const double alpha = safety_margin(beta, m);
    const double lower =
        q_function(std::numbers::sqrt2 * std::sin(kPi / m) * alpha / std::sqrt(sigma2));
    return SepBounds{lower, std::min(1.0, 2.0 * lower)};
}

SemiAnalyticSep sep_bounds_semi_analytic(const SystemConfig& config, double snr_db,
                                         std::int64_t alpha_samples, RandomStream stream) {
    config.validate();
    if (alpha_samples < 10000) {
        throw Error(ErrorCode::invalid_argument,
                    "semi-analytic bound needs at least 10^4 margin samples");
    }
    const double scale = std::numbers::sqrt2 * std::sin(kPi / config.psk_order) *
                         std::sqrt(snr_db_to_rho(snr_db));
    const double a = kPi / config.psk_order;
    const double cot = std::cos(a) / std::sin(a);
    const bool finite_levels = config.quant_levels.is_finite();
    const double theta_max = finite_levels ? kPi / config.quant_levels.count : 0.0;
    const double amp = std::sqrt(config.total_power / config.n_antennas);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::int64_t i = 0; i < alpha_samples; ++i) {
        // Safety margin of the aggregated effective gain. The margin must be
        // computed from the summed gain (|imag| taken outside the sum); the
        // per-antenna decomposition exposed by the distributions module only
        // lower-bounds it for N >= 2 and would break the lower arm of the
        // sandwich.
        double gain_re = 0.0;
        double gain_im = 0.0;
        for (int ant = 0; ant < config.n_antennas; ++ant) {
            const double mag = std::abs(stream.next_cn(1.0));
            if (finite_levels) {
                const double theta = stream.next_uniform(-theta_max, theta_max);
                gain_re += mag * std::cos(theta);
                gain_im += mag * std::sin(theta);
            } else {
                gain_re += mag;
            }
        }
        const double alpha = amp * (gain_re - std::abs(gain_im) * cot);
        const double q = q_function(scale * alpha);
        sum += q;
        sum_sq += q * q;
    }
    const auto n = static_cast<double>(alpha_samples);
    const double mean = sum / n;
    const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    SemiAnalyticSep out;
    out.estimate = mean;
    out.std_error = std::sqrt(var / n);
    out.bounds = SepBounds{mean, std::min(1.0, 2.0 * mean)};
    out.samples = alpha_samples;
    return out;
}

double quantizer_margin_constant(const QuantLevels& levels, int m) {
    if (levels.infinite) return 1.0;
    const double a = kPi / m;
    return std::cos(kPi / levels.count) - std::sin(kPi / levels.count) * std::cos(a) / std::sin(a);
}

double closed_form_upper_LgtM(const SystemConfig& config, double snr_db) {
    config.validate();
    if (!config.quant_levels.exceeds(config.psk_order)) {
        throw Error(ErrorCode::domain_error, "upper bound requires L > M");
    }
    const double c0 = quantizer_margin_constant(config.quant_levels, config.psk_order);
    const double s = std::sin(kPi / config.psk_order);
    const double rho = snr_db_to_rho(snr_db);
    return std::pow(1.0 + s * s * c0 * c0 * rho / config.n_antennas, -config.n_antennas);
}

double closed_form_lower_LgtM(const SystemConfig& config, double snr_db) {
    config.validate();
    if (!config.quant_levels.exceeds(config.psk_order)) {
        throw Error(ErrorCode::domain_error, "lower bound requires L > M");
    }
    const double s = std::sin(kPi / config.psk_order);
    const double rho = snr_db_to_rho(snr_db);
    const double n = config.n_antennas;
    return std::pow(1.0 + s * s * rho, -n) / (2.0 * std::sqrt(kPi * (n + 0.5)));
}

double ser_floor_LltM(const SystemConfig& config) {
    config.validate();
    if (!config.quant_levels.below(config.psk_order)) {
        throw Error(ErrorCode::domain_error, "floor bound requires L < M");
    }
    const double deficit =
        1.0 - static_cast<double>(config.quant_levels.count) / config.psk_order;
    return 0.5 * std::pow(deficit, config.n_antennas);
}

double mgf_chisq_norm(double t, int n) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "dimension must be positive");
    if (!(t < 1.0)) throw Error(ErrorCode::domain_error, "MGF diverges for t >= 1");
    return std::pow(1.0 - t, -n);
}

DiversityOrder predicted_diversity(const SystemConfig& config) {
    config.validate();
    if (config.quant_levels.exceeds(config.psk_order)) return DiversityOrder{config.n_antennas, 1};
    if (config.quant_levels.equals(config.psk_order)) return DiversityOrder{config.n_antennas, 2};
    return DiversityOrder{0, 1};
}

} // namespace qce
