// SPDX-License-Identifier: Apache-2.0
#include "qce/distributions.hpp"

#include <cmath>
#include <numbers>

#include "qce/analytics.hpp"
#include "qce/error.hpp"

namespace qce {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

void check_v_params(int m, const QuantLevels& l) {
    if (m < 2) throw Error(ErrorCode::invalid_argument, "PSK order must be at least 2");
    if (l.is_finite() && l.count < 1) {
        throw Error(ErrorCode::invalid_argument, "level count must be positive");
    }
    // For a single level with M > 2 the angle range exceeds pi/2 + pi/M and
    // the angle-to-gain map stops being monotone, so the arcsine closed forms
    // below no longer describe the law of v.
    if (l.is_finite() && l.count == 1 && m > 2) {
        throw Error(ErrorCode::invalid_argument,
                    "closed-form law of v unavailable for L = 1 with M > 2");
    }
}

} // namespace

double v_support_min(int m, std::int64_t l) {
    return std::sin(kPi / m - kPi / l) / std::sin(kPi / m);
}

double pdf_v(double x, int m, const QuantLevels& l) {
    check_v_params(m, l);
    if (l.infinite) {
        throw Error(ErrorCode::degenerate_distribution,
                    "v is a point mass at 1 in the unquantized limit");
    }
    if (x > 1.0 || x < v_support_min(m, l.count)) return 0.0;
    const double s = std::sin(kPi / m);
    const double rad = std::max(0.0, 1.0 - s * s * x * x);
    return static_cast<double>(l.count) * s / (kPi * std::sqrt(rad));
}

double cdf_v(double x, int m, const QuantLevels& l) {
    check_v_params(m, l);
    if (l.infinite) return x >= 1.0 ? 1.0 : 0.0;
    if (x >= 1.0) return 1.0;
    if (x <= v_support_min(m, l.count)) return 0.0;
    const double s = std::sin(kPi / m);
    const double ratio = static_cast<double>(l.count) / m;
    const double raw = 1.0 - ratio + l.count * std::asin(x * s) / kPi;
    return std::min(1.0, std::max(0.0, raw));
}

double pdf_alpha_i(double x, int m) {
    if (m < 2) throw Error(ErrorCode::invalid_argument, "PSK order must be at least 2");
    if (x < 0.0) return 0.0;
    const double s = std::sin(kPi / m);
    return 2.0 * m * s / kSqrtPi * std::exp(-s * s * x * x) *
           q_function(std::numbers::sqrt2 * std::cos(kPi / m) * x);
}

double pdf_alpha_bound(double /*x*/, int m, int n) {
    if (m < 2 || n < 1) throw Error(ErrorCode::invalid_argument, "need M >= 2 and N >= 1");
    return std::pow(static_cast<double>(m), n) * std::sin(kPi / m) / kSqrtPi;
}

double pdf_partial_sum_bound(double x, int m, int n_terms) {
    if (m < 2 || n_terms < 1) throw Error(ErrorCode::invalid_argument, "need M >= 2 and n >= 1");
    const double s = std::sin(kPi / m);
    return std::pow(static_cast<double>(m), n_terms) * s / std::sqrt(n_terms * kPi) *
           std::exp(-s * s * x * x / n_terms);
}

double sample_v(int m, const QuantLevels& l, RandomStream& stream) {
    if (l.infinite) return 1.0;
    const double theta = stream.next_uniform(-kPi / l.count, kPi / l.count);
    const double a = kPi / m;
    return std::cos(theta) - std::abs(std::sin(theta)) * std::cos(a) / std::sin(a);
}

double sample_alpha(const SystemConfig& config, RandomStream& stream) {
    double sum = 0.0;
    for (int i = 0; i < config.n_antennas; ++i) {
        const double mag = std::abs(stream.next_cn(1.0));
        sum += mag * sample_v(config.psk_order, config.quant_levels, stream);
    }
    return std::sqrt(config.total_power / config.n_antennas) * sum;
}

} // namespace qce
