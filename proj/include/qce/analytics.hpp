// SPDX-License-Identifier: Apache-2.0
#ifndef QCE_ANALYTICS_HPP
#define QCE_ANALYTICS_HPP

#include <cstdint>

#include "qce/rng.hpp"
#include "qce/types.hpp"

namespace qce {

/// Distance from the noise-free received point beta*s to the nearest decision
/// boundary of an M-PSK sector, scaled by sin(pi/M): alpha = Re(beta) -
/// |Im(beta)| * cot(pi/M). Negative when the point already lies outside the
/// intended sector. Always alpha <= |beta|.
double safety_margin(Complex beta, int m);

/// Gaussian tail probability Q(x) = P(N(0,1) > x), via erfc.
double q_function(double x);

constexpr int kCraigDefaultPanels = 128;

/// Q(x) for x >= 0 by numerical quadrature of the finite-interval identity
/// (1/pi) * integral_0^{pi/2} exp(-x^2 / (2 sin^2 t)) dt.
/// Midpoint rule under the periodizing map t = (pi/2)(u - sin(2 pi u)/(2 pi)),
/// which crushes the small-x boundary layer at t = 0; at the default panel
/// count the result matches q_function to better than 1e-9 on [0, 8].
/// Throws Error(invalid_argument) for x < 0 or panels < 8.
double q_function_craig(double x, int panels = kCraigDefaultPanels);

/// Two-sided symbol-error-probability estimate for y = beta*s + n at fixed
/// beta. upper is clipped to 1; the unclipped value is 2 * lower.
struct SepBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// lower = Q(sqrt(2) sin(pi/M) alpha / sigma), upper = min(1, 2 * lower).
SepBounds sep_sandwich_fixed_beta(Complex beta, int m, double sigma2);

/// Fading-averaged sandwich, estimated by Monte Carlo over the safety margin
/// of the effective scalar gain (Rayleigh magnitudes, uniform quantization
/// angles; the margin is evaluated on the aggregated gain so the sandwich
/// brackets the true SEP for every N).
struct SemiAnalyticSep {
    SepBounds bounds;
    double estimate = 0.0;  // E[Q(...)], the unclipped lower bound
    double std_error = 0.0; // standard error of `estimate`
    std::int64_t samples = 0;
};

SemiAnalyticSep sep_bounds_semi_analytic(const SystemConfig& config, double snr_db,
                                         std::int64_t alpha_samples, RandomStream stream);

/// Closed-form SEP upper bound (1 + sin^2(pi/M) c0^2 rho / N)^{-N} with
/// c0 = cos(pi/L) - sin(pi/L) cot(pi/M); valid only for L > M (c0 > 0).
/// The unquantized limit uses c0 = 1. Throws Error(domain_error) otherwise.
double closed_form_upper_LgtM(const SystemConfig& config, double snr_db);

/// Closed-form SEP lower bound
/// (1 + sin^2(pi/M) rho)^{-N} / (2 sqrt(pi (N + 1/2))), valid for L > M.
double closed_form_lower_LgtM(const SystemConfig& config, double snr_db);

/// SNR-independent SEP floor 0.5 (1 - L/M)^N, valid for L < M.
double ser_floor_LltM(const SystemConfig& config);

/// Moment generating function of the squared channel norm: E[e^{t ||h||^2}]
/// = (1 - t)^{-n} for t < 1 (2||h||^2 is chi-square with 2n dof).
double mgf_chisq_norm(double t, int n);

/// Achievable diversity order of the quantized matched filter:
/// N for L > M (including the unquantized limit), N/2 for L = M, 0 for L < M.
DiversityOrder predicted_diversity(const SystemConfig& config);

/// c0 helper shared by the closed forms (1.0 in the unquantized limit).
double quantizer_margin_constant(const QuantLevels& levels, int m);

} // namespace qce

#endif
