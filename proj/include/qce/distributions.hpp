// SPDX-License-Identifier: Apache-2.0
#ifndef QCE_DISTRIBUTIONS_HPP
#define QCE_DISTRIBUTIONS_HPP

#include <cstdint>

#include "qce/rng.hpp"
#include "qce/types.hpp"

namespace qce {

// Closed-form laws of the per-antenna quantization gain
//   v = cos(theta) - |sin(theta)| cot(pi/M),  theta ~ U[-pi/L, pi/L]
// and of alpha_i = |h_i| v_i, for goodness-of-fit testing against sampled
// data. The support of v is [sin(pi/M - pi/L)/sin(pi/M), 1]; the lower end is
// 0 when L = M and negative when L < M.

/// Lower end of the support of v.
double v_support_min(int m, std::int64_t l);

/// Density of v: (L sin(pi/M)) / (pi sqrt(1 - sin^2(pi/M) x^2)) on the
/// support, 0 elsewhere. Throws Error(degenerate_distribution) in the
/// unquantized limit (v is then a point mass at 1) and
/// Error(invalid_argument) for L = 1 with M > 2, where the angle-to-gain map
/// is no longer monotone and this closed form does not apply.
double pdf_v(double x, int m, const QuantLevels& l);

/// CDF of v: clamp of 1 - L/M + L asin(x sin(pi/M)) / pi onto [0, 1].
/// In the unquantized limit this is the unit step at 1.
double cdf_v(double x, int m, const QuantLevels& l);

/// Density of alpha_i when L = M:
/// (2 M sin(pi/M)/sqrt(pi)) e^{-sin^2(pi/M) x^2} Q(sqrt(2) cos(pi/M) x) for
/// x >= 0, zero for x < 0.
double pdf_alpha_i(double x, int m);

/// Constant bound M^N sin(pi/M)/sqrt(pi) on the density of
/// alpha = (1/sqrt(N)) sum alpha_i when L = M, valid for all x >= 0.
double pdf_alpha_bound(double x, int m, int n);

/// Gaussian-envelope bound (M^n sin(pi/M)/sqrt(n pi)) e^{-sin^2(pi/M) x^2/n}
/// on the density of the partial sum S_n = alpha_1 + ... + alpha_n (L = M).
double pdf_partial_sum_bound(double x, int m, int n_terms);

/// Draws theta ~ U[-pi/L, pi/L] and returns cos(theta)-|sin(theta)|cot(pi/M).
/// The unquantized limit returns exactly 1.
double sample_v(int m, const QuantLevels& l, RandomStream& stream);

/// One draw of alpha = (1/sqrt(N)) sum |h_i| v_i with fresh fading and fresh
/// quantization angles.
double sample_alpha(const SystemConfig& config, RandomStream& stream);

} // namespace qce

#endif
