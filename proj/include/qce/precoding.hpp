// SPDX-License-Identifier: Apache-2.0
#ifndef QCE_PRECODING_HPP
#define QCE_PRECODING_HPP

#include <span>
#include <vector>

#include "qce/constellation.hpp"
#include "qce/types.hpp"

namespace qce {

/// Output of the matched-filter precoder: the per-antenna transmit symbols,
/// the per-antenna phase rounding errors, and the effective scalar gain beta
/// with h^T x == beta * s.
struct PrecodeResult {
    std::vector<Complex> transmit;
    std::vector<double> theta;
    Complex beta{0.0, 0.0};
};

/// Quantized matched filter: each component of s * conj(h) is rounded to the
/// nearest alphabet point. theta[i] = arg(h_i x_i conj(s)) lies in
/// [-pi/L, pi/L]; beta = sqrt(P_T/N) * sum |h_i| e^{j theta_i}.
/// Throws Error(zero_channel_entry) if any |h_i| < 1e-300.
PrecodeResult quantized_mf(std::span<const Complex> h, Complex s, const QceAlphabet& alphabet);
void quantized_mf(std::span<const Complex> h, Complex s, const QceAlphabet& alphabet,
                  PrecodeResult& out);

/// Unquantized limit: x_i = sqrt(P_T/N) e^{-j arg(h_i)} s, theta identically
/// zero, beta = sqrt(P_T/N) * sum |h_i| (real, nonnegative).
PrecodeResult ce_mf(std::span<const Complex> h, Complex s, double total_power = 1.0);
void ce_mf(std::span<const Complex> h, Complex s, double total_power, PrecodeResult& out);

} // namespace qce

#endif
