// SPDX-License-Identifier: Apache-2.0
#include "qce/precoding.hpp"

#include <cmath>
#include <numbers>

#include "qce/error.hpp"

namespace qce {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroMagnitude = 1e-300;

inline double wrap_angle(double a) {
    if (a > kPi) return a - 2.0 * kPi;
    if (a <= -kPi) return a + 2.0 * kPi;
    return a;
}

} // namespace

void quantized_mf(std::span<const Complex> h, Complex s, const QceAlphabet& alphabet,
                  PrecodeResult& out) {
    const std::size_t n = h.size();
    out.transmit.resize(n);
    out.theta.resize(n);
    const double arg_s = std::atan2(s.imag(), s.real());
    Complex gain_sum{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const double mag = std::abs(h[i]);
        if (mag < kZeroMagnitude) {
            throw Error(ErrorCode::zero_channel_entry, "channel entry is (near-)zero");
        }
        // Target phase of s * conj(h_i), then round onto the alphabet grid.
        const double target = wrap_angle(arg_s - std::atan2(h[i].imag(), h[i].real()));
        const int idx = quantize_phase_index(target, alphabet.levels);
        const Complex x = alphabet.points[static_cast<std::size_t>(idx)];
        const double theta = wrap_angle(qce_grid_phase(idx, alphabet.levels) - target);
        out.transmit[i] = x;
        out.theta[i] = theta;
        gain_sum += mag * std::polar(1.0, theta);
    }
    out.beta = alphabet.amplitude * gain_sum;
}

PrecodeResult quantized_mf(std::span<const Complex> h, Complex s, const QceAlphabet& alphabet) {
    PrecodeResult out;
    quantized_mf(h, s, alphabet, out);
    return out;
}

void ce_mf(std::span<const Complex> h, Complex s, double total_power, PrecodeResult& out) {
    const std::size_t n = h.size();
    out.transmit.resize(n);
    out.theta.resize(n);
    const double amplitude = std::sqrt(total_power / static_cast<double>(n));
    double mag_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double mag = std::abs(h[i]);
        if (mag < kZeroMagnitude) {
            throw Error(ErrorCode::zero_channel_entry, "channel entry is (near-)zero");
        }
        // x_i = amplitude * e^{-j arg(h_i)} * s, so h_i x_i = amplitude |h_i| s.
        out.transmit[i] = amplitude * (std::conj(h[i]) / mag) * s;
        out.theta[i] = 0.0;
        mag_sum += mag;
    }
    out.beta = Complex(amplitude * mag_sum, 0.0);
}

PrecodeResult ce_mf(std::span<const Complex> h, Complex s, double total_power) {
    PrecodeResult out;
    ce_mf(h, s, total_power, out);
    return out;
}

} // namespace qce
