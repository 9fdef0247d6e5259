// SPDX-License-Identifier: Apache-2.0
#include "qce/constellation.hpp"

#include <cmath>
#include <numbers>

#include "qce/error.hpp"

namespace qce {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeroMagnitude = 1e-300;

// Canonical phase of an integer grid angle k*pi/den in (-pi, pi], computed
// with the wrap done in integer arithmetic so that e.g. 7*pi/4 and -pi/4 are
// the same double.
double grid_phase(std::int64_t k, std::int64_t den) {
    if (k > den) k -= 2 * den;
    return static_cast<double>(k) * kPi / static_cast<double>(den);
}

} // namespace

PskConstellation PskConstellation::make(int m) {
    if (m < 2) throw Error(ErrorCode::config_error, "PSK order must be at least 2");
    PskConstellation c;
    c.order = m;
    c.points.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        c.points.push_back(std::polar(1.0, grid_phase(2 * static_cast<std::int64_t>(i), m)));
    }
    c.points[0] = Complex(1.0, 0.0);
    return c;
}

QceAlphabet QceAlphabet::make(std::int64_t levels, int n_antennas, double total_power) {
    if (levels < 1) throw Error(ErrorCode::config_error, "quantization level count must be positive");
    if (levels > (std::int64_t{1} << 24)) {
        throw Error(ErrorCode::config_error,
                    "quantization level count is too large to materialize; use inf");
    }
    if (n_antennas < 1) throw Error(ErrorCode::config_error, "antenna count must be positive");
    if (!(total_power > 0.0)) throw Error(ErrorCode::config_error, "total power must be positive");
    QceAlphabet a;
    a.levels = static_cast<int>(levels);
    a.amplitude = std::sqrt(total_power / static_cast<double>(n_antennas));
    a.points.reserve(static_cast<std::size_t>(levels));
    for (std::int64_t l = 1; l <= levels; ++l) {
        a.points.push_back(std::polar(a.amplitude, grid_phase(2 * l - 1, levels)));
    }
    return a;
}

int quantize_phase_index(double phi, int levels) {
    // Sector k covers phases [2k pi/L, 2(k+1) pi/L) and maps to the point at
    // (2k+1) pi/L; an exact boundary phase therefore rounds counterclockwise.
    auto k = static_cast<std::int64_t>(std::floor(phi * static_cast<double>(levels) / kTwoPi));
    k %= levels;
    if (k < 0) k += levels;
    return static_cast<int>(k);
}

double qce_grid_phase(int index, int levels) {
    return grid_phase(2 * static_cast<std::int64_t>(index) + 1, levels);
}

int quantize_qce_index(Complex z, const QceAlphabet& alphabet) {
    if (std::abs(z) < kZeroMagnitude) {
        throw Error(ErrorCode::zero_input, "cannot quantize a (near-)zero sample");
    }
    return quantize_phase_index(std::atan2(z.imag(), z.real()), alphabet.levels);
}

Complex quantize_qce(Complex z, const QceAlphabet& alphabet) {
    return alphabet.points[static_cast<std::size_t>(quantize_qce_index(z, alphabet))];
}

int nearest_psk_decode(Complex y, const PskConstellation& constellation,
                       std::uint64_t* degenerate_count) {
    if (std::abs(y) < kZeroMagnitude) {
        if (degenerate_count != nullptr) ++*degenerate_count;
        return 0;
    }
    // Sector of s_m covers [2 pi m/M - pi/M, 2 pi m/M + pi/M); exact boundary
    // phases round counterclockwise (toward the larger-phase sector).
    const int m = constellation.order;
    const double phi = std::atan2(y.imag(), y.real());
    auto idx = static_cast<std::int64_t>(std::floor(phi * static_cast<double>(m) / kTwoPi + 0.5));
    idx %= m;
    if (idx < 0) idx += m;
    return static_cast<int>(idx);
}

} // namespace qce
