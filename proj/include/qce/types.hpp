// SPDX-License-Identifier: Apache-2.0
#ifndef QCE_TYPES_HPP
#define QCE_TYPES_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qce {

using Complex = std::complex<double>;
using ChannelVector = std::vector<Complex>;

/// Number of phase quantization levels; the continuous (unquantized) limit is
/// a distinct state rather than a large finite count.
struct QuantLevels {
    std::int64_t count = 0;
    bool infinite = false;

    static QuantLevels finite(std::int64_t l) { return QuantLevels{l, false}; }
    static QuantLevels ce_limit() { return QuantLevels{0, true}; }

    bool is_finite() const { return !infinite; }
    bool exceeds(std::int64_t m) const { return infinite || count > m; }
    bool equals(std::int64_t m) const { return !infinite && count == m; }
    bool below(std::int64_t m) const { return !infinite && count < m; }

    std::string label() const { return infinite ? "inf" : std::to_string(count); }

    friend bool operator==(const QuantLevels& a, const QuantLevels& b) {
        return a.infinite == b.infinite && (a.infinite || a.count == b.count);
    }
};

/// Full description of one simulated link: array size, constellation order,
/// quantizer resolution, transmit power, SNR sweep and trial budget.
struct SystemConfig {
    int n_antennas = 1;
    int psk_order = 4;
    QuantLevels quant_levels = QuantLevels::ce_limit();
    double total_power = 1.0;
    std::vector<double> snr_grid_db;
    std::int64_t trials = 1000000;
    std::uint64_t seed = 1;

    /// Throws Error(config_error) on any violated field constraint.
    void validate() const;
};

/// Exact diversity order as a small rational (full order N, half order N/2,
/// or zero).
struct DiversityOrder {
    int num = 0;
    int den = 1;

    double value() const { return static_cast<double>(num) / den; }

    friend bool operator==(const DiversityOrder& a, const DiversityOrder& b) {
        return static_cast<std::int64_t>(a.num) * b.den == static_cast<std::int64_t>(b.num) * a.den;
    }
};

inline double snr_db_to_rho(double snr_db) { return std::pow(10.0, snr_db / 10.0); }
inline double snr_db_to_sigma2(double snr_db) { return std::pow(10.0, -snr_db / 10.0); }

} // namespace qce

#endif
