// SPDX-License-Identifier: Apache-2.0
#ifndef QCE_SIM_HPP
#define QCE_SIM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qce/types.hpp"

namespace qce {

/// One SNR point of a Monte Carlo sweep. ser = errors/trials and
/// ci_half_width is the 95% normal-approximation half width.
struct SerPoint {
    double snr_db = 0.0;
    std::int64_t trials = 0;
    std::int64_t errors = 0;
    double ser = 0.0;
    double ci_half_width = 0.0;
};

/// Analytic bound columns attached to one SNR point; absent values stay
/// unset (bounds that do not apply to the configured L/M regime).
struct BoundColumns {
    std::optional<double> lower;
    std::optional<double> upper;
    std::optional<double> up1;
    std::optional<double> lb1;
    std::optional<double> floor;
};

struct SerCurve {
    SystemConfig config;
    std::vector<SerPoint> points;
    std::vector<BoundColumns> bounds; // empty, or one entry per point
    std::uint64_t degenerate_decodes = 0;
};

/// Execution policy for run_ser. Results are independent of `workers`;
/// min_errors = 0 disables early stopping.
struct RunOptions {
    std::int64_t min_errors = 200;
    int workers = 0; // 0 = hardware concurrency
};

/// Trials are dispatched in fixed blocks of this size, one counter-based
/// substream per block, so reruns reproduce exactly under any parallel
/// layout. The value is part of the reproducibility contract.
constexpr std::int64_t kTrialBlockSize = 65536;

/// Earliest trial count at which early stopping may trigger.
constexpr std::int64_t kEarlyStopMinTrials = 10000;

/// End-to-end Monte Carlo SER sweep: per trial draw a fresh channel and a
/// uniform symbol, precode, form y = h^T x + n, decode, count errors.
/// Early stop (per SNR point, at block granularity) once at least min_errors
/// errors and kEarlyStopMinTrials trials have accumulated in block order.
/// Throws Error(config_error) on invalid configs or trials < 1000.
SerCurve run_ser(const SystemConfig& config, const RunOptions& options = {});

/// Returns the curve with per-point bound columns attached: the
/// fading-averaged sandwich (alpha_samples Monte Carlo draws per point) plus
/// whichever closed forms apply to the configured regime.
SerCurve attach_bounds(SerCurve curve, std::int64_t alpha_samples);

} // namespace qce

#endif
