// SPDX-License-Identifier: Apache-2.0
#include "qce/sim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

#include "qce/analytics.hpp"
#include "qce/constellation.hpp"
#include "qce/error.hpp"
#include "qce/precoding.hpp"
#include "qce/rng.hpp"

namespace qce {

namespace {

constexpr std::uint64_t kAlphaStreamDomain = std::uint64_t{1} << 63;

struct BlockResult {
    std::int64_t trials = 0;
    std::int64_t errors = 0;
    std::uint64_t degenerate = 0;
};

struct PointContext {
    const SystemConfig* config;
    const PskConstellation* constellation;
    const QceAlphabet* alphabet; // null in the unquantized limit
    double sigma2;
    std::uint64_t snr_index;
};

std::uint64_t block_stream_id(std::uint64_t snr_index, std::uint64_t block) {
    return (snr_index << 32) | block;
}

BlockResult run_block(const PointContext& ctx, std::uint64_t block, std::int64_t trials) {
    RandomStream stream(ctx.config->seed, block_stream_id(ctx.snr_index, block));
    const int n = ctx.config->n_antennas;
    const auto m = static_cast<std::uint32_t>(ctx.config->psk_order);
    ChannelVector h(static_cast<std::size_t>(n));
    PrecodeResult precode;
    BlockResult result;
    result.trials = trials;
    for (std::int64_t t = 0; t < trials; ++t) {
        draw_channel(stream, h);
        const auto symbol = static_cast<int>(stream.next_index(m));
        const Complex s = ctx.constellation->points[static_cast<std::size_t>(symbol)];
        if (ctx.alphabet != nullptr) {
            quantized_mf(h, s, *ctx.alphabet, precode);
        } else {
            ce_mf(h, s, ctx.config->total_power, precode);
        }
        Complex y{0.0, 0.0};
        for (std::size_t i = 0; i < h.size(); ++i) y += h[i] * precode.transmit[i];
        y += draw_noise(ctx.sigma2, stream);
        if (nearest_psk_decode(y, *ctx.constellation, &result.degenerate) != symbol) {
            ++result.errors;
        }
    }
    return result;
}

SerPoint finalize_point(double snr_db, std::int64_t trials, std::int64_t errors) {
    SerPoint p;
    p.snr_db = snr_db;
    p.trials = trials;
    p.errors = errors;
    p.ser = static_cast<double>(errors) / static_cast<double>(trials);
    p.ci_half_width = 1.96 * std::sqrt(p.ser * (1.0 - p.ser) / static_cast<double>(trials));
    return p;
}

} // namespace

SerCurve run_ser(const SystemConfig& config, const RunOptions& options) {
    config.validate();
    if (config.trials < 1000) {
        throw Error(ErrorCode::config_error, "trials must be at least 1000");
    }
    if (options.min_errors < 0) {
        throw Error(ErrorCode::config_error, "min_errors must be nonnegative");
    }
    const PskConstellation constellation = PskConstellation::make(config.psk_order);
    QceAlphabet alphabet;
    const bool finite_levels = config.quant_levels.is_finite();
    if (finite_levels) {
        alphabet = QceAlphabet::make(config.quant_levels.count, config.n_antennas,
                                     config.total_power);
    }
    int workers = options.workers;
    if (workers <= 0) {
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }

    SerCurve curve;
    curve.config = config;
    curve.points.reserve(config.snr_grid_db.size());

    for (std::size_t snr_index = 0; snr_index < config.snr_grid_db.size(); ++snr_index) {
        const double snr_db = config.snr_grid_db[snr_index];
        PointContext ctx{&config, &constellation, finite_levels ? &alphabet : nullptr,
                         snr_db_to_sigma2(snr_db), snr_index};

        const std::int64_t n_blocks = (config.trials + kTrialBlockSize - 1) / kTrialBlockSize;
        std::vector<BlockResult> blocks(static_cast<std::size_t>(n_blocks));

        // Blocks are dispatched in waves but the stopping block index is
        // decided on prefix sums in block order, so neither the worker count
        // nor scheduling order can change which blocks contribute.
        std::int64_t cum_trials = 0;
        std::int64_t cum_errors = 0;
        std::uint64_t cum_degenerate = 0;
        std::int64_t next_block = 0;
        bool stopped = false;
        while (next_block < n_blocks && !stopped) {
            const std::int64_t wave_end =
                std::min<std::int64_t>(n_blocks, next_block + workers);
            const auto trials_in = [&](std::int64_t b) {
                return std::min<std::int64_t>(kTrialBlockSize,
                                              config.trials - b * kTrialBlockSize);
            };
            if (workers == 1) {
                const std::int64_t b = next_block;
                blocks[static_cast<std::size_t>(b)] =
                    run_block(ctx, static_cast<std::uint64_t>(b), trials_in(b));
            } else {
                std::vector<std::future<BlockResult>> futures;
                futures.reserve(static_cast<std::size_t>(wave_end - next_block));
                for (std::int64_t b = next_block; b < wave_end; ++b) {
                    futures.push_back(std::async(std::launch::async, run_block, ctx,
                                                 static_cast<std::uint64_t>(b), trials_in(b)));
                }
                for (std::int64_t b = next_block; b < wave_end; ++b) {
                    blocks[static_cast<std::size_t>(b)] =
                        futures[static_cast<std::size_t>(b - next_block)].get();
                }
            }
            for (std::int64_t b = next_block; b < wave_end; ++b) {
                const BlockResult& block = blocks[static_cast<std::size_t>(b)];
                cum_trials += block.trials;
                cum_errors += block.errors;
                cum_degenerate += block.degenerate;
                if (options.min_errors > 0 && cum_errors >= options.min_errors &&
                    cum_trials >= kEarlyStopMinTrials) {
                    stopped = true;
                    break;
                }
            }
            next_block = wave_end;
        }

        curve.points.push_back(finalize_point(snr_db, cum_trials, cum_errors));
        curve.degenerate_decodes += cum_degenerate;
    }
    return curve;
}

SerCurve attach_bounds(SerCurve curve, std::int64_t alpha_samples) {
    if (curve.points.empty()) {
        throw Error(ErrorCode::invalid_argument, "cannot attach bounds to an empty curve");
    }
    const SystemConfig& config = curve.config;
    const bool above = config.quant_levels.exceeds(config.psk_order);
    const bool below = config.quant_levels.below(config.psk_order);
    curve.bounds.assign(curve.points.size(), BoundColumns{});
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const double snr_db = curve.points[i].snr_db;
        BoundColumns& cols = curve.bounds[i];
        RandomStream stream(config.seed,
                            kAlphaStreamDomain | (static_cast<std::uint64_t>(i) << 32));
        const SemiAnalyticSep semi =
            sep_bounds_semi_analytic(config, snr_db, alpha_samples, stream);
        cols.lower = semi.bounds.lower;
        cols.upper = semi.bounds.upper;
        if (above) {
            cols.up1 = closed_form_upper_LgtM(config, snr_db);
            cols.lb1 = closed_form_lower_LgtM(config, snr_db);
        } else if (below) {
            cols.floor = ser_floor_LltM(config);
        }
    }
    return curve;
}

} // namespace qce
