// SPDX-License-Identifier: Apache-2.0
#include "qce/types.hpp"

#include <cmath>

#include "qce/error.hpp"

namespace qce {

void SystemConfig::validate() const {
    if (n_antennas < 1) throw Error(ErrorCode::config_error, "n must be at least 1");
    if (psk_order < 2) throw Error(ErrorCode::config_error, "m must be at least 2");
    if (quant_levels.is_finite() && quant_levels.count < 1) {
        throw Error(ErrorCode::config_error, "l must be a positive integer or inf");
    }
    if (!(total_power > 0.0) || !std::isfinite(total_power)) {
        throw Error(ErrorCode::config_error, "total_power must be finite and positive");
    }
    if (snr_grid_db.empty()) throw Error(ErrorCode::config_error, "snr_db grid is empty");
    for (std::size_t i = 0; i < snr_grid_db.size(); ++i) {
        if (!std::isfinite(snr_grid_db[i])) {
            throw Error(ErrorCode::config_error, "snr_db grid has a non-finite entry");
        }
        if (i > 0 && !(snr_grid_db[i] > snr_grid_db[i - 1])) {
            throw Error(ErrorCode::config_error, "snr_db grid must be strictly increasing");
        }
    }
    if (trials < 1) throw Error(ErrorCode::config_error, "trials must be positive");
}

} // namespace qce
