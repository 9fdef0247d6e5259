// SPDX-License-Identifier: Apache-2.0
#ifndef QCE_DIVERSITY_HPP
#define QCE_DIVERSITY_HPP

#include <utility>

#include "qce/sim.hpp"
#include "qce/types.hpp"

namespace qce {

/// Fitted high-SNR decay exponent of an SER curve: the negated least-squares
/// slope of log10(ser) against log10(rho), reported with the fit window so
/// the asymptotics can be judged.
struct DiversityEstimate {
    double slope = 0.0;
    std::pair<double, double> fit_window_db{0.0, 0.0};
    double residual_rms = 0.0;
    int points_used = 0;
    DiversityOrder predicted;
};

/// Log-log slope fit over grid points inside [window.first, window.second].
/// Points with zero errors are excluded; throws Error(insufficient_data)
/// with fewer than 3 usable points.
DiversityEstimate fit_diversity(const SerCurve& curve, std::pair<double, double> window_db);

struct FloorResult {
    bool detected = false;
    double floor_ser = 0.0;   // SER at the highest SNR point
    double decade_ratio = 0.0; // SER(top) / SER(10 dB below top)
};

/// Declares an SER floor when the curve is flat across the top decade:
/// SER(top) / SER(top - 10 dB) > 0.8 with both confidence intervals
/// excluding zero. Throws Error(insufficient_data) without two distinct
/// points in the top decade.
FloorResult floor_detect(const SerCurve& curve);

} // namespace qce

#endif
