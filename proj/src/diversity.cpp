// SPDX-License-Identifier: Apache-2.0
#include "qce/diversity.hpp"

#include <cmath>
#include <vector>

#include "qce/analytics.hpp"
#include "qce/error.hpp"

namespace qce {

DiversityEstimate fit_diversity(const SerCurve& curve, std::pair<double, double> window_db) {
    if (!(window_db.first <= window_db.second)) {
        throw Error(ErrorCode::invalid_argument, "fit window is empty");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (const SerPoint& p : curve.points) {
        if (p.snr_db < window_db.first - 1e-9 || p.snr_db > window_db.second + 1e-9) continue;
        if (p.errors <= 0 || !(p.ser > 0.0)) continue;
        xs.push_back(p.snr_db / 10.0); // log10(rho)
        ys.push_back(std::log10(p.ser));
    }
    if (xs.size() < 3) {
        throw Error(ErrorCode::insufficient_data,
                    "slope fit needs at least 3 in-window points with errors");
    }
    const auto n = static_cast<double>(xs.size());
    double x_mean = 0.0;
    double y_mean = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= n;
    y_mean /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    }
    if (!(sxx > 0.0)) {
        throw Error(ErrorCode::insufficient_data, "fit window has no SNR spread");
    }
    const double slope = sxy / sxx;
    const double intercept = y_mean - slope * x_mean;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        rss += r * r;
    }

    DiversityEstimate est;
    est.slope = -slope;
    est.fit_window_db = window_db;
    est.residual_rms = std::sqrt(rss / n);
    est.points_used = static_cast<int>(xs.size());
    est.predicted = predicted_diversity(curve.config);
    return est;
}

FloorResult floor_detect(const SerCurve& curve) {
    if (curve.points.size() < 2) {
        throw Error(ErrorCode::insufficient_data, "floor detection needs at least 2 points");
    }
    const SerPoint& top = curve.points.back();
    // Reference point: the deepest point within the top decade (at most 10 dB
    // below the highest SNR), excluding the top point itself.
    const SerPoint* ref = nullptr;
    for (const SerPoint& p : curve.points) {
        if (p.snr_db >= top.snr_db - 10.0 - 1e-9 && p.snr_db < top.snr_db - 1e-9) {
            ref = &p;
            break; // points are ordered; first hit is the deepest
        }
    }
    if (ref == nullptr) {
        throw Error(ErrorCode::insufficient_data, "no reference point within the top decade");
    }
    FloorResult out;
    out.floor_ser = top.ser;
    out.decade_ratio = ref->ser > 0.0 ? top.ser / ref->ser : 0.0;
    const bool top_positive = top.ser - top.ci_half_width > 0.0;
    const bool ref_positive = ref->ser - ref->ci_half_width > 0.0;
    out.detected = top_positive && ref_positive && out.decade_ratio > 0.8;
    return out;
}

} // namespace qce
