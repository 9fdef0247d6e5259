// SPDX-License-Identifier: Apache-2.0
#ifndef QCE_REPORTING_HPP
#define QCE_REPORTING_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qce/diversity.hpp"
#include "qce/sim.hpp"
#include "qce/types.hpp"

namespace qce {

/// One experiment: a family of configs differing only in the number of
/// quantization levels, sharing the SNR grid for comparability.
struct ExperimentSpec {
    SystemConfig base;                 // quant_levels ignored; see `levels`
    std::vector<QuantLevels> levels{QuantLevels::ce_limit()};
    std::string out_dir = "qcesim_out";
    std::int64_t alpha_samples = 100000; // 0 disables bound columns
    std::optional<std::pair<double, double>> fit_window; // default: whole grid
    RunOptions run;

    void validate() const;
};

/// Key/value configuration. Accepted keys (same for config files and CLI
/// overrides): n, m, l, snr_db, trials, seed, min_errors, out, alpha_samples,
/// fit_window, workers, total_power.
/// snr_db takes a comma list ("0,5,10") or lo:step:hi ("0:5:40"); l takes a
/// comma list of integers or "inf"; fit_window takes lo:hi.
/// Throws Error(config_error) with key/line diagnostics.
void apply_config_entry(ExperimentSpec& spec, std::string_view key, std::string_view value);

/// Flat key = value file; '#' starts a comment. Entries apply in file order.
void load_config_file(ExperimentSpec& spec, const std::filesystem::path& path);

/// Exact CSV serialization of a curve. Header:
/// snr_db,trials,errors,ser,ci_half_width,bound_lower,bound_upper,bound_up1,bound_lb1,bound_floor
/// Absent bounds are empty fields; numbers use shortest round-trip decimals.
void emit_csv(const SerCurve& curve, const std::filesystem::path& path);

/// Inverse of emit_csv (points and bound columns; the config is not stored
/// in the file and is left default). Round-trips emit_csv output exactly.
SerCurve parse_csv(const std::filesystem::path& path);

struct VariantSummary {
    QuantLevels levels;
    DiversityOrder predicted;
    std::optional<DiversityEstimate> fit; // absent if too few usable points
    std::optional<FloorResult> floor;
    std::filesystem::path csv_path;

    std::string to_line() const;
};

struct ExperimentResult {
    std::vector<std::filesystem::path> files; // CSVs plus the summary
    std::vector<VariantSummary> summaries;
};

/// Runs every variant, writes one CSV per variant plus summary.csv into
/// spec.out_dir, and returns the written paths with the fitted slopes.
ExperimentResult run_experiment(const ExperimentSpec& spec);

} // namespace qce

#endif
