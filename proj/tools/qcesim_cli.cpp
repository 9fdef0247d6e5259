// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end for the qcesim shared library. Parses flags, feeds
// them through the C API as config overrides, runs the experiment and prints
// the per-variant summary lines.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcesim.h"

namespace {

int exit_code_for(qce_status status) {
    if (status == QCE_OK) return 0;
    return status == QCE_ERROR_CONFIG ? 2 : 3;
}

struct ExperimentDeleter {
    void operator()(qce_experiment* exp) const { qce_experiment_destroy(exp); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Monte Carlo symbol-error-rate sweeps and analytic error bounds for "
        "quantized constant-envelope MISO transmission with M-PSK"};
    app.footer("Writes one CSV per quantization-level variant plus summary.csv "
               "into the output directory.");

    std::string config_path;
    app.add_option("--config", config_path, "key = value config file (flags override it)");

    // Flag values pass through to the library untouched so the config file
    // and the command line share one parser.
    const std::vector<std::pair<std::string, std::string>> passthrough = {
        {"--n", "antenna count N"},
        {"--m", "PSK order M"},
        {"--l", "quantization levels: comma list of integers or 'inf' (e.g. 3,4,5,inf)"},
        {"--snr-db", "SNR grid in dB: comma list or lo:step:hi"},
        {"--trials", "Monte Carlo trials per SNR point"},
        {"--seed", "master seed for the counter-based random streams"},
        {"--min-errors", "early-stop error target per point (0 disables early stop)"},
        {"--out", "output directory"},
        {"--alpha-samples", "margin samples per point for bound columns (0 disables bounds)"},
        {"--fit-window", "slope fit window lo:hi in dB (default: whole grid)"},
        {"--workers", "worker threads (0 = hardware concurrency)"},
        {"--total-power", "total transmit power P_T"},
    };
    std::vector<std::string> values(passthrough.size());
    std::vector<CLI::Option*> options(passthrough.size());
    for (std::size_t i = 0; i < passthrough.size(); ++i) {
        options[i] = app.add_option(passthrough[i].first, values[i], passthrough[i].second);
    }

    CLI11_PARSE(app, argc, argv);

    std::unique_ptr<qce_experiment, ExperimentDeleter> exp(qce_experiment_create());
    if (!exp) {
        std::fprintf(stderr, "error: out of memory\n");
        return 3;
    }

    if (!config_path.empty()) {
        const qce_status status = qce_experiment_load_config(exp.get(), config_path.c_str());
        if (status != QCE_OK) {
            std::fprintf(stderr, "error: %s\n", qce_experiment_error(exp.get()));
            return exit_code_for(status);
        }
    }
    for (std::size_t i = 0; i < passthrough.size(); ++i) {
        if (options[i]->count() == 0) continue;
        // --snr-db -> snr_db etc.
        std::string key = passthrough[i].first.substr(2);
        for (char& c : key) {
            if (c == '-') c = '_';
        }
        const qce_status status = qce_experiment_set(exp.get(), key.c_str(), values[i].c_str());
        if (status != QCE_OK) {
            std::fprintf(stderr, "error: %s\n", qce_experiment_error(exp.get()));
            return exit_code_for(status);
        }
    }

    const qce_status status = qce_experiment_run(exp.get());
    if (status != QCE_OK) {
        std::fprintf(stderr, "error: %s\n", qce_experiment_error(exp.get()));
        return exit_code_for(status);
    }

    char buf[512];
    const int variants = qce_experiment_variant_count(exp.get());
    for (int i = 0; i < variants; ++i) {
        if (qce_experiment_variant_summary(exp.get(), i, buf, sizeof buf) == QCE_OK) {
            std::printf("%s\n", buf);
        }
    }
    const int files = qce_experiment_file_count(exp.get());
    for (int i = 0; i < files; ++i) {
        if (qce_experiment_file_path(exp.get(), i, buf, sizeof buf) == QCE_OK) {
            std::printf("wrote %s\n", buf);
        }
    }
    return 0;
}
