// SPDX-License-Identifier: Apache-2.0
#include "qcesim.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "qce/analytics.hpp"
#include "qce/error.hpp"
#include "qce/reporting.hpp"

struct qce_experiment {
    qce::ExperimentSpec spec;
    std::string error;
    std::vector<std::string> summaries;
    std::vector<std::string> files;
    bool ran = false;
};

namespace {

qce_status status_from(qce::ErrorCode code) {
    using qce::ErrorCode;
    switch (code) {
        case ErrorCode::config_error:
            return QCE_ERROR_CONFIG;
        case ErrorCode::domain_error:
            return QCE_ERROR_DOMAIN;
        case ErrorCode::insufficient_data:
            return QCE_ERROR_DATA;
        case ErrorCode::io_error:
            return QCE_ERROR_IO;
        case ErrorCode::zero_input:
        case ErrorCode::zero_channel_entry:
        case ErrorCode::invalid_sigma:
        case ErrorCode::invalid_argument:
        case ErrorCode::degenerate_distribution:
            return QCE_ERROR_ARGUMENT;
    }
    return QCE_ERROR_RUNTIME;
}

template <typename Fn>
qce_status guarded(qce_experiment* exp, Fn&& fn) {
    if (exp == nullptr) return QCE_ERROR_ARGUMENT;
    exp->error.clear();
    try {
        fn();
        return QCE_OK;
    } catch (const qce::Error& e) {
        exp->error = e.what();
        return status_from(e.code());
    } catch (const std::exception& e) {
        exp->error = e.what();
        return QCE_ERROR_RUNTIME;
    }
}

qce_status copy_out(const std::string& s, char* buf, size_t buf_size) {
    if (buf == nullptr || buf_size == 0) return QCE_ERROR_ARGUMENT;
    const size_t n = s.size() < buf_size - 1 ? s.size() : buf_size - 1;
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
    return QCE_OK;
}

} // namespace

extern "C" {

const char* qce_version(void) { return "0.1.0"; }

qce_experiment* qce_experiment_create(void) { return new (std::nothrow) qce_experiment(); }

void qce_experiment_destroy(qce_experiment* exp) { delete exp; }

qce_status qce_experiment_set(qce_experiment* exp, const char* key, const char* value) {
    return guarded(exp, [&] {
        if (key == nullptr || value == nullptr) {
            throw qce::Error(qce::ErrorCode::invalid_argument, "null key or value");
        }
        qce::apply_config_entry(exp->spec, key, value);
    });
}

qce_status qce_experiment_load_config(qce_experiment* exp, const char* path) {
    return guarded(exp, [&] {
        if (path == nullptr) throw qce::Error(qce::ErrorCode::invalid_argument, "null path");
        qce::load_config_file(exp->spec, path);
    });
}

qce_status qce_experiment_run(qce_experiment* exp) {
    return guarded(exp, [&] {
        exp->ran = false;
        exp->summaries.clear();
        exp->files.clear();
        const qce::ExperimentResult result = qce::run_experiment(exp->spec);
        for (const auto& summary : result.summaries) {
            exp->summaries.push_back(summary.to_line());
        }
        for (const auto& file : result.files) exp->files.push_back(file.string());
        exp->ran = true;
    });
}

const char* qce_experiment_error(const qce_experiment* exp) {
    return exp == nullptr ? "null experiment handle" : exp->error.c_str();
}

int qce_experiment_variant_count(const qce_experiment* exp) {
    return (exp != nullptr && exp->ran) ? static_cast<int>(exp->summaries.size()) : 0;
}

qce_status qce_experiment_variant_summary(const qce_experiment* exp, int index, char* buf,
                                          size_t buf_size) {
    if (exp == nullptr || !exp->ran || index < 0 ||
        index >= static_cast<int>(exp->summaries.size())) {
        return QCE_ERROR_ARGUMENT;
    }
    return copy_out(exp->summaries[static_cast<size_t>(index)], buf, buf_size);
}

int qce_experiment_file_count(const qce_experiment* exp) {
    return (exp != nullptr && exp->ran) ? static_cast<int>(exp->files.size()) : 0;
}

qce_status qce_experiment_file_path(const qce_experiment* exp, int index, char* buf,
                                    size_t buf_size) {
    if (exp == nullptr || !exp->ran || index < 0 ||
        index >= static_cast<int>(exp->files.size())) {
        return QCE_ERROR_ARGUMENT;
    }
    return copy_out(exp->files[static_cast<size_t>(index)], buf, buf_size);
}

double qce_q_function(double x) { return qce::q_function(x); }

qce_status qce_predicted_diversity(int n_antennas, int psk_order, long long levels, double* out) {
    if (out == nullptr) return QCE_ERROR_ARGUMENT;
    try {
        qce::SystemConfig config;
        config.n_antennas = n_antennas;
        config.psk_order = psk_order;
        config.quant_levels =
            levels < 0 ? qce::QuantLevels::ce_limit() : qce::QuantLevels::finite(levels);
        config.snr_grid_db = {0.0};
        *out = qce::predicted_diversity(config).value();
        return QCE_OK;
    } catch (const qce::Error& e) {
        return status_from(e.code());
    } catch (...) {
        return QCE_ERROR_RUNTIME;
    }
}

qce_status qce_ser_floor(int n_antennas, int psk_order, long long levels, double* out) {
    if (out == nullptr) return QCE_ERROR_ARGUMENT;
    try {
        qce::SystemConfig config;
        config.n_antennas = n_antennas;
        config.psk_order = psk_order;
        config.quant_levels =
            levels < 0 ? qce::QuantLevels::ce_limit() : qce::QuantLevels::finite(levels);
        config.snr_grid_db = {0.0};
        *out = qce::ser_floor_LltM(config);
        return QCE_OK;
    } catch (const qce::Error& e) {
        return status_from(e.code());
    } catch (...) {
        return QCE_ERROR_RUNTIME;
    }
}

} // extern "C"
