/* SPDX-License-Identifier: Apache-2.0
 *
 * qcesim C API: link-level Monte Carlo simulation and closed-form error
 * analysis for quantized constant-envelope MISO transmission with M-PSK.
 *
 * The library is driven through an opaque experiment handle: create it, feed
 * it key/value settings (the same keys a config file uses), run it, then read
 * back per-variant summary lines. All functions returning qce_status report
 * failures through the status code; a human-readable message is kept on the
 * handle.
 */
#ifndef QCESIM_H
#define QCESIM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qce_status {
    QCE_OK = 0,
    QCE_ERROR_CONFIG = 1,   /* bad configuration key, value, or combination */
    QCE_ERROR_DOMAIN = 2,   /* quantity undefined for the requested regime */
    QCE_ERROR_ARGUMENT = 3, /* invalid argument (null handle, bad scalar) */
    QCE_ERROR_DATA = 4,     /* not enough data (e.g. slope fit) */
    QCE_ERROR_IO = 5,       /* filesystem failure */
    QCE_ERROR_RUNTIME = 6   /* any other failure */
} qce_status;

typedef struct qce_experiment qce_experiment;

const char* qce_version(void);

/* ---- experiment handle ------------------------------------------------- */

/* Returns NULL only on allocation failure. */
qce_experiment* qce_experiment_create(void);
void qce_experiment_destroy(qce_experiment* exp);

/* Applies one configuration entry. Keys: n, m, l, snr_db, trials, seed,
 * min_errors, out, alpha_samples, fit_window, workers, total_power. */
qce_status qce_experiment_set(qce_experiment* exp, const char* key, const char* value);

/* Loads a flat key = value config file; later qce_experiment_set calls
 * override its entries. */
qce_status qce_experiment_load_config(qce_experiment* exp, const char* path);

/* Runs every configured variant and writes one CSV per variant plus
 * summary.csv into the configured output directory. */
qce_status qce_experiment_run(qce_experiment* exp);

/* Message for the most recent failure on this handle ("" if none). The
 * pointer stays valid until the next call on the handle. */
const char* qce_experiment_error(const qce_experiment* exp);

/* After a successful run: number of variants, their summary lines, and the
 * paths written. Index-out-of-range yields QCE_ERROR_ARGUMENT. Strings are
 * copied into buf (always NUL-terminated; truncated if buf_size is small). */
int qce_experiment_variant_count(const qce_experiment* exp);
qce_status qce_experiment_variant_summary(const qce_experiment* exp, int index, char* buf,
                                          size_t buf_size);
int qce_experiment_file_count(const qce_experiment* exp);
qce_status qce_experiment_file_path(const qce_experiment* exp, int index, char* buf,
                                    size_t buf_size);

/* ---- scalar helpers ----------------------------------------------------- */

/* Gaussian tail probability Q(x). */
double qce_q_function(double x);

/* Achievable diversity order of the quantized matched filter for n antennas,
 * PSK order m and `levels` quantization levels (levels < 0 means the
 * unquantized limit). */
qce_status qce_predicted_diversity(int n_antennas, int psk_order, long long levels, double* out);

/* SNR-independent symbol-error floor 0.5 (1 - L/M)^N, defined for L < M. */
qce_status qce_ser_floor(int n_antennas, int psk_order, long long levels, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QCESIM_H */
