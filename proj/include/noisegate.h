/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_H
#define NOISEGATE_H

/* C interface to the noisegate shared library. All objects are opaque
 * handles; functions return NOISEGATE_OK (0) on success and an error code
 * otherwise, with a thread-local message available from noisegate_last_error.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ng_channel ng_channel;
typedef struct ng_protocol ng_protocol;

typedef enum {
  NOISEGATE_OK = 0,
  NOISEGATE_ERR_INVALID_ARGUMENT = 1,
  NOISEGATE_ERR_PARSE = 2,
  NOISEGATE_ERR_INTERNAL = 3
} noisegate_status;

const char* noisegate_version(void);

/* Message for the most recent failure on this thread; empty string if none. */
const char* noisegate_last_error(void);

/* ---- channels ---------------------------------------------------------- */

noisegate_status noisegate_channel_depolarizing(int d, double eps,
                                                ng_channel** out);
noisegate_status noisegate_channel_pauli(const double alpha[4],
                                         ng_channel** out);
noisegate_status noisegate_channel_canonical(const double dvec[3],
                                             ng_channel** out);
noisegate_status noisegate_channel_amplitude_damping(double gamma,
                                                     ng_channel** out);
/* JSON schema: {"dim_in", "dim_out", "kraus": [[[re,im], ...], ...]} or a
 * noise spec {"family": ..., ...}. */
noisegate_status noisegate_channel_from_json(const char* json,
                                             ng_channel** out);
noisegate_status noisegate_channel_to_json(const ng_channel* channel,
                                           char** out_json);
void noisegate_channel_free(ng_channel* channel);

int noisegate_channel_dim(const ng_channel* channel);
noisegate_status noisegate_channel_is_unital(const ng_channel* channel,
                                             int* out);
noisegate_status noisegate_channel_hs_trace(const ng_channel* channel,
                                            double* out);
noisegate_status noisegate_channel_average_fidelity(const ng_channel* channel,
                                                    double* out);
noisegate_status noisegate_channel_average_fidelity_mc(
    const ng_channel* channel, long long n, unsigned long long seed,
    int threads, double* out_value, double* out_std_error);

/* status: 0 = entanglement breaking, 1 = not EB, 2 = undecided.
 * witness receives the minimum partial-transpose eigenvalue. */
noisegate_status noisegate_channel_qcq(const ng_channel* channel,
                                       int* out_status, double* out_witness);

/* Canonical coordinates of a unital qubit channel plus its region label
 * ("O", "T0".."T3", or "boundary(Tk,O)"). region_len >= 16 recommended. */
noisegate_status noisegate_channel_canonical_form(const ng_channel* channel,
                                                  double out_dvec[3],
                                                  char* out_region,
                                                  size_t region_len);

/* ---- protocols --------------------------------------------------------- */

noisegate_status noisegate_protocol_do_nothing(int d, ng_protocol** out);
noisegate_status noisegate_protocol_no_measurement(int mu, ng_protocol** out);
/* Discriminate-and-reprepare on the computational basis of C^d. */
noisegate_status noisegate_protocol_reprepare(int d, ng_protocol** out);
noisegate_status noisegate_protocol_from_json(const char* json,
                                              ng_protocol** out);
noisegate_status noisegate_protocol_to_json(const ng_protocol* protocol,
                                            char** out_json);
void noisegate_protocol_free(ng_protocol* protocol);

noisegate_status noisegate_protocol_fidelity(const ng_protocol* protocol,
                                             const ng_channel* noise,
                                             double* out);

/* Theoretical optimum for depolarizing or unital qubit noise. Either output
 * may be NULL when not wanted. */
noisegate_status noisegate_predict_optimum(const ng_channel* noise,
                                           ng_protocol** out_protocol,
                                           double* out_fbar);

/* ---- optimizer --------------------------------------------------------- */

typedef struct {
  int n_outcomes;
  int kraus_rank;
  int restarts;
  int max_iters;
  double step_init;
  double grad_tol;
  unsigned long long seed;
  int threads;
} noisegate_optimizer_config;

void noisegate_optimizer_config_default(noisegate_optimizer_config* cfg);

noisegate_status noisegate_optimize(const ng_channel* noise,
                                    const noisegate_optimizer_config* cfg,
                                    double* out_best_fbar,
                                    ng_protocol** out_best_protocol);

/* ---- experiments and verification -------------------------------------- */

/* Runs an experiment spec file and writes its output table.
 * out_override: replacement output path, or NULL.
 * has_seed/seed: optional optimizer seed override.
 * threads: worker threads, 0 = hardware default; the NOISEGATE_THREADS
 * environment variable overrides this value.
 * Returns the process exit code: 0 ok, 1 consistency failure, 2 bad config. */
int noisegate_run_experiment_file(const char* path, const char* out_override,
                                  int has_seed, unsigned long long seed,
                                  int threads);

/* Runs a verification suite ("theorem1", "theorem2", "appendix", "all"),
 * printing one pass/fail line per check to stdout. Returns 0, 1 on check
 * failure, or 2 for an unknown suite. */
int noisegate_verify_suite(const char* suite, unsigned long long seed,
                           int threads);

void noisegate_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* NOISEGATE_H */
