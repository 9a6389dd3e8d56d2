/* Public C interface of the higher-order Kuramoto simulation library.
 *
 * All entry points return a hokm_status; on failure hokm_last_error() gives a
 * thread-local description of what went wrong. Objects are opaque handles
 * released with their matching _free function. Handles are not thread-safe;
 * distinct handles may be used from distinct threads freely (experiment
 * drivers parallelize internally via their `workers` argument).
 */
#ifndef HOKM_H
#define HOKM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hokm_status {
    HOKM_OK = 0,
    HOKM_ERR_INVALID_ARGUMENT = 1,
    HOKM_ERR_PARSE = 2,
    HOKM_ERR_IO = 3,
    HOKM_ERR_RESONANCE = 4,
    HOKM_ERR_DIVERGENCE = 5,
    HOKM_ERR_NUMERIC = 6,
    HOKM_ERR_UNKNOWN = 7
} hokm_status;

typedef enum hokm_control_mode {
    HOKM_CONTROL_NONE = 0,
    HOKM_CONTROL_PAIRWISE = 1,
    HOKM_CONTROL_FULL = 2
} hokm_control_mode;

typedef enum hokm_state_class {
    HOKM_STATE_SYNC = 0,
    HOKM_STATE_TWO_CLUSTER = 1,
    HOKM_STATE_INCOHERENT = 2
} hokm_state_class;

typedef struct hokm_hypergraph hokm_hypergraph;
typedef struct hokm_params hokm_params;
typedef struct hokm_record hokm_record;
typedef struct hokm_validate_report hokm_validate_report;

const char* hokm_version(void);
/* Message of the most recent failure on this thread ("" if none). */
const char* hokm_last_error(void);

/* ---- coupling structures ---------------------------------------------- */

hokm_status hokm_hypergraph_all_to_all(int n, hokm_hypergraph** out);
hokm_status hokm_hypergraph_random_sc(int n, double mean_degree, double mean_hyperdegree,
                                      uint64_t seed, hokm_hypergraph** out);
/* edges: 2*n_edges node indices, triangles: 3*n_triangles. */
hokm_status hokm_hypergraph_create(int n, const int* edges, int n_edges, const int* triangles,
                                   int n_triangles, hokm_hypergraph** out);
hokm_status hokm_hypergraph_load(const char* path, hokm_hypergraph** out);
hokm_status hokm_hypergraph_save(const hokm_hypergraph* g, const char* path);
void hokm_hypergraph_free(hokm_hypergraph* g);

int hokm_hypergraph_n(const hokm_hypergraph* g);
int hokm_hypergraph_edge_count(const hokm_hypergraph* g);
int hokm_hypergraph_triangle_count(const hokm_hypergraph* g);
int hokm_hypergraph_isolated_count(const hokm_hypergraph* g);
/* -1 on bad index */
int hokm_hypergraph_degree(const hokm_hypergraph* g, int node);
int hokm_hypergraph_hyperdegree(const hokm_hypergraph* g, int node);
/* out must hold 2*edge_count / 3*triangle_count ints */
hokm_status hokm_hypergraph_edges(const hokm_hypergraph* g, int* out);
hokm_status hokm_hypergraph_triangles(const hokm_hypergraph* g, int* out);

/* ---- model parameters -------------------------------------------------- */

hokm_status hokm_params_create(double k1, double k2, double k3, hokm_params** out);
void hokm_params_free(hokm_params* p);
hokm_status hokm_params_set_omega(hokm_params* p, const double* omega, int n);
/* +1 (default) or -1; flips the second triadic harmonic for sensitivity runs */
hokm_status hokm_params_set_triadic_sign(hokm_params* p, double sign);

/* Frequency file: one value per line. Call with values=NULL to query count. */
hokm_status hokm_omega_file_load(const char* path, double* values, int capacity, int* count);

/* ---- model operations --------------------------------------------------- */

hokm_status hokm_rhs(const hokm_hypergraph* g, const hokm_params* p, const double* theta, int n,
                     double* out);
hokm_status hokm_order_parameter(const double* theta, int n, double* out);
hokm_status hokm_cluster_order_parameter(const double* theta, int n, int m, double* out);
/* out: n*n row-major */
hokm_status hokm_multiorder_laplacian(const hokm_hypergraph* g, const hokm_params* p, double* out);
/* out: 2n eigenvalues, ascending */
hokm_status hokm_sync_jacobian_spectrum(const hokm_hypergraph* g, const hokm_params* p,
                                        double* out);
/* variant: 1 or 2; all-to-all 4-body term over n nodes */
hokm_status hokm_d3_rhs(int n, const hokm_params* p, const double* theta, int variant,
                        double* out);
hokm_status hokm_classify(const double* theta, int n, double sync_threshold,
                          double cluster_threshold, hokm_state_class* state,
                          double* larger_fraction);

/* ---- embedding flow ----------------------------------------------------- */

hokm_status hokm_hamiltonian_value(const hokm_hypergraph* g, const hokm_params* p,
                                   const double* actions, const double* angles, double* out);
hokm_status hokm_hamiltonian_flow(const hokm_hypergraph* g, const hokm_params* p,
                                  const double* actions, const double* angles, double* dactions,
                                  double* dangles);

/* ---- feedback control --------------------------------------------------- */

hokm_status hokm_control_eval(const hokm_hypergraph* g, const hokm_params* p,
                              hokm_control_mode mode, const int* pinned, int n_pinned,
                              const double* theta, double* out);
hokm_status hokm_controlled_rhs(const hokm_hypergraph* g, const hokm_params* p,
                                hokm_control_mode mode, const int* pinned, int n_pinned,
                                const double* theta, double* out);
/* over_pinned != 0 normalizes by pinned_count instead of the node count */
hokm_status hokm_control_intensity(const double* control, int n, int pinned_count, int over_pinned,
                                   double* out);
hokm_status hokm_bracket_functional(const hokm_hypergraph* g, const hokm_params* p,
                                    hokm_control_mode mode, const int* pinned, int n_pinned,
                                    const double* actions, const double* angles, double* out);
/* finite-difference reference for the control terms (slow) */
hokm_status hokm_control_oracle(const hokm_hypergraph* g, const hokm_params* p,
                                hokm_control_mode mode, const int* pinned, int n_pinned,
                                const double* theta, double* out);

/* ---- integration -------------------------------------------------------- */

typedef void (*hokm_field_fn)(double t, const double* y, double* dydt, int dim, void* user);
typedef void (*hokm_observer_fn)(double t, const double* y, int dim, void* user);

/* Classical fixed-step RK4; observer (may be NULL) fires at t0, every
 * sample_every steps and at the end. y_final may alias y0. */
hokm_status hokm_integrate(hokm_field_fn field, void* user, const double* y0, int dim, double t0,
                           double t_end, double dt, int sample_every, hokm_observer_fn observer,
                           void* observer_user, double* y_final);

/* ---- experiments -------------------------------------------------------- */

typedef struct hokm_sim_plan {
    double t0, t_end, dt;
    int sample_every;
    double rhat_t0, rhat_t1; /* averaging window (t0, t1] for R-hat */
} hokm_sim_plan;

typedef struct hokm_param_switch {
    double time, k1, k2;
} hokm_param_switch;

typedef struct hokm_ic {
    double theta_lo, theta_hi; /* initial phases ~ U[lo, hi) */
    double omega_lo, omega_hi; /* frequencies ~ U[lo, hi) when not set on params */
} hokm_ic;

/* n_pinned < 0 pins all nodes. record_flags: 1 = intensity series, 2 = cost. */
hokm_status hokm_run_once(const hokm_hypergraph* g, const hokm_params* p, hokm_control_mode mode,
                          const int* pinned, int n_pinned, const hokm_ic* ic,
                          const hokm_sim_plan* plan, const hokm_param_switch* switches,
                          int n_switches, uint64_t seed, int record_flags, hokm_record** out);
void hokm_record_free(hokm_record* r);
hokm_status hokm_record_rhat(const hokm_record* r, double* out);
int hokm_record_n_samples(const hokm_record* r);
hokm_status hokm_record_r_series(const hokm_record* r, double* t, double* value);
int hokm_record_n_intensity_samples(const hokm_record* r);
hokm_status hokm_record_intensity_series(const hokm_record* r, double* t, double* value);
hokm_status hokm_record_final_theta(const hokm_record* r, double* out, int n);
/* HOKM_ERR_INVALID_ARGUMENT when the run did not record a cost */
hokm_status hokm_record_cost(const hokm_record* r, double* out);

/* R-hat mean/std per cell, row-major [i_k1 * n_k2 + i_k2]; ok[i] counts the
 * replicates that completed (0 marks an absent cell, mean/std NaN). */
hokm_status hokm_sweep_rhat(const hokm_hypergraph* g, hokm_control_mode mode, const int* pinned,
                            int n_pinned, const double* k1_values, int n_k1,
                            const double* k2_values, int n_k2, int replicates, uint64_t base_seed,
                            const hokm_ic* ic, const hokm_sim_plan* plan, int workers,
                            double* mean, double* stddev, int* ok);

/* rhat_mean: [i_pair * n_m + i_m]; couplings: 2*n_pairs (k1,k2 interleaved) */
hokm_status hokm_pinning_sweep(const hokm_hypergraph* g, const int* m_values, int n_m,
                               const double* couplings, int n_pairs, hokm_control_mode mode,
                               int replicates, uint64_t base_seed, const hokm_ic* ic,
                               const hokm_sim_plan* plan, int workers, double* rhat_mean);

hokm_status hokm_switch_experiment(const hokm_hypergraph* g, const hokm_params* before,
                                   double k1_after, double k2_after, double t_switch,
                                   hokm_control_mode mode, const int* pinned, int n_pinned,
                                   uint64_t seed, const hokm_ic* ic, const hokm_sim_plan* plan,
                                   hokm_record** uncontrolled, hokm_record** controlled);

/* fractions: [sync, two_cluster, incoherent] */
hokm_status hokm_basin_analysis(const hokm_hypergraph* g, const hokm_params* p, int n_ic,
                                uint64_t seed, const hokm_sim_plan* plan, double sync_threshold,
                                double cluster_threshold, int workers, double fractions[3],
                                double* mean_larger_fraction);

/* summary[4] = median, q1, q3, outlier count (cost > 100x median); costs[..]
 * optional per-seed values (pass NULL to skip). */
hokm_status hokm_cost_experiment(const hokm_hypergraph* g, const hokm_params* p, int n_seeds,
                                 uint64_t base_seed, const hokm_ic* ic, const hokm_sim_plan* plan,
                                 int workers, double full_summary[4], double pairwise_summary[4],
                                 double* full_costs, double* pairwise_costs);

/* ---- self validation ----------------------------------------------------- */

hokm_status hokm_validate_run(int flip_triadic_sign, uint64_t seed, hokm_validate_report** out);
void hokm_validate_report_free(hokm_validate_report* r);
int hokm_validate_report_count(const hokm_validate_report* r);
int hokm_validate_report_all_passed(const hokm_validate_report* r);
hokm_status hokm_validate_report_get(const hokm_validate_report* r, int index, const char** name,
                                     double* residual, double* tolerance, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* HOKM_H */
