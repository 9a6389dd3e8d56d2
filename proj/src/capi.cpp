#include "hokm/hokm.h"

#include <cstring>
#include <string>

#include "core/control.hpp"
#include "core/errors.hpp"
#include "core/experiments.hpp"
#include "core/hamiltonian.hpp"
#include "core/hypergraph.hpp"
#include "core/integrate.hpp"
#include "core/io.hpp"
#include "core/model.hpp"
#include "core/validate.hpp"

namespace {

thread_local std::string g_last_error;

hokm_status to_status(hokm::ErrorCode code) {
    using hokm::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_argument: return HOKM_ERR_INVALID_ARGUMENT;
        case ErrorCode::parse: return HOKM_ERR_PARSE;
        case ErrorCode::io: return HOKM_ERR_IO;
        case ErrorCode::resonance: return HOKM_ERR_RESONANCE;
        case ErrorCode::divergence: return HOKM_ERR_DIVERGENCE;
        case ErrorCode::numeric: return HOKM_ERR_NUMERIC;
    }
    return HOKM_ERR_UNKNOWN;
}

template <typename Fn>
hokm_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return HOKM_OK;
    } catch (const hokm::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HOKM_ERR_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown failure";
        return HOKM_ERR_UNKNOWN;
    }
}

hokm_status fail_arg(const char* msg) {
    g_last_error = msg;
    return HOKM_ERR_INVALID_ARGUMENT;
}

hokm::ControlMode to_mode(hokm_control_mode mode) {
    switch (mode) {
        case HOKM_CONTROL_PAIRWISE: return hokm::ControlMode::pairwise_only;
        case HOKM_CONTROL_FULL: return hokm::ControlMode::full;
        default: return hokm::ControlMode::none;
    }
}

hokm::ControlSpec make_spec(int n, hokm_control_mode mode, const int* pinned, int n_pinned) {
    hokm::ControlSpec spec;
    spec.mode = to_mode(mode);
    if (spec.mode == hokm::ControlMode::none) return spec;
    if (n_pinned < 0 || (n_pinned > 0 && pinned == nullptr)) {
        spec.pinned.resize(n);
        for (int i = 0; i < n; ++i) spec.pinned[i] = i;
    } else {
        spec.pinned.assign(pinned, pinned + n_pinned);
    }
    return spec;
}

hokm::SimPlan make_plan(const hokm_sim_plan* plan, const hokm_param_switch* switches,
                        int n_switches) {
    hokm::SimPlan out;
    if (plan) {
        out.t0 = plan->t0;
        out.t_end = plan->t_end;
        out.dt = plan->dt;
        out.sample_every = plan->sample_every;
    }
    for (int i = 0; i < n_switches; ++i)
        out.switches.push_back({switches[i].time, switches[i].k1, switches[i].k2});
    return out;
}

hokm::RunOptions make_options(const hokm_sim_plan* plan) {
    hokm::RunOptions opts;
    if (plan) {
        opts.rhat_t0 = plan->rhat_t0;
        opts.rhat_t1 = plan->rhat_t1;
    }
    return opts;
}

hokm::InitialConditions make_ic(const hokm_ic* ic) {
    hokm::InitialConditions out;
    if (ic) {
        out.theta_lo = ic->theta_lo;
        out.theta_hi = ic->theta_hi;
        out.omega_lo = ic->omega_lo;
        out.omega_hi = ic->omega_hi;
    }
    return out;
}

}  // namespace

struct hokm_hypergraph {
    hokm::Hypergraph g;
};
struct hokm_params {
    hokm::ModelParams p;
};
struct hokm_record {
    hokm::RunRecord r;
};
struct hokm_validate_report {
    std::vector<hokm::CheckResult> checks;
};

extern "C" {

const char* hokm_version(void) { return "1.0.0"; }

const char* hokm_last_error(void) { return g_last_error.c_str(); }

/* ---- hypergraph ---- */

hokm_status hokm_hypergraph_all_to_all(int n, hokm_hypergraph** out) {
    if (!out) return fail_arg("null output");
    return guarded([&] { *out = new hokm_hypergraph{hokm::Hypergraph::all_to_all(n)}; });
}

hokm_status hokm_hypergraph_random_sc(int n, double mean_degree, double mean_hyperdegree,
                                      uint64_t seed, hokm_hypergraph** out) {
    if (!out) return fail_arg("null output");
    return guarded([&] {
        *out = new hokm_hypergraph{
            hokm::Hypergraph::random_simplicial_complex(n, mean_degree, mean_hyperdegree, seed)};
    });
}

hokm_status hokm_hypergraph_create(int n, const int* edges, int n_edges, const int* triangles,
                                   int n_triangles, hokm_hypergraph** out) {
    if (!out) return fail_arg("null output");
    if ((n_edges > 0 && !edges) || (n_triangles > 0 && !triangles))
        return fail_arg("null simplex array");
    return guarded([&] {
        std::vector<hokm::Hypergraph::Edge> es(n_edges);
        for (int i = 0; i < n_edges; ++i) es[i] = {edges[2 * i], edges[2 * i + 1]};
        std::vector<hokm::Hypergraph::Triangle> ts(n_triangles);
        for (int i = 0; i < n_triangles; ++i)
            ts[i] = {triangles[3 * i], triangles[3 * i + 1], triangles[3 * i + 2]};
        *out = new hokm_hypergraph{hokm::Hypergraph(n, std::move(es), std::move(ts))};
    });
}

hokm_status hokm_hypergraph_load(const char* path, hokm_hypergraph** out) {
    if (!out || !path) return fail_arg("null argument");
    return guarded([&] { *out = new hokm_hypergraph{hokm::load_hypergraph(path)}; });
}

hokm_status hokm_hypergraph_save(const hokm_hypergraph* g, const char* path) {
    if (!g || !path) return fail_arg("null argument");
    return guarded([&] { hokm::save_hypergraph(g->g, path); });
}

void hokm_hypergraph_free(hokm_hypergraph* g) { delete g; }

int hokm_hypergraph_n(const hokm_hypergraph* g) { return g ? g->g.n() : -1; }
int hokm_hypergraph_edge_count(const hokm_hypergraph* g) {
    return g ? static_cast<int>(g->g.edges().size()) : -1;
}
int hokm_hypergraph_triangle_count(const hokm_hypergraph* g) {
    return g ? static_cast<int>(g->g.triangles().size()) : -1;
}
int hokm_hypergraph_isolated_count(const hokm_hypergraph* g) {
    return g ? g->g.isolated_count() : -1;
}

int hokm_hypergraph_degree(const hokm_hypergraph* g, int node) {
    if (!g) return -1;
    try {
        return g->g.degree(node);
    } catch (const hokm::Error& e) {
        g_last_error = e.what();
        return -1;
    }
}

int hokm_hypergraph_hyperdegree(const hokm_hypergraph* g, int node) {
    if (!g) return -1;
    try {
        return g->g.hyperdegree(node);
    } catch (const hokm::Error& e) {
        g_last_error = e.what();
        return -1;
    }
}

hokm_status hokm_hypergraph_edges(const hokm_hypergraph* g, int* out) {
    if (!g || !out) return fail_arg("null argument");
    int k = 0;
    for (const auto& e : g->g.edges()) {
        out[k++] = e[0];
        out[k++] = e[1];
    }
    return HOKM_OK;
}

hokm_status hokm_hypergraph_triangles(const hokm_hypergraph* g, int* out) {
    if (!g || !out) return fail_arg("null argument");
    int k = 0;
    for (const auto& t : g->g.triangles()) {
        out[k++] = t[0];
        out[k++] = t[1];
        out[k++] = t[2];
    }
    return HOKM_OK;
}

/* ---- params ---- */

hokm_status hokm_params_create(double k1, double k2, double k3, hokm_params** out) {
    if (!out) return fail_arg("null output");
    if (k1 < 0 || k2 < 0 || k3 < 0) return fail_arg("coupling strengths must be nonnegative");
    *out = new hokm_params;
    (*out)->p.k1 = k1;
    (*out)->p.k2 = k2;
    (*out)->p.k3 = k3;
    return HOKM_OK;
}

void hokm_params_free(hokm_params* p) { delete p; }

hokm_status hokm_params_set_omega(hokm_params* p, const double* omega, int n) {
    if (!p || (!omega && n > 0)) return fail_arg("null argument");
    if (n < 0) return fail_arg("negative length");
    p->p.omega.assign(omega, omega + n);
    return HOKM_OK;
}

hokm_status hokm_params_set_triadic_sign(hokm_params* p, double sign) {
    if (!p) return fail_arg("null argument");
    if (sign != 1.0 && sign != -1.0) return fail_arg("sign must be +1 or -1");
    p->p.triadic_sign = sign;
    return HOKM_OK;
}

hokm_status hokm_omega_file_load(const char* path, double* values, int capacity, int* count) {
    if (!path || !count) return fail_arg("null argument");
    return guarded([&] {
        const std::vector<double> omega = hokm::load_omega(path);
        *count = static_cast<int>(omega.size());
        if (values) {
            if (capacity < *count)
                throw hokm::Error(hokm::ErrorCode::invalid_argument, "buffer too small");
            std::memcpy(values, omega.data(), omega.size() * sizeof(double));
        }
    });
}

/* ---- model ---- */

hokm_status hokm_rhs(const hokm_hypergraph* g, const hokm_params* p, const double* theta, int n,
                     double* out) {
    if (!g || !p || !theta || !out) return fail_arg("null argument");
    return guarded([&] {
        const auto r = hokm::hokm_rhs(g->g, p->p, std::span<const double>(theta, n));
        std::memcpy(out, r.data(), r.size() * sizeof(double));
    });
}

hokm_status hokm_order_parameter(const double* theta, int n, double* out) {
    if (!theta || !out) return fail_arg("null argument");
    return guarded([&] { *out = hokm::order_parameter(std::span<const double>(theta, n)); });
}

hokm_status hokm_cluster_order_parameter(const double* theta, int n, int m, double* out) {
    if (!theta || !out) return fail_arg("null argument");
    return guarded(
        [&] { *out = hokm::cluster_order_parameter(std::span<const double>(theta, n), m); });
}

hokm_status hokm_multiorder_laplacian(const hokm_hypergraph* g, const hokm_params* p,
                                      double* out) {
    if (!g || !p || !out) return fail_arg("null argument");
    return guarded([&] {
        const auto L = hokm::multiorder_laplacian(g->g, p->p);
        std::memcpy(out, L.data(), L.size() * sizeof(double));
    });
}

hokm_status hokm_sync_jacobian_spectrum(const hokm_hypergraph* g, const hokm_params* p,
                                        double* out) {
    if (!g || !p || !out) return fail_arg("null argument");
    return guarded([&] {
        const auto s = hokm::sync_jacobian_spectrum(g->g, p->p);
        std::memcpy(out, s.data(), s.size() * sizeof(double));
    });
}

hokm_status hokm_d3_rhs(int n, const hokm_params* p, const double* theta, int variant,
                        double* out) {
    if (!p || !theta || !out) return fail_arg("null argument");
    if (variant != 1 && variant != 2) return fail_arg("variant must be 1 or 2");
    return guarded([&] {
        const auto r = hokm::d3_rhs(
            n, p->p, std::span<const double>(theta, n),
            variant == 1 ? hokm::QuarticVariant::type1 : hokm::QuarticVariant::type2);
        std::memcpy(out, r.data(), r.size() * sizeof(double));
    });
}

hokm_status hokm_classify(const double* theta, int n, double sync_threshold,
                          double cluster_threshold, hokm_state_class* state,
                          double* larger_fraction) {
    if (!theta || !state) return fail_arg("null argument");
    return guarded([&] {
        hokm::ClassifyThresholds thr;
        thr.sync_r = sync_threshold;
        thr.cluster_r2 = cluster_threshold;
        const auto c = hokm::classify_state(std::span<const double>(theta, n), thr);
        *state = static_cast<hokm_state_class>(static_cast<int>(c.state));
        if (larger_fraction) *larger_fraction = c.larger_fraction;
    });
}

/* ---- embedding flow ---- */

hokm_status hokm_hamiltonian_value(const hokm_hypergraph* g, const hokm_params* p,
                                   const double* actions, const double* angles, double* out) {
    if (!g || !p || !actions || !angles || !out) return fail_arg("null argument");
    return guarded([&] {
        hokm::ActionAngleState s;
        s.actions.assign(actions, actions + g->g.n());
        s.angles.assign(angles, angles + g->g.n());
        *out = hokm::hamiltonian_value(g->g, p->p, s);
    });
}

hokm_status hokm_hamiltonian_flow(const hokm_hypergraph* g, const hokm_params* p,
                                  const double* actions, const double* angles, double* dactions,
                                  double* dangles) {
    if (!g || !p || !actions || !angles || !dactions || !dangles)
        return fail_arg("null argument");
    return guarded([&] {
        hokm::ActionAngleState s;
        s.actions.assign(actions, actions + g->g.n());
        s.angles.assign(angles, angles + g->g.n());
        const auto [di, dth] = hokm::hamiltonian_flow_rhs(g->g, p->p, s);
        std::memcpy(dactions, di.data(), di.size() * sizeof(double));
        std::memcpy(dangles, dth.data(), dth.size() * sizeof(double));
    });
}

/* ---- control ---- */

hokm_status hokm_control_eval(const hokm_hypergraph* g, const hokm_params* p,
                              hokm_control_mode mode, const int* pinned, int n_pinned,
                              const double* theta, double* out) {
    if (!g || !p || !theta || !out) return fail_arg("null argument");
    if (mode == HOKM_CONTROL_NONE) return fail_arg("control evaluation with mode=none");
    return guarded([&] {
        const auto spec = make_spec(g->g.n(), mode, pinned, n_pinned);
        const std::span<const double> th(theta, g->g.n());
        const auto h = spec.mode == hokm::ControlMode::full
                           ? hokm::control_full(g->g, p->p, th, spec)
                           : hokm::control_pairwise(g->g, p->p, th, spec);
        std::memcpy(out, h.data(), h.size() * sizeof(double));
    });
}

hokm_status hokm_controlled_rhs(const hokm_hypergraph* g, const hokm_params* p,
                                hokm_control_mode mode, const int* pinned, int n_pinned,
                                const double* theta, double* out) {
    if (!g || !p || !theta || !out) return fail_arg("null argument");
    return guarded([&] {
        const auto spec = make_spec(g->g.n(), mode, pinned, n_pinned);
        const auto r =
            hokm::controlled_rhs(g->g, p->p, std::span<const double>(theta, g->g.n()), spec);
        std::memcpy(out, r.data(), r.size() * sizeof(double));
    });
}

hokm_status hokm_control_intensity(const double* control, int n, int pinned_count,
                                   int over_pinned, double* out) {
    if (!control || !out) return fail_arg("null argument");
    return guarded([&] {
        *out = hokm::control_intensity(
            std::span<const double>(control, n), pinned_count,
            over_pinned ? hokm::IntensityNorm::pinned : hokm::IntensityNorm::all_nodes);
    });
}

hokm_status hokm_bracket_functional(const hokm_hypergraph* g, const hokm_params* p,
                                    hokm_control_mode mode, const int* pinned, int n_pinned,
                                    const double* actions, const double* angles, double* out) {
    if (!g || !p || !actions || !angles || !out) return fail_arg("null argument");
    if (mode == HOKM_CONTROL_NONE) return fail_arg("bracket with mode=none");
    return guarded([&] {
        hokm::ActionAngleState s;
        s.actions.assign(actions, actions + g->g.n());
        s.angles.assign(angles, angles + g->g.n());
        *out = hokm::bracket_functional(g->g, p->p, s, make_spec(g->g.n(), mode, pinned, n_pinned));
    });
}

hokm_status hokm_control_oracle(const hokm_hypergraph* g, const hokm_params* p,
                                hokm_control_mode mode, const int* pinned, int n_pinned,
                                const double* theta, double* out) {
    if (!g || !p || !theta || !out) return fail_arg("null argument");
    if (mode == HOKM_CONTROL_NONE) return fail_arg("oracle with mode=none");
    return guarded([&] {
        const auto h = hokm::control_oracle_fd(g->g, p->p, std::span<const double>(theta, g->g.n()),
                                               make_spec(g->g.n(), mode, pinned, n_pinned));
        std::memcpy(out, h.data(), h.size() * sizeof(double));
    });
}

/* ---- integration ---- */

hokm_status hokm_integrate(hokm_field_fn field, void* user, const double* y0, int dim, double t0,
                           double t_end, double dt, int sample_every, hokm_observer_fn observer,
                           void* observer_user, double* y_final) {
    if (!field || !y0 || !y_final || dim < 1) return fail_arg("bad integration arguments");
    return guarded([&] {
        hokm::IntegrationPlan plan;
        plan.t0 = t0;
        plan.t_end = t_end;
        plan.dt = dt;
        plan.sample_every = sample_every;
        hokm::Field f = [&](double t, std::span<const double> y, std::span<double> dydt) {
            field(t, y.data(), dydt.data(), dim, user);
        };
        hokm::Observer obs;
        if (observer)
            obs = [&](double t, std::span<const double> y) {
                observer(t, y.data(), dim, observer_user);
            };
        auto res = hokm::integrate(f, std::vector<double>(y0, y0 + dim), plan, obs);
        std::memcpy(y_final, res.y.data(), res.y.size() * sizeof(double));
    });
}

/* ---- experiments ---- */

hokm_status hokm_run_once(const hokm_hypergraph* g, const hokm_params* p, hokm_control_mode mode,
                          const int* pinned, int n_pinned, const hokm_ic* ic,
                          const hokm_sim_plan* plan, const hokm_param_switch* switches,
                          int n_switches, uint64_t seed, int record_flags, hokm_record** out) {
    if (!g || !p || !plan || !out) return fail_arg("null argument");
    return guarded([&] {
        hokm::RunOptions opts = make_options(plan);
        opts.record_intensity = (record_flags & 1) != 0;
        opts.record_cost = (record_flags & 2) != 0;
        *out = new hokm_record{hokm::run_once(g->g, p->p, make_spec(g->g.n(), mode, pinned, n_pinned),
                                              make_ic(ic), make_plan(plan, switches, n_switches),
                                              seed, opts)};
    });
}

void hokm_record_free(hokm_record* r) { delete r; }

hokm_status hokm_record_rhat(const hokm_record* r, double* out) {
    if (!r || !out) return fail_arg("null argument");
    *out = r->r.r_hat;
    return HOKM_OK;
}

int hokm_record_n_samples(const hokm_record* r) {
    return r ? static_cast<int>(r->r.r_series.size()) : -1;
}

hokm_status hokm_record_r_series(const hokm_record* r, double* t, double* value) {
    if (!r || !t || !value) return fail_arg("null argument");
    for (std::size_t i = 0; i < r->r.r_series.size(); ++i) {
        t[i] = r->r.r_series[i].first;
        value[i] = r->r.r_series[i].second;
    }
    return HOKM_OK;
}

int hokm_record_n_intensity_samples(const hokm_record* r) {
    return r ? static_cast<int>(r->r.intensity_series.size()) : -1;
}

hokm_status hokm_record_intensity_series(const hokm_record* r, double* t, double* value) {
    if (!r || !t || !value) return fail_arg("null argument");
    for (std::size_t i = 0; i < r->r.intensity_series.size(); ++i) {
        t[i] = r->r.intensity_series[i].first;
        value[i] = r->r.intensity_series[i].second;
    }
    return HOKM_OK;
}

hokm_status hokm_record_final_theta(const hokm_record* r, double* out, int n) {
    if (!r || !out) return fail_arg("null argument");
    if (n != static_cast<int>(r->r.final_theta.size())) return fail_arg("length mismatch");
    std::memcpy(out, r->r.final_theta.data(), r->r.final_theta.size() * sizeof(double));
    return HOKM_OK;
}

hokm_status hokm_record_cost(const hokm_record* r, double* out) {
    if (!r || !out) return fail_arg("null argument");
    if (!r->r.cost) return fail_arg("run did not record a cost");
    *out = *r->r.cost;
    return HOKM_OK;
}

hokm_status hokm_sweep_rhat(const hokm_hypergraph* g, hokm_control_mode mode, const int* pinned,
                            int n_pinned, const double* k1_values, int n_k1,
                            const double* k2_values, int n_k2, int replicates, uint64_t base_seed,
                            const hokm_ic* ic, const hokm_sim_plan* plan, int workers,
                            double* mean, double* stddev, int* ok) {
    if (!g || !k1_values || !k2_values || !plan || !mean) return fail_arg("null argument");
    return guarded([&] {
        hokm::SweepGrid grid;
        grid.k1_values.assign(k1_values, k1_values + n_k1);
        grid.k2_values.assign(k2_values, k2_values + n_k2);
        grid.replicates = replicates;
        grid.base_seed = base_seed;
        const auto res =
            hokm::sweep_r_hat(g->g, grid, make_spec(g->g.n(), mode, pinned, n_pinned),
                              make_plan(plan, nullptr, 0), make_ic(ic), make_options(plan), workers);
        std::memcpy(mean, res.mean.data(), res.mean.size() * sizeof(double));
        if (stddev) std::memcpy(stddev, res.stddev.data(), res.stddev.size() * sizeof(double));
        if (ok) std::memcpy(ok, res.ok.data(), res.ok.size() * sizeof(int));
    });
}

hokm_status hokm_pinning_sweep(const hokm_hypergraph* g, const int* m_values, int n_m,
                               const double* couplings, int n_pairs, hokm_control_mode mode,
                               int replicates, uint64_t base_seed, const hokm_ic* ic,
                               const hokm_sim_plan* plan, int workers, double* rhat_mean) {
    if (!g || !m_values || !couplings || !plan || !rhat_mean) return fail_arg("null argument");
    return guarded([&] {
        std::vector<std::pair<double, double>> pairs(n_pairs);
        for (int i = 0; i < n_pairs; ++i) pairs[i] = {couplings[2 * i], couplings[2 * i + 1]};
        const auto rows = hokm::pinning_sweep(
            g->g, std::vector<int>(m_values, m_values + n_m), pairs, to_mode(mode), replicates,
            base_seed, make_plan(plan, nullptr, 0), make_ic(ic), make_options(plan), workers);
        for (std::size_t i = 0; i < rows.size(); ++i) rhat_mean[i] = rows[i].r_hat_mean;
    });
}

hokm_status hokm_switch_experiment(const hokm_hypergraph* g, const hokm_params* before,
                                   double k1_after, double k2_after, double t_switch,
                                   hokm_control_mode mode, const int* pinned, int n_pinned,
                                   uint64_t seed, const hokm_ic* ic, const hokm_sim_plan* plan,
                                   hokm_record** uncontrolled, hokm_record** controlled) {
    if (!g || !before || !plan || !uncontrolled || !controlled) return fail_arg("null argument");
    return guarded([&] {
        hokm::ModelParams after = before->p;
        after.k1 = k1_after;
        after.k2 = k2_after;
        auto [u, c] = hokm::switch_experiment(g->g, before->p, after, t_switch,
                                              make_plan(plan, nullptr, 0),
                                              make_spec(g->g.n(), mode, pinned, n_pinned), seed,
                                              make_ic(ic), make_options(plan));
        *uncontrolled = new hokm_record{std::move(u)};
        *controlled = new hokm_record{std::move(c)};
    });
}

hokm_status hokm_basin_analysis(const hokm_hypergraph* g, const hokm_params* p, int n_ic,
                                uint64_t seed, const hokm_sim_plan* plan, double sync_threshold,
                                double cluster_threshold, int workers, double fractions[3],
                                double* mean_larger_fraction) {
    if (!g || !p || !plan || !fractions) return fail_arg("null argument");
    return guarded([&] {
        hokm::RunOptions opts = make_options(plan);
        opts.thresholds.sync_r = sync_threshold;
        opts.thresholds.cluster_r2 = cluster_threshold;
        const auto res =
            hokm::basin_analysis(g->g, p->p, n_ic, seed, make_plan(plan, nullptr, 0), opts, workers);
        fractions[0] = res.fraction(hokm::StateClass::Sync);
        fractions[1] = res.fraction(hokm::StateClass::TwoCluster);
        fractions[2] = res.fraction(hokm::StateClass::Incoherent);
        if (mean_larger_fraction) *mean_larger_fraction = res.mean_larger_fraction;
    });
}

hokm_status hokm_cost_experiment(const hokm_hypergraph* g, const hokm_params* p, int n_seeds,
                                 uint64_t base_seed, const hokm_ic* ic, const hokm_sim_plan* plan,
                                 int workers, double full_summary[4], double pairwise_summary[4],
                                 double* full_costs, double* pairwise_costs) {
    if (!g || !p || !plan || !full_summary || !pairwise_summary) return fail_arg("null argument");
    return guarded([&] {
        const auto res = hokm::cost_experiment(g->g, p->p, n_seeds, base_seed,
                                               make_plan(plan, nullptr, 0), make_ic(ic),
                                               make_options(plan), workers);
        auto fill = [](const hokm::CostSummary& s, double out[4], double* costs) {
            out[0] = s.median;
            out[1] = s.q1;
            out[2] = s.q3;
            out[3] = static_cast<double>(s.outlier_seeds.size());
            if (costs) std::memcpy(costs, s.costs.data(), s.costs.size() * sizeof(double));
        };
        fill(res.full, full_summary, full_costs);
        fill(res.pairwise, pairwise_summary, pairwise_costs);
    });
}

/* ---- validation ---- */

hokm_status hokm_validate_run(int flip_triadic_sign, uint64_t seed, hokm_validate_report** out) {
    if (!out) return fail_arg("null output");
    return guarded([&] {
        hokm::ValidateOptions opts;
        opts.flip_triadic_sign = flip_triadic_sign != 0;
        if (seed != 0) opts.seed = seed;
        *out = new hokm_validate_report{hokm::run_validation(opts)};
    });
}

void hokm_validate_report_free(hokm_validate_report* r) { delete r; }

int hokm_validate_report_count(const hokm_validate_report* r) {
    return r ? static_cast<int>(r->checks.size()) : -1;
}

int hokm_validate_report_all_passed(const hokm_validate_report* r) {
    if (!r) return 0;
    for (const auto& c : r->checks)
        if (!c.pass) return 0;
    return 1;
}

hokm_status hokm_validate_report_get(const hokm_validate_report* r, int index, const char** name,
                                     double* residual, double* tolerance, int* pass) {
    if (!r || index < 0 || index >= static_cast<int>(r->checks.size()))
        return fail_arg("bad report index");
    const auto& c = r->checks[index];
    if (name) *name = c.name.c_str();
    if (residual) *residual = c.residual;
    if (tolerance) *tolerance = c.tolerance;
    if (pass) *pass = c.pass ? 1 : 0;
    return HOKM_OK;
}

}  // extern "C"
