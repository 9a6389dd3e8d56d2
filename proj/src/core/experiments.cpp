#include "core/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "core/errors.hpp"
#include "core/integrate.hpp"
#include "core/rng.hpp"

namespace hokm {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Classification classify_state(std::span<const double> theta, const ClassifyThresholds& thr) {
    const double r = order_parameter(theta);
    if (r >= thr.sync_r) return {StateClass::Sync, 1.0};
    if (cluster_order_parameter(theta, 2) >= thr.cluster_r2)
        return {StateClass::TwoCluster, (1.0 + r) / 2.0};
    return {StateClass::Incoherent, 0.0};
}

const char* to_string(StateClass s) {
    switch (s) {
        case StateClass::Sync: return "sync";
        case StateClass::TwoCluster: return "two_cluster";
        default: return "incoherent";
    }
}

void parallel_for(int n, int workers, const std::function<void(int)>& f) {
    if (n <= 0) return;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

std::vector<double> draw_omega(const Hypergraph& g, const InitialConditions& ic,
                               rng::SplitMix64& gen, int retries, double eps) {
    for (int attempt = 0; attempt <= retries; ++attempt) {
        std::vector<double> omega(g.n());
        for (double& w : omega) w = gen.uniform(ic.omega_lo, ic.omega_hi);
        if (!resonance_violation(g, omega, eps)) return omega;
    }
    throw Error(ErrorCode::resonance,
                "resonance guard failed after " + std::to_string(retries) + " resamples");
}

}  // namespace

RunRecord run_once(const Hypergraph& g, const ModelParams& p, const ControlSpec& spec,
                   const InitialConditions& ic, const SimPlan& plan, std::uint64_t seed,
                   const RunOptions& opts) {
    const int n = g.n();
    rng::SplitMix64 gen(seed);
    std::vector<double> theta0(n);
    for (double& th : theta0) th = gen.uniform(ic.theta_lo, ic.theta_hi);

    ModelParams params = p;
    if (params.omega.empty()) {
        params.omega = draw_omega(g, ic, gen, opts.resonance_retries, opts.eps_res);
    } else if (spec.mode != ControlMode::none) {
        // Explicit frequencies fail fast; only the control divides by
        // frequency combinations, so uncontrolled runs accept any omega.
        if (auto bad = resonance_violation(g, params.omega, opts.eps_res, &spec.pinned))
            throw Error(ErrorCode::resonance, *bad);
    }

    std::optional<ControlWorkspace> ws;
    if (spec.mode != ControlMode::none) ws.emplace(g, params.omega, spec, opts.eps_res);
    const int m = ws ? ws->pinned_count() : 0;

    struct Couplings {
        double k1, k2;
    } cur{params.k1, params.k2};

    IntegrationPlan iplan;
    iplan.t0 = plan.t0;
    iplan.t_end = plan.t_end;
    iplan.dt = plan.dt;
    iplan.sample_every = plan.sample_every;
    for (const auto& sw : plan.switches)
        iplan.switches.push_back({sw.time, [&cur, sw] { cur = {sw.k1, sw.k2}; }});

    std::vector<double> h_buf(n, 0.0);
    Field field = [&](double, std::span<const double> y, std::span<double> dydt) {
        ModelParams pp = params;
        pp.k1 = cur.k1;
        pp.k2 = cur.k2;
        std::vector<double> rhs = hokm_rhs(g, pp, y);
        if (ws) {
            ws->eval(y, cur.k1, cur.k2, h_buf);
            for (int i = 0; i < n; ++i) rhs[i] += h_buf[i];
        }
        std::copy(rhs.begin(), rhs.end(), dydt.begin());
    };

    RunRecord rec;
    rec.seed = seed;
    std::vector<double> times;
    std::vector<std::vector<double>> abs_h;
    if (opts.record_cost && ws) abs_h.assign(m, {});

    Observer observer = [&](double t, std::span<const double> y) {
        rec.r_series.emplace_back(t, order_parameter(y));
        if (ws && (opts.record_intensity || opts.record_cost)) {
            ws->eval(y, cur.k1, cur.k2, h_buf);
            if (opts.record_intensity)
                rec.intensity_series.emplace_back(
                    t, control_intensity(h_buf, m, opts.intensity_norm));
            if (opts.record_cost) {
                times.push_back(t);
                const auto& pins = ws->pinned();
                for (int i = 0; i < m; ++i) abs_h[i].push_back(std::abs(h_buf[pins[i]]));
            }
        }
    };

    IntegrationResult res = integrate(field, theta0, iplan, observer);
    rec.warnings = std::move(res.warnings);
    rec.r_hat = averaged_order_parameter(rec.r_series, opts.rhat_t0, opts.rhat_t1);
    rec.final_theta.resize(n);
    for (int i = 0; i < n; ++i) {
        double th = std::fmod(res.y[i], kTwoPi);
        if (th < 0.0) th += kTwoPi;
        rec.final_theta[i] = th;
    }
    if (opts.record_cost && ws)
        rec.cost = control_cost(abs_h, times, m, plan.t_end - plan.t0);
    if (opts.classify) rec.classification = classify_state(rec.final_theta, opts.thresholds);
    return rec;
}

SweepResult sweep_r_hat(const Hypergraph& g, const SweepGrid& grid, const ControlSpec& spec,
                        const SimPlan& plan, const InitialConditions& ic, const RunOptions& opts,
                        int workers) {
    if (grid.k1_values.empty() || grid.k2_values.empty())
        throw Error(ErrorCode::invalid_argument, "empty sweep axis");
    if (grid.replicates < 1) throw Error(ErrorCode::invalid_argument, "replicates must be >= 1");
    SweepResult out;
    out.k1_values = grid.k1_values;
    out.k2_values = grid.k2_values;
    out.replicates = grid.replicates;
    const std::size_t n1 = grid.k1_values.size(), n2 = grid.k2_values.size();
    out.mean.assign(n1 * n2, std::numeric_limits<double>::quiet_NaN());
    out.stddev.assign(n1 * n2, 0.0);
    out.ok.assign(n1 * n2, 0);
    out.cell_error.assign(n1 * n2, "");

    parallel_for(static_cast<int>(n1 * n2), workers, [&](int cell) {
        const std::size_t i1 = static_cast<std::size_t>(cell) / n2;
        const std::size_t i2 = static_cast<std::size_t>(cell) % n2;
        ModelParams p;
        p.k1 = grid.k1_values[i1];
        p.k2 = grid.k2_values[i2];
        double sum = 0.0, sum2 = 0.0;
        int okc = 0;
        std::string err;
        for (int rep = 0; rep < grid.replicates; ++rep) {
            const std::uint64_t seed = rng::derive_seed(grid.base_seed, i1, i2, rep);
            try {
                RunRecord rec = run_once(g, p, spec, ic, plan, seed, opts);
                sum += rec.r_hat;
                sum2 += rec.r_hat * rec.r_hat;
                ++okc;
            } catch (const Error& e) {
                err = e.what();
            }
        }
        out.ok[cell] = okc;
        out.cell_error[cell] = err;
        if (okc > 0) {
            const double mean = sum / okc;
            out.mean[cell] = mean;
            out.stddev[cell] = okc > 1 ? std::sqrt(std::max(0.0, (sum2 - okc * mean * mean) /
                                                                     (okc - 1)))
                                       : 0.0;
        }
    });
    return out;
}

std::vector<PinSweepRow> pinning_sweep(const Hypergraph& g, const std::vector<int>& m_values,
                                       const std::vector<std::pair<double, double>>& couplings,
                                       ControlMode mode, int replicates, std::uint64_t base_seed,
                                       const SimPlan& plan, const InitialConditions& ic,
                                       const RunOptions& opts, int workers) {
    if (mode == ControlMode::none)
        throw Error(ErrorCode::invalid_argument, "pinning_sweep requires a control mode");
    for (int m : m_values)
        if (m < 0 || m > g.n())
            throw Error(ErrorCode::invalid_argument, "pinned count out of [0, n]");
    if (replicates < 1) throw Error(ErrorCode::invalid_argument, "replicates must be >= 1");

    const int nc = static_cast<int>(couplings.size());
    const int nm = static_cast<int>(m_values.size());
    // r_hat per (coupling, replicate, m)
    std::vector<double> cell(static_cast<std::size_t>(nc) * replicates * nm, 0.0);

    parallel_for(nc * replicates, workers, [&](int task) {
        const int ci = task / replicates;
        const int rep = task % replicates;
        const std::uint64_t seed = rng::derive_seed(base_seed, ci, rep, 0x9151);
        ModelParams p;
        p.k1 = couplings[ci].first;
        p.k2 = couplings[ci].second;
        {
            rng::SplitMix64 omega_gen(rng::derive_seed(seed, 1));
            p.omega = draw_omega(g, ic, omega_gen, opts.resonance_retries, opts.eps_res);
        }
        std::vector<int> perm(g.n());
        for (int i = 0; i < g.n(); ++i) perm[i] = i;
        rng::SplitMix64 shuffle_gen(rng::derive_seed(seed, 2));
        shuffle_gen.shuffle(perm);
        for (int mi = 0; mi < nm; ++mi) {
            ControlSpec spec;
            spec.mode = m_values[mi] == 0 ? ControlMode::none : mode;
            spec.pinned.assign(perm.begin(), perm.begin() + m_values[mi]);
            RunRecord rec = run_once(g, p, spec, ic, plan, seed, opts);
            cell[(static_cast<std::size_t>(ci) * replicates + rep) * nm + mi] = rec.r_hat;
        }
    });

    std::vector<PinSweepRow> rows;
    rows.reserve(static_cast<std::size_t>(nc) * nm);
    for (int ci = 0; ci < nc; ++ci)
        for (int mi = 0; mi < nm; ++mi) {
            double sum = 0.0;
            for (int rep = 0; rep < replicates; ++rep)
                sum += cell[(static_cast<std::size_t>(ci) * replicates + rep) * nm + mi];
            rows.push_back({m_values[mi], couplings[ci].first, couplings[ci].second,
                            sum / replicates});
        }
    return rows;
}

std::pair<RunRecord, RunRecord> switch_experiment(const Hypergraph& g, const ModelParams& before,
                                                  const ModelParams& after, double t_switch,
                                                  const SimPlan& plan, const ControlSpec& spec,
                                                  std::uint64_t seed, const InitialConditions& ic,
                                                  const RunOptions& opts) {
    SimPlan splan = plan;
    splan.switches = {{t_switch, after.k1, after.k2}};
    RunOptions unctrl_opts = opts;
    unctrl_opts.record_intensity = false;
    unctrl_opts.record_cost = false;
    RunOptions ctrl_opts = opts;
    ctrl_opts.record_intensity = true;
    ControlSpec none;
    RunRecord unctrl = run_once(g, before, none, ic, splan, seed, unctrl_opts);
    RunRecord ctrl = run_once(g, before, spec, ic, splan, seed, ctrl_opts);
    return {std::move(unctrl), std::move(ctrl)};
}

BasinResult basin_analysis(const Hypergraph& g, const ModelParams& p, int n_ic,
                           std::uint64_t seed, const SimPlan& plan, const RunOptions& opts,
                           int workers) {
    if (n_ic < 1) throw Error(ErrorCode::invalid_argument, "n_ic must be >= 1");
    ModelParams params = p;
    InitialConditions ic;
    ic.theta_lo = 0.0;
    ic.theta_hi = kTwoPi;
    if (params.omega.empty()) {
        rng::SplitMix64 omega_gen(rng::derive_seed(seed, 0xBA51));
        params.omega = draw_omega(g, ic, omega_gen, opts.resonance_retries, opts.eps_res);
    }
    RunOptions ro = opts;
    ro.classify = true;
    std::vector<Classification> results(n_ic);
    ControlSpec none;
    parallel_for(n_ic, workers, [&](int i) {
        RunRecord rec =
            run_once(g, params, none, ic, plan, rng::derive_seed(seed, 1, i), ro);
        results[i] = *rec.classification;
    });
    BasinResult out;
    out.n_ic = n_ic;
    double frac_sum = 0.0;
    for (const auto& c : results) {
        ++out.counts[static_cast<int>(c.state)];
        if (c.state == StateClass::TwoCluster) frac_sum += c.larger_fraction;
    }
    const int n2c = out.counts[static_cast<int>(StateClass::TwoCluster)];
    out.mean_larger_fraction = n2c > 0 ? frac_sum / n2c : 0.0;
    return out;
}

double control_cost(const std::vector<std::vector<double>>& abs_h, const std::vector<double>& times,
                    int pinned_count, double horizon) {
    if (pinned_count < 1) throw Error(ErrorCode::invalid_argument, "pinned_count must be >= 1");
    if (!(horizon > 0.0)) throw Error(ErrorCode::invalid_argument, "horizon must be positive");
    if (times.size() < 2 || abs_h.empty())
        throw Error(ErrorCode::invalid_argument, "empty control series");
    double total = 0.0;
    for (const auto& series : abs_h) {
        if (series.size() != times.size())
            throw Error(ErrorCode::invalid_argument, "control series length mismatch");
        for (std::size_t k = 0; k + 1 < times.size(); ++k)
            total += 0.5 * (series[k] + series[k + 1]) * (times[k + 1] - times[k]);
    }
    return total / (horizon * pinned_count);
}

namespace {

double quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    const double pos = q * static_cast<double>(v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return v[lo] * (1.0 - frac) + v[hi] * frac;
}

CostSummary summarize_costs(std::vector<double> costs) {
    CostSummary s;
    s.costs = costs;
    s.median = quantile(costs, 0.5);
    s.q1 = quantile(costs, 0.25);
    s.q3 = quantile(costs, 0.75);
    for (std::size_t i = 0; i < costs.size(); ++i)
        if (costs[i] > 100.0 * s.median) s.outlier_seeds.push_back(static_cast<int>(i));
    return s;
}

}  // namespace

CostResult cost_experiment(const Hypergraph& g, const ModelParams& p, int n_seeds,
                           std::uint64_t base_seed, const SimPlan& plan,
                           const InitialConditions& ic, const RunOptions& opts, int workers) {
    if (n_seeds < 1) throw Error(ErrorCode::invalid_argument, "n_seeds must be >= 1");
    std::vector<double> full_costs(n_seeds), pairwise_costs(n_seeds);
    RunOptions ro = opts;
    ro.record_cost = true;
    parallel_for(n_seeds, workers, [&](int i) {
        const std::uint64_t seed = rng::derive_seed(base_seed, i, 0xC057);
        ControlSpec spec;
        spec.pinned.resize(g.n());
        for (int v = 0; v < g.n(); ++v) spec.pinned[v] = v;
        spec.mode = ControlMode::full;
        full_costs[i] = *run_once(g, p, spec, ic, plan, seed, ro).cost;
        spec.mode = ControlMode::pairwise_only;
        pairwise_costs[i] = *run_once(g, p, spec, ic, plan, seed, ro).cost;
    });
    CostResult out;
    out.full = summarize_costs(std::move(full_costs));
    out.pairwise = summarize_costs(std::move(pairwise_costs));
    return out;
}

}  // namespace hokm
