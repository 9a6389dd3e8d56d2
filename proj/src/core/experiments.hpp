#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/control.hpp"
#include "core/hypergraph.hpp"
#include "core/model.hpp"

namespace hokm {

enum class StateClass { Sync, TwoCluster, Incoherent };

struct Classification {
    StateClass state = StateClass::Incoherent;
    double larger_fraction = 0.0;  // meaningful for TwoCluster, in [0.5, 1]
};

struct ClassifyThresholds {
    double sync_r = 0.95;     // R at or above this => Sync
    double cluster_r2 = 0.95; // second-harmonic order parameter => TwoCluster
};

/// Label the final state: Sync if R >= sync threshold, else TwoCluster if the
/// m=2 order parameter clears its threshold (larger_fraction = (1+R)/2, exact
/// for ideal antipodal clusters), else Incoherent.
Classification classify_state(std::span<const double> theta, const ClassifyThresholds& thr = {});

const char* to_string(StateClass s);

/// Mid-run coupling change, snapped to the integration grid.
struct ParamSwitch {
    double time;
    double k1, k2;
};

struct SimPlan {
    double t0 = 0.0;
    double t_end = 40.0;
    double dt = 0.1;
    int sample_every = 1;
    std::vector<ParamSwitch> switches;
};

/// Initial-condition descriptor: phases uniform on [theta_lo, theta_hi);
/// frequencies uniform on [omega_lo, omega_hi) when the model does not carry
/// an explicit omega vector (resampled until the resonance guard passes).
struct InitialConditions {
    double theta_lo = 0.0, theta_hi = 0.3;
    double omega_lo = 0.0, omega_hi = 1.0;
};

struct RunOptions {
    double rhat_t0 = 30.0, rhat_t1 = 40.0;  // averaging window (t0, t1]
    bool record_intensity = false;          // sample I(t) = <|h_i|> each observation
    bool record_cost = false;               // per-node |h_i(t)| trapezoid cost
    bool classify = false;
    ClassifyThresholds thresholds;
    IntensityNorm intensity_norm = IntensityNorm::all_nodes;
    int resonance_retries = 64;
    double eps_res = kResonanceEps;
};

struct RunRecord {
    std::vector<std::pair<double, double>> r_series;
    std::vector<std::pair<double, double>> intensity_series;
    double r_hat = 0.0;
    std::vector<double> final_theta;  // wrapped to [0, 2*pi)
    std::optional<double> cost;
    std::optional<Classification> classification;
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;
};

/// One seeded simulation of the (controlled) model. Draws theta(0) and, if
/// p.omega is empty, a fresh frequency vector; integrates controlled_rhs with
/// RK4 and records R(t) (and optionally I(t) and the control cost).
RunRecord run_once(const Hypergraph& g, const ModelParams& p, const ControlSpec& spec,
                   const InitialConditions& ic, const SimPlan& plan, std::uint64_t seed,
                   const RunOptions& opts = {});

struct SweepGrid {
    std::vector<double> k1_values;
    std::vector<double> k2_values;
    int replicates = 1;
    std::uint64_t base_seed = 0;
};

struct SweepResult {
    std::vector<double> k1_values, k2_values;
    int replicates = 0;
    // row-major [i_k1 * n_k2 + i_k2]
    std::vector<double> mean, stddev;
    std::vector<int> ok;  // successful replicates per cell
    std::vector<std::string> cell_error;

    double mean_at(std::size_t i1, std::size_t i2) const { return mean[i1 * k2_values.size() + i2]; }
};

/// Mean (and std) of R-hat per (K1, K2) cell. Per-cell failures are recorded,
/// not fatal. Cells and replicates run on `workers` threads; the reduction is
/// by cell index, so the result is independent of scheduling.
SweepResult sweep_r_hat(const Hypergraph& g, const SweepGrid& grid, const ControlSpec& spec,
                        const SimPlan& plan, const InitialConditions& ic, const RunOptions& opts,
                        int workers = 0);

struct PinSweepRow {
    int m;
    double k1, k2;
    double r_hat_mean;
};

/// R-hat as a function of the number of pinned nodes, for each coupling pair.
/// Per replicate one frequency sample, phase sample and node shuffle are
/// drawn; every M in m_values reuses them with the first M shuffled nodes
/// pinned (M = 0 runs uncontrolled).
std::vector<PinSweepRow> pinning_sweep(const Hypergraph& g, const std::vector<int>& m_values,
                                       const std::vector<std::pair<double, double>>& couplings,
                                       ControlMode mode, int replicates, std::uint64_t base_seed,
                                       const SimPlan& plan, const InitialConditions& ic,
                                       const RunOptions& opts, int workers = 0);

/// Two runs with identical seed (same initial phases and frequencies): one
/// uncontrolled, one controlled, both switching parameters at t_switch.
std::pair<RunRecord, RunRecord> switch_experiment(const Hypergraph& g, const ModelParams& before,
                                                  const ModelParams& after, double t_switch,
                                                  const SimPlan& plan, const ControlSpec& spec,
                                                  std::uint64_t seed, const InitialConditions& ic,
                                                  const RunOptions& opts = {});

struct BasinResult {
    int n_ic = 0;
    int counts[3] = {0, 0, 0};  // indexed by StateClass
    double fraction(StateClass s) const {
        return static_cast<double>(counts[static_cast<int>(s)]) / n_ic;
    }
    double mean_larger_fraction = 0.0;  // over TwoCluster outcomes (0 if none)
};

/// Relative basin sizes from n_ic random initial phase vectors (uniform on
/// [0, 2*pi)), classified after the integration horizon. One frequency sample
/// is drawn per analysis unless p.omega is set.
BasinResult basin_analysis(const Hypergraph& g, const ModelParams& p, int n_ic,
                           std::uint64_t seed, const SimPlan& plan, const RunOptions& opts,
                           int workers = 0);

/// Time- and node-averaged absolute control: (1/(T*M)) sum_i integral |h_i|,
/// trapezoid rule on the sample grid. abs_h[i] is the |h| series of pinned
/// node i sampled at `times`.
double control_cost(const std::vector<std::vector<double>>& abs_h, const std::vector<double>& times,
                    int pinned_count, double horizon);

struct CostSummary {
    double median = 0.0, q1 = 0.0, q3 = 0.0;
    std::vector<double> costs;        // per seed, order = seed index
    std::vector<int> outlier_seeds;   // cost > 100x median
};

struct CostResult {
    CostSummary full;
    CostSummary pairwise;
};

/// Paired control-cost experiment: for each of n_seeds seeds, run the full and
/// the pairwise-only control on identical draws (all nodes pinned) and report
/// median/quartiles with outlier flags.
CostResult cost_experiment(const Hypergraph& g, const ModelParams& p, int n_seeds,
                           std::uint64_t base_seed, const SimPlan& plan,
                           const InitialConditions& ic, const RunOptions& opts, int workers = 0);

/// Run f(i) for i in [0, n) on up to `workers` threads (0 = hardware pick).
/// Exceptions propagate; results must be written to per-index slots.
void parallel_for(int n, int workers, const std::function<void(int)>& f);

}  // namespace hokm
