#pragma once

#include <complex>
#include <span>
#include <vector>

#include "core/hamiltonian.hpp"
#include "core/hypergraph.hpp"
#include "core/model.hpp"

namespace hokm {

enum class ControlMode { none, pairwise_only, full };

/// Which nodes receive (and are observed by) the feedback control. With
/// mode == none the pinned set is ignored.
struct ControlSpec {
    ControlMode mode = ControlMode::none;
    std::vector<int> pinned;
};

enum class IntensityNorm { all_nodes, pinned };

/// Precomputed pinned-restricted structure for the feedback control: the
/// edges and triangles lying entirely inside the pinned set, with the
/// reciprocal frequency denominators of each Fourier mode. Building the
/// workspace runs the resonance guard and fails naming the offending simplex.
///
/// eval() writes the control vector h (zero on unpinned nodes). The truncated
/// feedback term is
///     h_i = -1/2 d/dI_i [ {Gamma V, V} ] at I = 1/2,
/// accumulated as h = (Chat*C + Shat*S)/8 over the pinned Fourier modes, where
/// C,S are mode sums shared by every node and Chat,Shat their incidence-
/// weighted counterparts. Scratch buffers are reused across calls, so a single
/// workspace must not be evaluated from two threads at once; build one
/// workspace per concurrent run.
class ControlWorkspace {
public:
    ControlWorkspace(const Hypergraph& g, std::span<const double> omega, const ControlSpec& spec,
                     double eps_res = kResonanceEps);

    /// Control vector for the current coupling strengths (the structure and
    /// frequencies are fixed at build time; K1, K2 may change between calls,
    /// e.g. across a mid-run parameter switch).
    void eval(std::span<const double> theta, double k1, double k2, std::span<double> h_out) const;

    ControlMode mode() const { return mode_; }
    int pinned_count() const { return static_cast<int>(pinned_.size()); }
    const std::vector<int>& pinned() const { return pinned_; }

private:
    struct PinnedEdge {
        int a, b;          // local indices, a < b
        double inv_nu;     // 1/(w_b - w_a)
    };
    struct PinnedTriangle {
        int v[3];          // local indices, ascending
        double inv_nu[3];  // 1/(w_j + w_k - 2 w_center) per center choice
    };

    int n_ = 0;
    ControlMode mode_ = ControlMode::none;
    std::vector<int> pinned_;  // global indices, ascending
    std::vector<PinnedEdge> edges_;
    std::vector<PinnedTriangle> triangles_;
    double n_scale_ = 1.0;  // N of the full structure (couplings are K/N, K/N^2)

    // per-eval scratch
    mutable std::vector<std::complex<double>> z_, z2_;
    mutable std::vector<double> vec_c_, vec_s_, mat_c_, mat_s_;
};

/// One-shot closed-form control terms. control_full uses pairwise and triadic
/// interactions, control_pairwise only the pairwise part. Unpinned components
/// are exactly zero.
std::vector<double> control_full(const Hypergraph& g, const ModelParams& p,
                                 std::span<const double> theta, const ControlSpec& spec);
std::vector<double> control_pairwise(const Hypergraph& g, const ModelParams& p,
                                     std::span<const double> theta, const ControlSpec& spec);

/// Controlled vector field: hokm_rhs plus the control selected by spec.mode.
std::vector<double> controlled_rhs(const Hypergraph& g, const ModelParams& p,
                                   std::span<const double> theta, const ControlSpec& spec);

/// Mean absolute control over all nodes or over the pinned set.
double control_intensity(std::span<const double> control, int pinned_count, IntensityNorm norm);

/// Poisson bracket {Gamma V, V} evaluated from the closed-form partial
/// derivatives of V and Gamma V at a general action-angle state, with the
/// perturbation V restricted to the pinned set (and, in pairwise_only mode, to
/// the pairwise interaction part). This is the independent functional behind
/// the finite-difference control oracle.
double bracket_functional(const Hypergraph& g, const ModelParams& p, const ActionAngleState& s,
                          const ControlSpec& spec);

/// Reference control by central differences of the bracket functional:
/// h_i = -1/2 d/dI_i {Gamma V, V} at I = 1/2, step `delta`. Slow; used by the
/// validation suite and tests as the arbiter for the closed forms.
std::vector<double> control_oracle_fd(const Hypergraph& g, const ModelParams& p,
                                      std::span<const double> theta, const ControlSpec& spec,
                                      double delta = 1e-5);

}  // namespace hokm
