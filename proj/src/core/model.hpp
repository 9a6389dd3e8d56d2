#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/hypergraph.hpp"

namespace hokm {

/// Coupling strengths and natural frequencies of the higher-order Kuramoto
/// model. omega may be left empty when frequencies are drawn per run.
/// triadic_sign flips the sign of the second triadic harmonic
/// sin(2*th_j - th_k - th_i); the physical model uses +1, the switch exists for
/// sensitivity checks of the embedding-equivalence validation.
struct ModelParams {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    std::vector<double> omega;
    double triadic_sign = 1.0;
};

/// Default tolerance of the resonance guard: zero-sum frequency combinations
/// (the denominators of the feedback control) must exceed this in magnitude.
inline constexpr double kResonanceEps = 1e-6;

/// Returns a description of the first resonant simplex, or nullopt if omega is
/// admissible. When `pinned` is given only simplices fully inside the pinned
/// set are checked (the control only ever divides by those combinations).
std::optional<std::string> resonance_violation(const Hypergraph& g, std::span<const double> omega,
                                               double eps = kResonanceEps,
                                               const std::vector<int>* pinned = nullptr);

/// Uncontrolled vector field: d(theta)/dt per node, with the triadic sum over
/// ordered (j,k) realizations of each stored triangle.
std::vector<double> hokm_rhs(const Hypergraph& g, const ModelParams& p,
                             std::span<const double> theta);

/// |mean of exp(i*theta)| in [0,1].
double order_parameter(std::span<const double> theta);

/// |mean of exp(i*m*theta)|; m=1 is order_parameter, m=2 detects antipodal
/// two-cluster states.
double cluster_order_parameter(std::span<const double> theta, int m);

/// Arithmetic mean of samples with t0 < t <= t_fin (fixed-step samples; the
/// boundaries are compared with a 1e-9 slack so nominal grid times behave as
/// written). Throws if the window contains no samples.
double averaged_order_parameter(const std::vector<std::pair<double, double>>& series, double t0,
                                double t_fin);

/// Multiorder Laplacian L = 2*L1 + 6*L2 with L1_ij = -(K1/N) A_ij,
/// L2_ij = -(K2/N^2) sum_k B_ijk off the diagonal and zero row sums.
/// Returned row-major, n x n.
std::vector<double> multiorder_laplacian(const Hypergraph& g, const ModelParams& p);

/// Eigenvalues of the 2n x 2n Jacobian at the synchronized torus,
/// spec(L) U spec(-L), sorted ascending. Uses a cyclic Jacobi rotation scheme
/// and verifies residuals ||L v - lambda v|| <= 1e-8 ||L||.
std::vector<double> sync_jacobian_spectrum(const Hypergraph& g, const ModelParams& p);

/// Symmetric eigensolve by cyclic Jacobi rotations; returns eigenvalues
/// ascending. `a` is n x n row-major and is consumed.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

enum class QuarticVariant {
    type1,  // sin(th_j+th_k+th_l-3 th_i) + sin(3 th_j-th_k-th_l-th_i), prefactor (3/2) K3/N^3
    type2,  // 2 K3/N^3 sin(th_k+th_l-th_j-th_i)
};

/// Embedded dynamics with one 4-body interaction term over the all-to-all
/// quadruple set (analytic, nothing stored): omega_i plus the quartic
/// contribution. n < 4 leaves just omega.
std::vector<double> d3_rhs(int n, const ModelParams& p, std::span<const double> theta,
                           QuarticVariant variant);

}  // namespace hokm
