#pragma once

#include <span>
#include <utility>
#include <vector>

#include "core/hypergraph.hpp"
#include "core/model.hpp"

namespace hokm {

/// Action-angle state of the embedding flow. Actions must stay strictly
/// positive (the energy takes square/cube roots of them).
struct ActionAngleState {
    std::vector<double> actions;
    std::vector<double> angles;
};

/// Energy of the embedding system:
///   H = sum_i w_i I_i
///     - (K1/N)   sum_{i,j}   A_ijk  sqrt(I_i I_j)      (I_j - I_i)        sin(th_j - th_i)
///     - (K2/N^2) sum_{i,j,k} B_ijk  cbrt(I_i I_j I_k)  (I_j + I_k - 2I_i) sin(th_j + th_k - 2 th_i)
/// with sums over ordered realizations of the stored simplices.
double hamiltonian_value(const Hypergraph& g, const ModelParams& p, const ActionAngleState& s);

/// Canonical flow (dI/dt, dtheta/dt) = (-dH/dtheta, dH/dI). On any torus
/// I = c the action derivatives vanish identically; at c = 1/2 the angle
/// dynamics reduce to hokm_rhs.
std::pair<std::vector<double>, std::vector<double>> hamiltonian_flow_rhs(const Hypergraph& g,
                                                                         const ModelParams& p,
                                                                         const ActionAngleState& s);

/// Same flow packed as y = [I; theta] for the generic integrator.
void hamiltonian_flow_packed(const Hypergraph& g, const ModelParams& p, std::span<const double> y,
                             std::span<double> dydt);

}  // namespace hokm
