#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hokm {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct ValidateOptions {
    std::uint64_t seed = 20240501;
    // Flips the sign of the second triadic harmonic in the phase dynamics;
    // the embedding-equivalence check must then fail, demonstrating that the
    // check is sensitive to the coupling convention.
    bool flip_triadic_sign = false;
};

/// Fast self-validation suite: control closed forms against the
/// finite-difference bracket oracle (full and pairwise), embedding
/// equivalence between the phase model and the action-angle flow, invariance
/// of the constant-action torus, RK4 convergence order, and the spectral
/// pairing of the synchronization Jacobian.
std::vector<CheckResult> run_validation(const ValidateOptions& opts = {});

}  // namespace hokm
