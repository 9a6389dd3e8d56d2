#include "core/validate.hpp"

#include <cmath>
#include <complex>

#include "core/control.hpp"
#include "core/hamiltonian.hpp"
#include "core/integrate.hpp"
#include "core/model.hpp"
#include "core/rng.hpp"

namespace hokm {

namespace {

// Frequencies with all pairwise and triadic combinations comfortably away
// from resonance, so finite-difference tolerances stay meaningful.
std::vector<double> admissible_omega(int n, rng::SplitMix64& gen, double min_sep = 0.05) {
    for (;;) {
        std::vector<double> w(n);
        for (double& x : w) x = gen.uniform(0.0, 1.0);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (i != j && std::abs(w[j] - w[i]) < min_sep) ok = false;
                for (int k = j + 1; k < n && ok; ++k)
                    if (i != j && i != k && std::abs(w[j] + w[k] - 2.0 * w[i]) < min_sep) ok = false;
            }
        if (ok) return w;
    }
}

double rel_err(std::span<const double> got, std::span<const double> want) {
    double scale = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        scale = std::max(scale, std::abs(want[i]));
        diff = std::max(diff, std::abs(got[i] - want[i]));
    }
    return diff / std::max(scale, 1e-12);
}

CheckResult control_oracle_check(const char* name, ControlMode mode, std::uint64_t seed) {
    rng::SplitMix64 gen(seed);
    double worst = 0.0;
    for (int n = 4; n <= 6; ++n) {
        Hypergraph g = Hypergraph::all_to_all(n);
        ModelParams p;
        p.k1 = gen.uniform(0.2, 1.5);
        p.k2 = gen.uniform(0.2, 1.5);
        p.omega = admissible_omega(n, gen);
        std::vector<double> theta(n);
        for (double& th : theta) th = gen.uniform(0.0, 6.28);
        for (int m : {n, n - 2}) {
            ControlSpec spec;
            spec.mode = mode;
            for (int i = 0; i < m; ++i) spec.pinned.push_back(i);
            const std::vector<double> closed = mode == ControlMode::full
                                                   ? control_full(g, p, theta, spec)
                                                   : control_pairwise(g, p, theta, spec);
            const std::vector<double> fd = control_oracle_fd(g, p, theta, spec);
            worst = std::max(worst, rel_err(closed, fd));
        }
    }
    return {name, worst, 1e-6, worst <= 1e-6, "max relative error vs. central differences"};
}

CheckResult embedding_check(std::uint64_t seed, bool flip_sign) {
    const int n = 8;
    Hypergraph g = Hypergraph::all_to_all(n);
    rng::SplitMix64 gen(seed);
    ModelParams p;
    p.k1 = 1.0;
    p.k2 = 1.0;
    p.omega = admissible_omega(n, gen, 0.01);
    if (flip_sign) p.triadic_sign = -1.0;
    std::vector<double> theta0(n);
    for (double& th : theta0) th = gen.uniform(0.0, 6.28);

    IntegrationPlan plan;
    plan.t0 = 0.0;
    plan.t_end = 3.0;
    plan.dt = 1e-3;
    plan.sample_every = 100;

    Field phase_field = [&](double, std::span<const double> y, std::span<double> dydt) {
        const std::vector<double> r = hokm_rhs(g, p, y);
        std::copy(r.begin(), r.end(), dydt.begin());
    };
    ModelParams p_plus = p;
    p_plus.triadic_sign = 1.0;  // the embedding flow fixes the physical sign
    Field ham_field = [&](double, std::span<const double> y, std::span<double> dydt) {
        hamiltonian_flow_packed(g, p_plus, y, dydt);
    };

    std::vector<std::pair<double, std::vector<double>>> phase_traj, ham_traj;
    integrate(phase_field, theta0, plan, [&](double t, std::span<const double> y) {
        phase_traj.emplace_back(t, std::vector<double>(y.begin(), y.end()));
    });
    std::vector<double> y0(2 * n, 0.5);
    std::copy(theta0.begin(), theta0.end(), y0.begin() + n);
    integrate(ham_field, y0, plan, [&](double t, std::span<const double> y) {
        ham_traj.emplace_back(t, std::vector<double>(y.begin() + n, y.end()));
    });
    double worst = 0.0;
    for (std::size_t s = 0; s < phase_traj.size(); ++s)
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(phase_traj[s].second[i] - ham_traj[s].second[i]));
    return {"embedding-equivalence", worst, 1e-6, worst <= 1e-6,
            "max |theta_model - theta_flow| on the half-action torus"};
}

CheckResult torus_check(std::uint64_t seed) {
    const int n = 8;
    Hypergraph g = Hypergraph::all_to_all(n);
    rng::SplitMix64 gen(seed);
    ModelParams p;
    p.k1 = 1.2;
    p.k2 = 0.8;
    p.omega = admissible_omega(n, gen, 0.01);
    double worst = 0.0;
    for (double c : {0.3, 1.0}) {
        std::vector<double> y0(2 * n, c);
        for (int i = 0; i < n; ++i) y0[n + i] = gen.uniform(0.0, 6.28);
        IntegrationPlan plan;
        plan.t_end = 3.0;
        plan.dt = 1e-3;
        plan.sample_every = 200;
        Field f = [&](double, std::span<const double> y, std::span<double> dydt) {
            hamiltonian_flow_packed(g, p, y, dydt);
        };
        integrate(f, y0, plan, [&](double, std::span<const double> y) {
            for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(y[i] - c));
        });
    }
    return {"torus-invariance", worst, 1e-9, worst <= 1e-9,
            "max action drift from constant-action start"};
}

CheckResult rk4_order_check() {
    // endpoint error of dx/dt = -x over one unit halves by ~16 per dt halving
    Field f = [](double, std::span<const double> y, std::span<double> dydt) {
        dydt[0] = -y[0];
    };
    auto err = [&](double dt) {
        IntegrationPlan plan;
        plan.t_end = 1.0;
        plan.dt = dt;
        auto r = integrate(f, {1.0}, plan);
        return std::abs(r.y[0] - std::exp(-1.0));
    };
    const double e1 = err(0.1), e2 = err(0.05), e3 = err(0.025);
    const double f1 = e1 / e2, f2 = e2 / e3;
    const double worst = std::max(std::abs(f1 - 16.0), std::abs(f2 - 16.0));
    const bool pass = f1 >= 14.0 && f1 <= 18.0 && f2 >= 14.0 && f2 <= 18.0;
    return {"rk4-order", worst, 2.0, pass, "deviation of the dt-halving error factor from 16"};
}

CheckResult spectrum_check(std::uint64_t seed) {
    rng::SplitMix64 gen(seed);
    double worst = 0.0;
    bool pass = true;
    Hypergraph graphs[2] = {Hypergraph::all_to_all(12),
                            Hypergraph::random_simplicial_complex(14, 8.0, 2.0, gen.next_u64())};
    for (const auto& g : graphs) {
        ModelParams p;
        p.k1 = gen.uniform(0.2, 2.0);
        p.k2 = gen.uniform(0.2, 2.0);
        const int n = g.n();
        const std::vector<double> L = multiorder_laplacian(g, p);
        double lscale = 0.0;
        for (double x : L) lscale = std::max(lscale, std::abs(x));
        lscale = std::max(lscale, 1e-12);
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += L[static_cast<std::size_t>(i) * n + j];
            worst = std::max(worst, std::abs(row) / lscale);
        }
        const std::vector<double> spec = sync_jacobian_spectrum(g, p);
        for (std::size_t i = 0; i < spec.size(); ++i) {
            const double mirror = -spec[spec.size() - 1 - i];
            worst = std::max(worst, std::abs(spec[i] - mirror) / lscale);
        }
        // two zero eigenvalues from the block structure
        int zeros = 0;
        for (double lam : spec)
            if (std::abs(lam) <= 1e-8 * lscale * n) ++zeros;
        if (zeros < 2) pass = false;
    }
    pass = pass && worst <= 1e-8;
    return {"laplacian-spectrum", worst, 1e-8, pass,
            "row-sum and negation-pairing residual (relative)"};
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidateOptions& opts) {
    std::vector<CheckResult> checks;
    checks.push_back(control_oracle_check("control-oracle-full", ControlMode::full,
                                          rng::derive_seed(opts.seed, 1)));
    checks.push_back(control_oracle_check("control-oracle-pairwise", ControlMode::pairwise_only,
                                          rng::derive_seed(opts.seed, 2)));
    checks.push_back(embedding_check(rng::derive_seed(opts.seed, 3), opts.flip_triadic_sign));
    checks.push_back(torus_check(rng::derive_seed(opts.seed, 4)));
    checks.push_back(rk4_order_check());
    checks.push_back(spectrum_check(rng::derive_seed(opts.seed, 5)));
    return checks;
}

}  // namespace hokm
