#include "core/integrate.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace hokm {

IntegrationResult integrate(const Field& field, std::vector<double> y0,
                            const IntegrationPlan& plan, const Observer& observer) {
    if (!(plan.dt > 0.0)) throw Error(ErrorCode::invalid_argument, "dt must be positive");
    if (!(plan.t0 < plan.t_end)) throw Error(ErrorCode::invalid_argument, "need t0 < t_end");
    if (plan.sample_every < 1)
        throw Error(ErrorCode::invalid_argument, "sample_every must be positive");

    const long steps = std::max<long>(1, std::lround((plan.t_end - plan.t0) / plan.dt));
    IntegrationResult result;

    // Snap switches to the step grid.
    std::vector<std::pair<long, const SwitchEvent*>> switches;
    double prev_time = plan.t0;
    for (const auto& sw : plan.switches) {
        if (!(sw.time > plan.t0 && sw.time < plan.t_end))
            throw Error(ErrorCode::invalid_argument,
                        "switch time " + std::to_string(sw.time) + " not inside (t0, t_end)");
        if (sw.time < prev_time)
            throw Error(ErrorCode::invalid_argument, "switch times must be ascending");
        prev_time = sw.time;
        long idx = std::lround((sw.time - plan.t0) / plan.dt);
        idx = std::max<long>(1, std::min(steps - 1, idx));
        const double snapped = plan.t0 + static_cast<double>(idx) * plan.dt;
        if (std::abs(snapped - sw.time) > plan.dt / 2.0 + 1e-12)
            result.warnings.push_back("switch at t=" + std::to_string(sw.time) + " snapped to t=" +
                                      std::to_string(snapped));
        switches.emplace_back(idx, &sw);
    }

    const std::size_t dim = y0.size();
    std::vector<double> y = std::move(y0);
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

    if (observer) observer(plan.t0, y);
    std::size_t next_switch = 0;
    for (long step = 1; step <= steps; ++step) {
        const double t = plan.t0 + static_cast<double>(step - 1) * plan.dt;
        while (next_switch < switches.size() && switches[next_switch].first == step - 1) {
            switches[next_switch].second->apply();
            ++next_switch;
        }
        const double h = plan.dt;
        field(t, y, k1);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        field(t + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        field(t + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * k3[i];
        field(t + h, tmp, k4);
        for (std::size_t i = 0; i < dim; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        for (std::size_t i = 0; i < dim; ++i)
            if (!std::isfinite(y[i]))
                throw Error(ErrorCode::divergence,
                            "non-finite state component " + std::to_string(i) + " at t=" +
                                std::to_string(plan.t0 + static_cast<double>(step) * plan.dt));

        if (observer && (step % plan.sample_every == 0 || step == steps))
            observer(plan.t0 + static_cast<double>(step) * plan.dt, y);
    }
    result.y = std::move(y);
    return result;
}

}  // namespace hokm
