#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hokm {

/// Time-triggered event: `apply` runs once, just before the first step whose
/// start time is the snapped grid point.
struct SwitchEvent {
    double time = 0.0;
    std::function<void()> apply;
};

struct IntegrationPlan {
    double t0 = 0.0;
    double t_end = 40.0;
    double dt = 0.1;
    int sample_every = 1;  // observer cadence in steps
    std::vector<SwitchEvent> switches;
};

using Field = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;
using Observer = std::function<void(double t, std::span<const double> y)>;

struct IntegrationResult {
    std::vector<double> y;
    std::vector<std::string> warnings;
};

/// Classical fixed-step RK4. Observers fire at t0, every sample_every steps
/// and at the final step. Switch times are snapped to the nearest grid point
/// (with a warning when the shift exceeds dt/2) and must lie strictly inside
/// (t0, t_end), ascending. State is never wrapped or otherwise adjusted here;
/// any non-finite component aborts with a divergence error reporting t.
IntegrationResult integrate(const Field& field, std::vector<double> y0,
                            const IntegrationPlan& plan, const Observer& observer = {});

}  // namespace hokm
