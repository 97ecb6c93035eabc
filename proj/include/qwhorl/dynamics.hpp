#pragma once

#include <cstddef>

#include "qwhorl/core.hpp"

namespace qwhorl {

// A single phase-space trajectory. The amplitude is conserved, so the
// frequency is fixed at Omega(|initial|^2) for the whole motion.
// For Representation::AlphaQ the initial point is alpha_q(0) and the profile
// should be Mu3/Mu4.
struct Trajectory {
    PhasePoint initial;
    FrequencyProfile profile;
    OscillatorParams params;
    Representation representation = Representation::Alpha;

    double frozen_frequency() const { return frequency(initial.action(), params, profile); }
};

// alpha(0) exp(-i Omega t): clockwise rotation.
PhasePoint evolve_exact(const Trajectory& traj, double t);

// Classical RK4 on alpha' = -i Omega(|alpha|^2) alpha with `steps` equal steps
// over [0, t]. The frequency is re-evaluated at every stage, so this is an
// independent check of evolve_exact. Throws std::invalid_argument for steps == 0.
PhasePoint integrate_eom(const Trajectory& traj, double t, std::size_t steps);

// |alpha(t)|^2 along the exact solution.
double conserved_action(const Trajectory& traj, double t);

}  // namespace qwhorl
