#include "qwhorl/dynamics.hpp"

#include <stdexcept>

namespace qwhorl {

namespace {

Complex rotate(Complex z, double angle) { return z * std::polar(1.0, angle); }

}  // namespace

PhasePoint evolve_exact(const Trajectory& traj, double t) {
    if (t == 0.0) return traj.initial;
    return PhasePoint(rotate(traj.initial.value(), -traj.frozen_frequency() * t));
}

PhasePoint integrate_eom(const Trajectory& traj, double t, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("integrate_eom: steps must be >= 1");

    const auto rhs = [&](Complex a) {
        const double s = std::norm(a);
        return Complex(0.0, -1.0) * frequency(s, traj.params, traj.profile) * a;
    };

    const double h = t / static_cast<double>(steps);
    Complex a = traj.initial.value();
    for (std::size_t n = 0; n < steps; ++n) {
        const Complex k1 = rhs(a);
        const Complex k2 = rhs(a + 0.5 * h * k1);
        const Complex k3 = rhs(a + 0.5 * h * k2);
        const Complex k4 = rhs(a + h * k3);
        a += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return PhasePoint(a);
}

double conserved_action(const Trajectory& traj, double t) { return evolve_exact(traj, t).action(); }

}  // namespace qwhorl
