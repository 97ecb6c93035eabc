#pragma once

// Phase-space probability transport for the q-deformed oscillator.
//
// The evolved density is P(alpha, t) = P0(alpha exp(+i Omega(|alpha|^2) t)) with
// P0 the unit-peak Gaussian exp(-|alpha - alpha(0)|^2). Its peak rides along the
// clockwise trajectories alpha(0) exp(-i Omega t), and it satisfies
//
//     dP/dt = -i Omega(|alpha|^2) (alpha* d/dalpha* - alpha d/dalpha) P
//
// exactly. The same machinery serves the alpha_q representation: the state's
// points are then alpha_q values and the profile is Mu3/Mu4.

#include <cstddef>
#include <vector>

#include "qwhorl/core.hpp"
#include "qwhorl/grid.hpp"

namespace qwhorl {

struct GaussianState {
    PhasePoint center{0.5, 0.0};
    Representation representation = Representation::Alpha;
    FrequencyProfile profile = FrequencyProfile::mu1();
    OscillatorParams params{};
};

// Sign in front of the Liouville generator. Plus is the transport equation the
// evolved density actually satisfies; Minus exists to demonstrate that the
// opposite rotation convention does not.
enum class Sign : int { Plus = 1, Minus = -1 };

// Value of a real field together with its Wirtinger derivatives d/dalpha and
// d/dalpha*. For real fields d_alpha_conj == conj(d_alpha).
struct WirtingerJet {
    double value = 0.0;
    Complex d_alpha{};
    Complex d_alpha_conj{};
};

struct ContourTrace {
    std::vector<PhasePoint> points;
    bool closed = false;
    double tau = 0.0;  // omega t
};

struct Circle {
    PhasePoint center;
    double radius;
};

struct AdvectOptions {
    // Insert seed midpoints wherever neighbouring advected points drift more
    // than twice the initial spacing apart.
    bool refine = true;
    std::size_t max_points = std::size_t{1} << 20;
};

struct ResidualStats {
    double max = 0.0;
    double mean = 0.0;
};

// exp(-|alpha - alpha(0)|^2)
double initial_distribution(PhasePoint alpha, const GaussianState& state);

// exp(-|alpha exp(i Omega(|alpha|^2) t) - alpha(0)|^2)
double evolved_distribution(PhasePoint alpha, const GaussianState& state, double t);

// Analytic value and Wirtinger derivatives of evolved_distribution, including
// the dependence of Omega on |alpha|^2.
WirtingerJet evolved_jet(PhasePoint alpha, const GaussianState& state, double t);

// sigma (-i) Omega (alpha* d/dalpha* - alpha d/dalpha) applied to a field given by its jet.
double apply_generator(double omega, PhasePoint alpha, const WirtingerJet& jet, Sign sign);

// Right-hand side of the Liouville equation for the state's evolved density.
double liouville_generator(const GaussianState& state, PhasePoint alpha, double t, Sign sign);

// Max and mean over the grid of |dP/dt - generator| where dP/dt is a centred
// difference with step h / omega. Throws std::invalid_argument for h <= 0 or a
// degenerate grid.
ResidualStats pde_residual(const GaussianState& state, double t, const GridSpec& grid, Sign sign,
                           double h);

// Image of one point under the characteristic flow: beta exp(-i Omega(|beta|^2) t).
PhasePoint advect_point(PhasePoint beta, const GaussianState& state, double t);

// Advects `n_points` evenly spaced seeds of `circle` (n_points >= 8, radius > 0).
ContourTrace advect_contour(const Circle& circle, const GaussianState& state, double t,
                            std::size_t n_points, const AdvectOptions& options = {});

// Polyline length, closing segment included for closed traces.
// Throws std::invalid_argument for fewer than 2 points.
double contour_length(const ContourTrace& trace);

}  // namespace qwhorl
