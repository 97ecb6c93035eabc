#include "qwhorl/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qwhorl {

namespace {

double omega_at(double s, const GaussianState& state) {
    return frequency(s, state.params, state.profile);
}

}  // namespace

double initial_distribution(PhasePoint alpha, const GaussianState& state) {
    return std::exp(-std::norm(alpha.value() - state.center.value()));
}

double evolved_distribution(PhasePoint alpha, const GaussianState& state, double t) {
    if (t == 0.0) return initial_distribution(alpha, state);
    const double phase = omega_at(alpha.action(), state) * t;
    const Complex beta = alpha.value() * std::polar(1.0, phase);
    return std::exp(-std::norm(beta - state.center.value()));
}

WirtingerJet evolved_jet(PhasePoint alpha, const GaussianState& state, double t) {
    const Complex a = alpha.value();
    const Complex a_bar = std::conj(a);
    const double s = alpha.action();
    const double om = omega_at(s, state);
    const double om_slope = frequency_slope(s, state.params, state.profile);

    const Complex rot = std::polar(1.0, om * t);
    const Complex beta = a * rot;
    const Complex diff = beta - state.center.value();
    const double value = std::exp(-std::norm(diff));

    // E = (beta - c)(beta* - c*), beta = alpha exp(i Omega(alpha alpha*) t)
    const Complex i_t_slope(0.0, t * om_slope);
    const Complex dbeta = rot * (1.0 + i_t_slope * s);
    const Complex dbeta_bar = -i_t_slope * a_bar * a_bar * std::conj(rot);
    const Complex dE = dbeta * std::conj(diff) + diff * dbeta_bar;

    const Complex d_alpha = -value * dE;
    return {value, d_alpha, std::conj(d_alpha)};
}

double apply_generator(double omega, PhasePoint alpha, const WirtingerJet& jet, Sign sign) {
    const Complex a = alpha.value();
    const Complex bracket = std::conj(a) * jet.d_alpha_conj - a * jet.d_alpha;
    const double sigma = static_cast<int>(sign);
    const Complex rate = sigma * Complex(0.0, -1.0) * omega * bracket;
    return rate.real();
}

double liouville_generator(const GaussianState& state, PhasePoint alpha, double t, Sign sign) {
    return apply_generator(omega_at(alpha.action(), state), alpha, evolved_jet(alpha, state, t),
                           sign);
}

ResidualStats pde_residual(const GaussianState& state, double t, const GridSpec& grid, Sign sign,
                           double h) {
    grid.validate();
    if (!(h > 0.0)) throw std::invalid_argument("pde_residual: step h must be positive");

    const double dt = h / state.params.omega();
    ResidualStats stats;
    double sum = 0.0;
    for (std::size_t j = 0; j < grid.ny; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const PhasePoint alpha = grid.node(i, j);
            const double dpdt = (evolved_distribution(alpha, state, t + dt) -
                                 evolved_distribution(alpha, state, t - dt)) /
                                (2.0 * dt);
            const double r = std::abs(dpdt - liouville_generator(state, alpha, t, sign));
            stats.max = std::max(stats.max, r);
            sum += r;
        }
    }
    stats.mean = sum / static_cast<double>(grid.size());
    return stats;
}

PhasePoint advect_point(PhasePoint beta, const GaussianState& state, double t) {
    if (t == 0.0) return beta;
    const double phase = -omega_at(beta.action(), state) * t;
    return PhasePoint(beta.value() * std::polar(1.0, phase));
}

ContourTrace advect_contour(const Circle& circle, const GaussianState& state, double t,
                            std::size_t n_points, const AdvectOptions& options) {
    if (n_points < 8) throw std::invalid_argument("advect_contour: need at least 8 points");
    if (!(circle.radius > 0.0)) throw std::invalid_argument("advect_contour: radius must be > 0");

    const double two_pi = 2.0 * std::numbers::pi;
    const auto image = [&](double angle) {
        const PhasePoint seed(circle.center.value() + std::polar(circle.radius, angle));
        return advect_point(seed, state, t);
    };

    std::vector<std::pair<double, PhasePoint>> nodes;
    nodes.reserve(n_points);
    for (std::size_t k = 0; k < n_points; ++k) {
        const double angle = two_pi * static_cast<double>(k) / static_cast<double>(n_points);
        nodes.emplace_back(angle, image(angle));
    }

    if (options.refine) {
        const double limit =
            2.0 * 2.0 * circle.radius * std::sin(std::numbers::pi / static_cast<double>(n_points));
        bool inserted = true;
        while (inserted && nodes.size() < options.max_points) {
            inserted = false;
            std::vector<std::pair<double, PhasePoint>> next;
            next.reserve(nodes.size() * 2);
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                const auto& [a0, p0] = nodes[k];
                const bool wrap = k + 1 == nodes.size();
                const auto& [a1_raw, p1] = nodes[wrap ? 0 : k + 1];
                const double a1 = wrap ? a1_raw + two_pi : a1_raw;
                next.emplace_back(a0, p0);
                if (next.size() + (nodes.size() - k - 1) < options.max_points &&
                    std::abs(p1.value() - p0.value()) > limit) {
                    const double mid = 0.5 * (a0 + a1);
                    next.emplace_back(mid, image(mid));
                    inserted = true;
                }
            }
            nodes = std::move(next);
        }
    }

    ContourTrace trace;
    trace.closed = true;
    trace.tau = state.params.omega() * t;
    trace.points.reserve(nodes.size());
    for (const auto& node : nodes) trace.points.push_back(node.second);
    return trace;
}

double contour_length(const ContourTrace& trace) {
    const auto& pts = trace.points;
    if (pts.size() < 2) throw std::invalid_argument("contour_length: need at least 2 points");
    double length = 0.0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        length += std::abs(pts[k].value() - pts[k - 1].value());
    }
    if (trace.closed) length += std::abs(pts.front().value() - pts.back().value());
    return length;
}

}  // namespace qwhorl
