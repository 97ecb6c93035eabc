#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "qwhorl/liouville.hpp"

using namespace qwhorl;
using qwhorl::testing::Gen;
using qwhorl::testing::kCases;

namespace {

constexpr double kPi = std::numbers::pi;
const double kTaus[] = {kPi / 2, kPi, 3 * kPi / 2, 2 * kPi};

const FrequencyProfile kProfiles[] = {FrequencyProfile::undeformed(), FrequencyProfile::mu1(),
                                      FrequencyProfile::mu2(),        FrequencyProfile::mu3(),
                                      FrequencyProfile::mu4(),        FrequencyProfile::anharmonic()};

GaussianState state_for(const FrequencyProfile& prof, double q = 0.5) {
    GaussianState st;
    st.profile = prof;
    st.representation = prof.representation();
    st.params = OscillatorParams{q};
    return st;
}

GaussianState random_state(Gen& gen) {
    GaussianState st = state_for(kProfiles[gen.index(std::size(kProfiles))], gen.uniform(0.1, 0.9));
    st.center = {gen.uniform(-0.6, 0.6), gen.uniform(-0.6, 0.6)};
    return st;
}

}  // namespace

TEST_CASE("initial Gaussian against oracle values") {
    const GaussianState st = state_for(FrequencyProfile::mu1());
    CHECK(std::abs(initial_distribution({0.0, 0.0}, st) - 0.77880078307140487) <= 1e-16);
    CHECK(std::abs(initial_distribution({-2.5, 0.0}, st) - 1.2340980408667955e-4) <= 1e-18);
    CHECK(std::abs(initial_distribution({-1.0, 1.0}, st) - 0.038774207831722010) <= 1e-16);
    CHECK(initial_distribution(st.center, st) == 1.0);
}

TEST_CASE("property: t = 0 reproduces the initial distribution exactly") {
    Gen gen(31);
    for (int c = 0; c < kCases; ++c) {
        const auto st = random_state(gen);
        const PhasePoint a{gen.uniform(-1, 1), gen.uniform(-1, 1)};
        CHECK(evolved_distribution(a, st, 0.0) == initial_distribution(a, st));
    }
}

TEST_CASE("property: analytic jet matches central differences") {
    Gen gen(32);
    for (int c = 0; c < kCases; ++c) {
        const auto st = random_state(gen);
        const double t = gen.uniform(0.0, 2 * kPi);
        const PhasePoint a{gen.uniform(-1, 1), gen.uniform(-1, 1)};
        const double h = 1e-5;
        const auto P = [&](double x, double y) { return evolved_distribution({x, y}, st, t); };
        const double px = (P(a.re() + h, a.im()) - P(a.re() - h, a.im())) / (2 * h);
        const double py = (P(a.re(), a.im() + h) - P(a.re(), a.im() - h)) / (2 * h);
        const WirtingerJet jet = evolved_jet(a, st, t);
        CHECK(jet.value == doctest::Approx(P(a.re(), a.im())).epsilon(1e-14));
        CHECK(std::abs(jet.d_alpha - 0.5 * Complex(px, -py)) <= 1e-7);
        CHECK(std::abs(jet.d_alpha_conj - 0.5 * Complex(px, py)) <= 1e-7);
    }
}

TEST_CASE("property: the generator equals the time derivative for sign +1") {
    Gen gen(33);
    for (int c = 0; c < kCases; ++c) {
        const auto st = random_state(gen);
        const double t = gen.uniform(0.1, 2 * kPi);
        const PhasePoint a{gen.uniform(-1, 1), gen.uniform(-1, 1)};
        const double h = 1e-4;
        const double dt =
            (evolved_distribution(a, st, t + h) - evolved_distribution(a, st, t - h)) / (2 * h);
        CHECK(std::abs(liouville_generator(st, a, t, Sign::Plus) - dt) <= 1e-6);
    }
}

TEST_CASE("property: transport along characteristics") {
    Gen gen(34);
    for (int c = 0; c < kCases; ++c) {
        const auto st = random_state(gen);
        const double t = gen.uniform(0.0, 2 * kPi);
        const PhasePoint b{gen.uniform(-1, 1), gen.uniform(-1, 1)};
        const PhasePoint moved = advect_point(b, st, t);
        CHECK(std::abs(evolved_distribution(moved, st, t) - initial_distribution(b, st)) <= 1e-12);
        // points move on circles
        CHECK(std::abs(std::abs(moved.value()) - std::abs(b.value())) <= 1e-15);
    }
}

TEST_CASE("property: equal radii advect by equal phase") {
    Gen gen(35);
    for (int c = 0; c < kCases; ++c) {
        const auto st = random_state(gen);
        const double t = gen.uniform(0.0, 2 * kPi);
        const double r = gen.uniform(0.05, 1.2);
        const PhasePoint b1{std::polar(r, gen.uniform(0, 2 * kPi))};
        const PhasePoint b2{std::polar(r, gen.uniform(0, 2 * kPi))};
        const Complex ph1 = advect_point(b1, st, t).value() / b1.value();
        const Complex ph2 = advect_point(b2, st, t).value() / b2.value();
        CHECK(std::abs(ph1 - ph2) <= 1e-14);
    }
}

TEST_CASE("property: distribution never exceeds one, co-moving peak is exactly one") {
    Gen gen(36);
    for (int c = 0; c < kCases; ++c) {
        const auto st = random_state(gen);
        const double t = gen.uniform(0.0, 4 * kPi);
        const PhasePoint a{gen.uniform(-1.5, 1.5), gen.uniform(-1.5, 1.5)};
        const double v = evolved_distribution(a, st, t);
        CHECK(v <= 1.0 + 1e-12);
        CHECK(v >= 0.0);
        CHECK(evolved_distribution(advect_point(st.center, st, t), st, t) == 1.0);
    }
}

TEST_CASE("undeformed limit of the evolved distribution") {
    const GaussianState ref = state_for(FrequencyProfile::undeformed());
    const GridSpec grid = GridSpec::square(64);
    for (const auto& prof : {FrequencyProfile::mu1(), FrequencyProfile::mu2()}) {
        const GaussianState st = state_for(prof, 1.0 - 1e-8);
        double err = 0.0;
        for (std::size_t j = 0; j < grid.ny; ++j) {
            for (std::size_t i = 0; i < grid.nx; ++i) {
                const PhasePoint a = grid.node(i, j);
                err = std::max(err, std::abs(evolved_distribution(a, st, kPi) -
                                             evolved_distribution(a, ref, kPi)));
            }
        }
        CHECK(err <= 1e-6);
    }
}

TEST_CASE("property: radial densities are annihilated by the generator") {
    Gen gen(37);
    for (int c = 0; c < kCases; ++c) {
        const PhasePoint a{gen.uniform(-1.5, 1.5), gen.uniform(-1.5, 1.5)};
        // g(|a|^2) has d/da = conj(a) g', d/dconj(a) = a g'
        const double gp = -std::exp(-a.action());
        const WirtingerJet jet{std::exp(-a.action()), std::conj(a.value()) * gp, a.value() * gp};
        for (auto sign : {Sign::Plus, Sign::Minus}) {
            CHECK(std::abs(apply_generator(gen.uniform(0.2, 3.0), a, jet, sign)) <= 1e-12);
        }
    }
}

TEST_CASE("PDE residual converges at second order over three halvings") {
    const GridSpec grid = GridSpec::square(64);
    for (const auto& prof : {FrequencyProfile::undeformed(), FrequencyProfile::mu1(),
                             FrequencyProfile::mu2(), FrequencyProfile::mu3(), FrequencyProfile::mu4()}) {
        GaussianState st = state_for(prof);
        if (prof.representation() == Representation::AlphaQ) st.center = {0.48, 0.0};
        double h = 1e-2;
        double prev = pde_residual(st, kPi / 4, grid, Sign::Plus, h).max;
        CAPTURE(to_string(prof.kind));
        for (int k = 0; k < 3; ++k) {
            h /= 2;
            const double cur = pde_residual(st, kPi / 4, grid, Sign::Plus, h).max;
            CHECK(prev / cur >= 3.5);
            CHECK(prev / cur <= 4.5);
            prev = cur;
        }
    }
}

TEST_CASE("reversed generator sign leaves a large residual") {
    const GridSpec grid = GridSpec::square(64);
    for (const auto& prof : {FrequencyProfile::mu1(), FrequencyProfile::mu2()}) {
        const GaussianState st = state_for(prof);
        CHECK(pde_residual(st, kPi / 4, grid, Sign::Plus, 1e-4).max <= 1e-6);
        CHECK(pde_residual(st, kPi / 4, grid, Sign::Minus, 1e-4).max >= 0.1);
    }
}

TEST_CASE("pde_residual validates its inputs") {
    const GaussianState st = state_for(FrequencyProfile::mu1());
    CHECK_THROWS_AS(pde_residual(st, 1.0, GridSpec::square(1), Sign::Plus, 1e-4), std::invalid_argument);
    CHECK_THROWS_AS(pde_residual(st, 1.0, GridSpec::square(8), Sign::Plus, 0.0), std::invalid_argument);
}

TEST_CASE("whorls: contour length grows for amplitude-dependent frequencies") {
    for (const auto& prof : {FrequencyProfile::mu1(), FrequencyProfile::mu2(),
                             FrequencyProfile::anharmonic()}) {
        const GaussianState st = state_for(prof);
        double prev = 0.0;
        CAPTURE(to_string(prof.kind));
        for (double tau : kTaus) {
            const auto trace = advect_contour({st.center, 0.5}, st, tau, 1024);
            CHECK(trace.closed);
            CHECK(trace.tau == doctest::Approx(tau));
            const double len = contour_length(trace);
            CHECK(len > prev);
            prev = len;
        }
    }
    const GaussianState und = state_for(FrequencyProfile::undeformed());
    const double base = contour_length(advect_contour({und.center, 0.5}, und, 0.0, 1024));
    for (double tau : kTaus) {
        const double len = contour_length(advect_contour({und.center, 0.5}, und, tau, 1024));
        CHECK(std::abs(len - base) / base <= 1e-9);
    }
}

TEST_CASE("refinement keeps neighbouring points within twice the seed spacing") {
    const GaussianState st = state_for(FrequencyProfile::anharmonic());
    const std::size_t n = 256;
    const auto trace = advect_contour({st.center, 0.5}, st, 2 * kPi, n);
    const double seed_chord = 2 * 0.5 * std::sin(kPi / n);
    CHECK(trace.points.size() > n);
    for (std::size_t k = 0; k < trace.points.size(); ++k) {
        const auto& a = trace.points[k];
        const auto& b = trace.points[(k + 1) % trace.points.size()];
        CHECK(std::abs(a.value() - b.value()) <= 2 * seed_chord * (1 + 1e-9));
    }
    AdvectOptions capped;
    capped.max_points = 300;
    CHECK(advect_contour({st.center, 0.5}, st, 2 * kPi, n, capped).points.size() <= 300);
}

TEST_CASE("contour argument checks") {
    const GaussianState st = state_for(FrequencyProfile::mu1());
    CHECK_THROWS_AS(advect_contour({st.center, 0.5}, st, 1.0, 7), std::invalid_argument);
    CHECK_THROWS_AS(advect_contour({st.center, 0.0}, st, 1.0, 64), std::invalid_argument);
    CHECK_THROWS_AS(contour_length(ContourTrace{{PhasePoint{}}, false, 0.0}), std::invalid_argument);
}
