#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "qwhorl/dynamics.hpp"

using namespace qwhorl;
using qwhorl::testing::Gen;
using qwhorl::testing::kCases;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// mpmath oracle: alpha(0) = 0.5, q = 0.5, mu1, tau = 2 pi.
constexpr double kEndRe = 0.46266619214491564;
constexpr double kEndIm = 0.18957846567087730;

const FrequencyProfile kProfiles[] = {FrequencyProfile::undeformed(), FrequencyProfile::mu1(),
                                      FrequencyProfile::mu2(),        FrequencyProfile::mu3(),
                                      FrequencyProfile::mu4(),        FrequencyProfile::anharmonic()};

Trajectory random_trajectory(Gen& gen) {
    const OscillatorParams p{gen.uniform(0.05, 0.95), 1.0, gen.uniform(0.5, 2.0)};
    const FrequencyProfile prof = kProfiles[gen.index(std::size(kProfiles))];
    const PhasePoint a{gen.uniform(-0.8, 0.8), gen.uniform(-0.8, 0.8)};
    return {a, prof, p, prof.representation()};
}

}  // namespace

TEST_CASE("closed-form endpoint matches the oracle") {
    const Trajectory tr{{0.5, 0.0}, FrequencyProfile::mu1(), OscillatorParams{0.5}};
    const PhasePoint end = evolve_exact(tr, kTwoPi);
    CHECK(std::abs(end.re() - kEndRe) <= 1e-14);
    CHECK(std::abs(end.im() - kEndIm) <= 1e-14);
}

TEST_CASE("property: t = 0 returns the initial point exactly") {
    Gen gen(21);
    for (int c = 0; c < kCases; ++c) {
        const auto tr = random_trajectory(gen);
        CHECK(evolve_exact(tr, 0.0) == tr.initial);
    }
}

TEST_CASE("property: evolution composes as a rotation") {
    Gen gen(22);
    for (int c = 0; c < kCases; ++c) {
        const auto tr = random_trajectory(gen);
        const double t1 = gen.uniform(0.0, 3.0);
        const double t2 = gen.uniform(0.0, 3.0);
        const PhasePoint mid = evolve_exact(tr, t1);
        Trajectory from_mid = tr;
        from_mid.initial = mid;
        const PhasePoint composed = evolve_exact(from_mid, t2);
        const Complex rotated =
            tr.initial.value() * std::polar(1.0, -tr.frozen_frequency() * (t1 + t2));
        CHECK(std::abs(composed.value() - rotated) <= 1e-14);
        CHECK(std::abs(evolve_exact(tr, t1 + t2).value() - rotated) <= 1e-14);
    }
}

TEST_CASE("property: undeformed motion is 2 pi / omega periodic") {
    Gen gen(23);
    for (int c = 0; c < kCases; ++c) {
        const OscillatorParams p{0.5, 1.0, gen.uniform(0.5, 2.0)};
        const Trajectory tr{{gen.uniform(-1, 1), gen.uniform(-1, 1)}, FrequencyProfile::undeformed(), p};
        CHECK(std::abs(evolve_exact(tr, kTwoPi / p.omega()).value() - tr.initial.value()) <= 1e-13);
    }
}

TEST_CASE("property: RK4 conserves |alpha|^2 and tracks the closed form") {
    Gen gen(24);
    for (int c = 0; c < 40; ++c) {
        const auto tr = random_trajectory(gen);
        const double t = kTwoPi / tr.params.omega();
        const PhasePoint rk = integrate_eom(tr, t, 10000);
        CHECK(std::abs(rk.value() - evolve_exact(tr, t).value()) <= 1e-8);
        CHECK(std::abs(rk.action() - tr.initial.action()) <= 1e-8);
        CHECK(conserved_action(tr, t) == doctest::Approx(tr.initial.action()).epsilon(1e-14));
    }
}

TEST_CASE("RK4 is fourth order") {
    for (const auto& prof : kProfiles) {
        const Trajectory tr{{0.5, 0.0}, prof, OscillatorParams{0.5}, prof.representation()};
        const Complex exact = evolve_exact(tr, kTwoPi).value();
        const double e1 = std::abs(integrate_eom(tr, kTwoPi, 100).value() - exact);
        const double e2 = std::abs(integrate_eom(tr, kTwoPi, 200).value() - exact);
        const double ratio = e1 / e2;
        CAPTURE(to_string(prof.kind));
        CHECK(ratio >= 12.0);
        CHECK(ratio <= 20.0);
    }
}

TEST_CASE("integrate_eom rejects zero steps") {
    const Trajectory tr{{0.5, 0.0}, FrequencyProfile::mu1(), OscillatorParams{0.5}};
    CHECK_THROWS_AS(integrate_eom(tr, 1.0, 0), std::invalid_argument);
}
