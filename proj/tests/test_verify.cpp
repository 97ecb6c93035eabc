#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "qwhorl/verify.hpp"

using namespace qwhorl;
using qwhorl::testing::Gen;

namespace {

const double kSteps[] = {1e-4, 1e-5, 1e-6};
const DeformationKind kKinds[] = {DeformationKind::Undeformed, DeformationKind::QType1,
                                  DeformationKind::QType2};

ScalarField polynomial_field(double a, double b, double c) {
    return {"poly", [=](double x, double p) {
                return Complex(a * x * x * p + b * std::sin(p), c * x * p * p);
            }};
}

}  // namespace

TEST_CASE("closed forms against oracle values") {
    const OscillatorParams p{0.5};
    const Complex b1 = deformed_bracket_closed_form(0.23220713316600435, p, DeformationKind::QType1);
    const Complex b2 = deformed_bracket_closed_form(0.31820716949257091, p, DeformationKind::QType2);
    CHECK(std::abs(b1 - Complex(0.0, -0.93810702549469331)) <= 1e-14);
    CHECK(std::abs(b2 - Complex(0.0, -1.1657299587521544)) <= 1e-14);
    CHECK(std::abs(f_log_derivative_closed_form(0.25, p, DeformationKind::QType1) -
                   0.0048137071625694893) <= 1e-15);
    CHECK(std::abs(f_log_derivative_closed_form(0.49, p, DeformationKind::QType2) -
                   -0.086855720928738860) <= 1e-15);
}

TEST_CASE("canonical bracket of x and p is one") {
    const auto b = poisson_bracket_fd(position_field(), momentum_field(), {0.3, -0.7});
    CHECK(std::abs(b - Complex(1.0, 0.0)) <= 1e-10);
}

TEST_CASE("property: bracket antisymmetry") {
    Gen gen(41);
    for (int c = 0; c < testing::kCases; ++c) {
        const auto f = polynomial_field(gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1));
        const auto g = polynomial_field(gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1));
        const CanonicalPoint at{gen.uniform(-2, 2), gen.uniform(-2, 2)};
        CHECK(std::abs(poisson_bracket_fd(f, g, at) + poisson_bracket_fd(g, f, at)) <= 1e-10);
    }
}

TEST_CASE("annulus sampling is seeded and stays in range") {
    const auto a = sample_annulus(kDefaultSeed, 500);
    const auto b = sample_annulus(kDefaultSeed, 500);
    CHECK(a == b);
    CHECK(sample_annulus(kDefaultSeed + 1, 500) != a);
    for (const auto& pt : a) {
        const double r = std::abs(pt.value());
        CHECK(r >= 0.1);
        CHECK(r <= 1.5);
    }
}

TEST_CASE("{alpha, alpha*} = -i/hbar at 100 random points") {
    const OscillatorParams p{0.5};
    CHECK(verify_alpha_bracket(p, sample_annulus(kDefaultSeed, 100)).measured <= 1e-8);
    const OscillatorParams p2{0.5, 2.0, 1.5, 0.7};
    CHECK(verify_alpha_bracket(p2, sample_annulus(7, 100)).passed());
}

TEST_CASE("FD deformed bracket converges to the closed form at second order") {
    const OscillatorParams p{0.5};
    const PhasePoint at{0.6, -0.3};
    for (auto kind : {DeformationKind::QType1, DeformationKind::QType2}) {
        double prev = verify_alphaq_bracket(p, kind, at, 1e-2).measured;
        for (double h : {5e-3, 2.5e-3}) {
            const double cur = verify_alphaq_bracket(p, kind, at, h).measured;
            CHECK(prev / cur == doctest::Approx(4.0).epsilon(0.1));
            prev = cur;
        }
    }
}

TEST_CASE("property: every check keeps its verdict for h in {1e-4, 1e-5, 1e-6}") {
    Gen gen(42);
    const OscillatorParams p{0.5};
    const auto points = sample_annulus(kDefaultSeed, 20);
    for (double h : kSteps) {
        CAPTURE(h);
        CHECK(verify_alpha_bracket(p, points, h).passed());
        for (auto kind : kKinds) {
            const PhasePoint at = points[gen.index(points.size())];
            CHECK(verify_chain_identities(p, kind, at, h).passed());
            CHECK(verify_chain_identities(p, kind, at, radial_probe(), h).passed());
            CHECK(verify_constants_of_motion(p, kind, kDefaultSeed, h).passed());
            if (kind != DeformationKind::Undeformed) {
                CHECK(verify_alphaq_bracket(p, kind, at, h).passed());
                CHECK(verify_f_derivative_identity(p, kind, at, h).passed());
            }
        }
    }
}

TEST_CASE("f-derivative identity is skipped near the origin") {
    const auto r = verify_f_derivative_identity(OscillatorParams{0.5}, DeformationKind::QType1, {1e-5, 0.0});
    CHECK(r.status == CheckStatus::NotApplicable);
    CHECK(r.passed());
}

TEST_CASE("judge honours the bound direction") {
    CHECK(VerificationReport::judge("a", 1e-9, 1e-8).status == CheckStatus::Pass);
    CHECK(VerificationReport::judge("a", 1e-7, 1e-8).status == CheckStatus::Fail);
    CHECK(VerificationReport::judge("a", 1e-8, 1e-8).status == CheckStatus::Pass);
    CHECK(VerificationReport::judge("b", 0.5, 0.1, Bound::AtLeast).status == CheckStatus::Pass);
    CHECK(VerificationReport::judge("b", 0.05, 0.1, Bound::AtLeast).status == CheckStatus::Fail);
    CHECK(VerificationReport::judge("c", std::nan(""), 1.0).status == CheckStatus::Fail);
}

TEST_CASE("full suite passes, is deterministic and discriminates the sign") {
    const OscillatorParams p{0.5};
    const auto a = run_full_suite(p);
    CHECK(all_passed(a));
    const auto b = run_full_suite(p);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].name == b[k].name);
        CHECK(a[k].measured == b[k].measured);
    }
    SuiteOptions flipped;
    flipped.sign = Sign::Minus;
    CHECK_FALSE(all_passed(run_full_suite(p, flipped)));
}

TEST_CASE("suite also passes for q in [0.25, 0.95]") {
    for (double q : {0.25, 0.8, 0.95}) CHECK(all_passed(run_full_suite(OscillatorParams{q})));
}
