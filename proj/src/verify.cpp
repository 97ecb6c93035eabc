#include "qwhorl/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <utility>

#include "qwhorl/dynamics.hpp"

namespace qwhorl {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

std::string fmt_error(const char* label, double value) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s=%.3e", label, value);
    return buf;
}

// d[s]_q/ds written out directly, independent of the core frequency laws.
double hamiltonian_slope(double s, const OscillatorParams& params, DeformationKind kind) {
    const double lam = params.lambda();
    switch (kind) {
        case DeformationKind::Undeformed: return 1.0;
        case DeformationKind::QType1: return lam * std::cosh(lam * s) / std::sinh(lam);
        case DeformationKind::QType2: return lam * std::exp(lam * s) / (std::exp(lam) - 1.0);
    }
    return 0.0;
}

PhasePoint alpha_at(double x, double p, const OscillatorParams& params) {
    return canonical_to_complex(x, p, params);
}

ScalarField compose(std::string name, std::function<Complex(PhasePoint)> fn,
                    const OscillatorParams& params) {
    return {std::move(name),
            [fn = std::move(fn), params](double x, double p) { return fn(alpha_at(x, p, params)); }};
}

ScalarField density_field(const DensityProbe& probe, const OscillatorParams& params,
                          std::optional<DeformationKind> deformed) {
    return {probe.name, [jet = probe.jet, params, deformed](double x, double p) {
                PhasePoint a = alpha_at(x, p, params);
                if (deformed) a = deform(a, params, *deformed);
                return Complex(jet(a).value, 0.0);
            }};
}

double uniform01(std::mt19937_64& gen) {
    // 53 random mantissa bits; identical on every platform for a given seed.
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

template <class Fn>
double max_over(const std::vector<PhasePoint>& points, Fn&& fn) {
    double worst = 0.0;
    for (const auto& pt : points) worst = std::max(worst, fn(pt));
    return worst;
}

double max_over_reports(const std::vector<PhasePoint>& points,
                        const std::function<VerificationReport(PhasePoint)>& check) {
    return max_over(points, [&](PhasePoint pt) { return check(pt).measured; });
}

GaussianState reference_state(const OscillatorParams& params, const FrequencyProfile& profile,
                          DeformationKind kind) {
    GaussianState state;
    state.params = params;
    state.profile = profile;
    state.representation = profile.representation();
    state.center = state.representation == Representation::AlphaQ
                       ? deform(PhasePoint{0.5, 0.0}, params, kind)
                       : PhasePoint{0.5, 0.0};
    return state;
}

DeformationKind kind_for(const FrequencyProfile& profile) {
    switch (profile.kind) {
        case ProfileKind::Mu1:
        case ProfileKind::Mu3: return DeformationKind::QType1;
        case ProfileKind::Mu2:
        case ProfileKind::Mu4: return DeformationKind::QType2;
        default: return DeformationKind::Undeformed;
    }
}

std::vector<FrequencyProfile> all_profiles() {
    return {FrequencyProfile::undeformed(), FrequencyProfile::mu1(),        FrequencyProfile::mu2(),
            FrequencyProfile::mu3(),        FrequencyProfile::mu4(),        FrequencyProfile::anharmonic(1.0)};
}

}  // namespace

VerificationReport VerificationReport::judge(std::string name, double measured, double tolerance,
                                             Bound bound, std::string note) {
    VerificationReport r;
    r.name = std::move(name);
    r.measured = measured;
    r.tolerance = tolerance;
    r.bound = bound;
    const bool ok = bound == Bound::AtMost ? measured <= tolerance : measured >= tolerance;
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.note = std::move(note);
    return r;
}

VerificationReport VerificationReport::not_applicable(std::string name, std::string note) {
    VerificationReport r;
    r.name = std::move(name);
    r.status = CheckStatus::NotApplicable;
    r.note = std::move(note);
    return r;
}

DensityProbe gaussian_probe(const GaussianState& state, double t) {
    return {"gaussian", [state, t](PhasePoint z) { return evolved_jet(z, state, t); }};
}

DensityProbe radial_probe() {
    return {"radial", [](PhasePoint z) {
                const double v = std::exp(-z.action());
                // d/dz exp(-z z*) = -z* exp(-z z*)
                const Complex d = -v * std::conj(z.value());
                return WirtingerJet{v, d, std::conj(d)};
            }};
}

Complex poisson_bracket_fd(const ScalarField& f, const ScalarField& g, CanonicalPoint at, double h) {
    const double x = at.position;
    const double p = at.momentum;
    const double inv = 1.0 / (2.0 * h);
    const Complex fx = (f.eval(x + h, p) - f.eval(x - h, p)) * inv;
    const Complex fp = (f.eval(x, p + h) - f.eval(x, p - h)) * inv;
    const Complex gx = (g.eval(x + h, p) - g.eval(x - h, p)) * inv;
    const Complex gp = (g.eval(x, p + h) - g.eval(x, p - h)) * inv;
    return fx * gp - fp * gx;
}

ScalarField position_field() {
    return {"x", [](double x, double) { return Complex(x, 0.0); }};
}

ScalarField momentum_field() {
    return {"p", [](double, double p) { return Complex(p, 0.0); }};
}

ScalarField alpha_field(const OscillatorParams& params) {
    return compose("alpha", [](PhasePoint a) { return a.value(); }, params);
}

ScalarField alpha_conj_field(const OscillatorParams& params) {
    return compose("alpha*", [](PhasePoint a) { return std::conj(a.value()); }, params);
}

ScalarField alphaq_field(const OscillatorParams& params, DeformationKind kind) {
    return compose("alpha_q", [params, kind](PhasePoint a) { return deform(a, params, kind).value(); },
                   params);
}

ScalarField alphaq_conj_field(const OscillatorParams& params, DeformationKind kind) {
    return compose(
        "alpha_q*", [params, kind](PhasePoint a) { return std::conj(deform(a, params, kind).value()); },
        params);
}

ScalarField action_field(const OscillatorParams& params) {
    return compose("|alpha|^2", [](PhasePoint a) { return Complex(a.action(), 0.0); }, params);
}

ScalarField alphaq_action_field(const OscillatorParams& params, DeformationKind kind) {
    return compose(
        "|alpha_q|^2",
        [params, kind](PhasePoint a) { return Complex(deform(a, params, kind).action(), 0.0); }, params);
}

ScalarField hamiltonian_alpha_field(const OscillatorParams& params, DeformationKind kind) {
    return compose(
        "H_q(alpha)",
        [params, kind](PhasePoint a) { return Complex(hamiltonian_alpha(a, params, kind).value, 0.0); },
        params);
}

ScalarField hamiltonian_alphaq_field(const OscillatorParams& params, DeformationKind kind) {
    return compose("H_q(alpha_q)",
                   [params, kind](PhasePoint a) {
                       return Complex(hamiltonian_alphaq(deform(a, params, kind), params).value, 0.0);
                   },
                   params);
}

Complex deformed_bracket_closed_form(double s_q, const OscillatorParams& params,
                                     DeformationKind kind) {
    const Complex prefactor = -kI / params.hbar();
    const double lam = params.lambda();
    switch (kind) {
        case DeformationKind::Undeformed:
            return prefactor;
        case DeformationKind::QType1: {
            const double sh = std::sinh(lam);
            return prefactor * (lam * std::sqrt(1.0 + s_q * s_q * sh * sh) / sh);
        }
        case DeformationKind::QType2: {
            const double e = std::exp(lam);
            return prefactor * (lam * (1.0 - s_q * (1.0 - e)) / (e - 1.0));
        }
    }
    return prefactor;
}

double f_log_derivative_closed_form(double s, const OscillatorParams& params, DeformationKind kind) {
    const double f = deformation_f(s, params, kind);
    return (hamiltonian_slope(s, params, kind) - f * f) / (2.0 * f);
}

std::vector<PhasePoint> sample_annulus(std::uint64_t seed, std::size_t count, double r_min,
                                       double r_max) {
    std::mt19937_64 gen(seed);
    std::vector<PhasePoint> points;
    points.reserve(count);
    const double a2 = r_min * r_min;
    const double b2 = r_max * r_max;
    for (std::size_t k = 0; k < count; ++k) {
        // Area-uniform radius.
        const double r = std::sqrt(a2 + (b2 - a2) * uniform01(gen));
        const double phi = 2.0 * kPi * uniform01(gen);
        points.emplace_back(std::polar(r, phi));
    }
    return points;
}

VerificationReport verify_alpha_bracket(const OscillatorParams& params,
                                        const std::vector<PhasePoint>& points, double h) {
    const auto a = alpha_field(params);
    const auto ac = alpha_conj_field(params);
    const Complex expected = -kI / params.hbar();
    const double err = max_over(points, [&](PhasePoint pt) {
        return std::abs(poisson_bracket_fd(a, ac, complex_to_canonical(pt, params), h) - expected);
    });
    return VerificationReport::judge("bracket {alpha,alpha*} = -i/hbar", err, 1e-8);
}

VerificationReport verify_alphaq_bracket(const OscillatorParams& params, DeformationKind kind,
                                         PhasePoint at, double h) {
    const Complex fd = poisson_bracket_fd(alphaq_field(params, kind), alphaq_conj_field(params, kind),
                                          complex_to_canonical(at, params), h);
    const double s_q = deform(at, params, kind).action();
    const Complex closed = deformed_bracket_closed_form(s_q, params, kind);
    return VerificationReport::judge(
        std::string("deformed bracket {alpha_q,alpha_q*} ") + std::string(to_string(kind)),
        std::abs(fd - closed), 1e-6);
}

VerificationReport verify_chain_identities(const OscillatorParams& params, DeformationKind kind,
                                           PhasePoint at, const DensityProbe& probe,
                                           const DensityProbe& probe_q, double h) {
    const CanonicalPoint c = complex_to_canonical(at, params);
    const double hw = params.hbar() * params.omega();
    const Complex a = at.value();
    const double s = at.action();
    const PhasePoint aq_pt = deform(at, params, kind);
    const Complex aq = aq_pt.value();
    const Complex bracket_alpha = -kI / params.hbar();
    const Complex bracket_q = deformed_bracket_closed_form(aq_pt.action(), params, kind);
    const double slope = hamiltonian_slope(s, params, kind);

    // {alpha, H_q} = {alpha, alpha*} dH_q/dalpha*
    const Complex lhs_a = poisson_bracket_fd(alpha_field(params), hamiltonian_alpha_field(params, kind), c, h);
    const Complex rhs_a = bracket_alpha * (hw * slope * a);

    // {alpha_q, H_q} = {alpha_q, alpha_q*} dH_q/dalpha_q*
    const Complex lhs_aq =
        poisson_bracket_fd(alphaq_field(params, kind), hamiltonian_alphaq_field(params, kind), c, h);
    const Complex rhs_aq = bracket_q * (hw * aq);

    // {H_q, P} = {alpha, alpha*} (dH/dalpha dP/dalpha* - dH/dalpha* dP/dalpha)
    const WirtingerJet jet = probe.jet(at);
    const Complex lhs_p = poisson_bracket_fd(hamiltonian_alpha_field(params, kind),
                                             density_field(probe, params, std::nullopt), c, h);
    const Complex inner_p =
        hw * slope * (std::conj(a) * jet.d_alpha_conj - a * jet.d_alpha);
    const Complex rhs_p = bracket_alpha * inner_p;

    // Same in the deformed plane with P evaluated at alpha_q.
    const WirtingerJet jet_q = probe_q.jet(aq_pt);
    const Complex lhs_pq = poisson_bracket_fd(hamiltonian_alphaq_field(params, kind),
                                              density_field(probe_q, params, kind), c, h);
    const Complex inner_pq = hw * (std::conj(aq) * jet_q.d_alpha_conj - aq * jet_q.d_alpha);
    const Complex rhs_pq = bracket_q * inner_pq;

    const std::array<double, 4> errs{std::abs(lhs_a - rhs_a), std::abs(lhs_aq - rhs_aq),
                                     std::abs(lhs_p - rhs_p), std::abs(lhs_pq - rhs_pq)};
    const std::string note = fmt_error("alpha_H", errs[0]) + " " + fmt_error("alphaq_H", errs[1]) +
                             " " + fmt_error("H_P", errs[2]) + " " + fmt_error("Hq_Pq", errs[3]);
    return VerificationReport::judge("chain identities " + std::string(to_string(kind)) + " (" +
                                         probe.name + " probe)",
                                     *std::max_element(errs.begin(), errs.end()), 1e-6, Bound::AtMost,
                                     note);
}

VerificationReport verify_chain_identities(const OscillatorParams& params, DeformationKind kind,
                                           PhasePoint at, double h) {
    const GaussianState state = reference_state(params, alpha_profile_for(kind), kind);
    const GaussianState state_q = reference_state(params, alphaq_profile_for(kind), kind);
    return verify_chain_identities(params, kind, at, gaussian_probe(state, kPi / 4.0),
                                   gaussian_probe(state_q, kPi / 4.0), h);
}

VerificationReport verify_chain_identities(const OscillatorParams& params, DeformationKind kind,
                                           PhasePoint at, const DensityProbe& probe, double h) {
    return verify_chain_identities(params, kind, at, probe, probe, h);
}

VerificationReport verify_f_derivative_identity(const OscillatorParams& params,
                                                DeformationKind kind, PhasePoint at, double h) {
    const std::string name = "alpha df/dalpha identity " + std::string(to_string(kind));
    if (std::abs(at.value()) <= 1e-4) {
        return VerificationReport::not_applicable(name, "|alpha| <= 1e-4");
    }
    const auto f_at = [&](double x, double y) {
        return deformation_f(x * x + y * y, params, kind);
    };
    const double x = at.re();
    const double y = at.im();
    const double fx = (f_at(x + h, y) - f_at(x - h, y)) / (2.0 * h);
    const double fy = (f_at(x, y + h) - f_at(x, y - h)) / (2.0 * h);
    const Complex d_alpha = 0.5 * Complex(fx, -fy);
    const Complex d_alpha_conj = 0.5 * Complex(fx, fy);
    const Complex lhs = at.value() * d_alpha;
    const Complex rhs = std::conj(at.value()) * d_alpha_conj;
    const double closed = f_log_derivative_closed_form(at.action(), params, kind);
    const double err = std::max(std::abs(lhs - closed), std::abs(rhs - closed));
    return VerificationReport::judge(name, err, 1e-6);
}

VerificationReport verify_constants_of_motion(const OscillatorParams& params, DeformationKind kind,
                                              std::uint64_t seed, double h) {
    const auto points = sample_annulus(seed, 100);
    const auto s = action_field(params);
    const auto ham = hamiltonian_alpha_field(params, kind);
    const auto s_q = alphaq_action_field(params, kind);
    const auto ham_q = hamiltonian_alphaq_field(params, kind);
    const double err = max_over(points, [&](PhasePoint pt) {
        const auto c = complex_to_canonical(pt, params);
        return std::max(std::abs(poisson_bracket_fd(s, ham, c, h)),
                        std::abs(poisson_bracket_fd(s_q, ham_q, c, h)));
    });
    return VerificationReport::judge("constants of motion " + std::string(to_string(kind)), err, 1e-8);
}

std::vector<VerificationReport> run_full_suite(const OscillatorParams& params,
                                               const SuiteOptions& options) {
    std::vector<VerificationReport> out;
    const double h = options.h;
    const auto points = sample_annulus(options.seed, options.samples);
    const std::array<DeformationKind, 2> qkinds{DeformationKind::QType1, DeformationKind::QType2};
    const std::array<DeformationKind, 3> kinds{DeformationKind::Undeformed, DeformationKind::QType1,
                                               DeformationKind::QType2};

    // Canonical structure.
    {
        const double err = max_over(points, [&](PhasePoint pt) {
            return std::abs(poisson_bracket_fd(position_field(), momentum_field(),
                                               complex_to_canonical(pt, params), h) -
                            1.0);
        });
        out.push_back(VerificationReport::judge("canonical bracket {x,p} = 1", err, 1e-10));
    }
    out.push_back(verify_alpha_bracket(params, points, h));
    {
        const auto a = alpha_field(params);
        const auto ham = hamiltonian_alpha_field(params, DeformationKind::QType1);
        const double err = max_over(points, [&](PhasePoint pt) {
            const auto c = complex_to_canonical(pt, params);
            return std::abs(poisson_bracket_fd(a, ham, c, h) + poisson_bracket_fd(ham, a, c, h));
        });
        out.push_back(VerificationReport::judge("bracket antisymmetry", err, 1e-10));
    }

    for (auto kind : qkinds) {
        const auto name = verify_alphaq_bracket(params, kind, points.front(), h).name;
        const double err = max_over_reports(
            points, [&](PhasePoint pt) { return verify_alphaq_bracket(params, kind, pt, h); });
        out.push_back(VerificationReport::judge(name, err, 1e-6));
    }
    for (auto kind : kinds) {
        const auto name = verify_chain_identities(params, kind, points.front(), h).name;
        const double err = max_over_reports(
            points, [&](PhasePoint pt) { return verify_chain_identities(params, kind, pt, h); });
        out.push_back(VerificationReport::judge(name, err, 1e-6));
    }
    {
        const double err = max_over_reports(points, [&](PhasePoint pt) {
            return verify_chain_identities(params, DeformationKind::QType1, pt, radial_probe(), h);
        });
        out.push_back(VerificationReport::judge("chain identities, radial density", err, 1e-6));
    }
    for (auto kind : qkinds) {
        const auto name = verify_f_derivative_identity(params, kind, points.front(), h).name;
        const double err = max_over_reports(
            points, [&](PhasePoint pt) { return verify_f_derivative_identity(params, kind, pt, h); });
        out.push_back(VerificationReport::judge(name, err, 1e-6));
    }
    for (auto kind : kinds) out.push_back(verify_constants_of_motion(params, kind, options.seed, h));

    // Kernel identities.
    {
        double err = 0.0;
        for (int k = 0; k <= 200; ++k) {
            const double s = 2.0 * k / 200.0;
            const double w1 = frequency(s, params, FrequencyProfile::mu1());
            const double w2 = frequency(s, params, FrequencyProfile::mu2());
            const double w3 = frequency(q_number(s, params, DeformationKind::QType1), params,
                                        FrequencyProfile::mu3());
            const double w4 = frequency(q_number(s, params, DeformationKind::QType2), params,
                                        FrequencyProfile::mu4());
            err = std::max({err, std::abs(w3 - w1) / w1, std::abs(w4 - w2) / w2});
        }
        out.push_back(VerificationReport::judge("cross-representation frequencies", err, 1e-12));
    }
    {
        double err = 0.0;
        for (auto kind : qkinds) {
            err = std::max(err, max_over(points, [&](PhasePoint pt) {
                               return std::abs(hamiltonian_alpha(pt, params, kind).value -
                                               hamiltonian_alphaq(deform(pt, params, kind), params).value);
                           }));
        }
        out.push_back(VerificationReport::judge("energy consistency across representations", err, 1e-13));
    }
    {
        double err = 0.0;
        for (auto kind : qkinds) {
            err = std::max(err, std::abs(deformation_f(1e-9, params, kind) - deformation_f(0.0, params, kind)));
        }
        out.push_back(VerificationReport::judge("f continuity at the origin", err, 1e-8));
    }

    // Trajectories.
    {
        const double t = 2.0 * kPi / params.omega();
        double end_err = 0.0;
        double drift = 0.0;
        for (const auto& profile : all_profiles()) {
            const auto kind = kind_for(profile);
            const GaussianState st = reference_state(params, profile, kind);
            const Trajectory traj{st.center, profile, params, st.representation};
            const PhasePoint exact = evolve_exact(traj, t);
            const PhasePoint rk = integrate_eom(traj, t, 10000);
            end_err = std::max(end_err, std::abs(exact.value() - rk.value()));
            drift = std::max(drift, std::abs(rk.action() - traj.initial.action()));
            if (st.representation == Representation::Alpha) {
                drift = std::max(drift, std::abs(hamiltonian_alpha(rk, params, kind).value -
                                                 hamiltonian_alpha(traj.initial, params, kind).value));
            } else {
                drift = std::max(drift, std::abs(hamiltonian_alphaq(rk, params).value -
                                                 hamiltonian_alphaq(traj.initial, params).value));
            }
        }
        out.push_back(VerificationReport::judge("RK4 vs closed-form trajectory", end_err, 1e-8));
        out.push_back(VerificationReport::judge("RK4 action and energy drift", drift, 1e-8));

        const Trajectory traj{PhasePoint{0.5, 0.0}, FrequencyProfile::mu1(), params, Representation::Alpha};
        const PhasePoint exact = evolve_exact(traj, t);
        const double e1 = std::abs(integrate_eom(traj, t, 100).value() - exact.value());
        const double e2 = std::abs(integrate_eom(traj, t, 200).value() - exact.value());
        const double ratio = e1 / e2;
        auto r = VerificationReport::judge("RK4 step-halving ratio near 16", std::abs(ratio - 16.0), 4.0,
                                           Bound::AtMost, fmt_error("ratio", ratio));
        r.order = std::log2(ratio);
        out.push_back(r);
    }

    // Transport.
    {
        double err = 0.0;
        double peak_err = 0.0;
        for (const auto& profile : all_profiles()) {
            const GaussianState st = reference_state(params, profile, kind_for(profile));
            for (int k = 1; k <= 4; ++k) {
                const double t = k * kPi / 2.0 / params.omega();
                for (int n = 0; n < 4096; ++n) {
                    const PhasePoint seed(st.center.value() + std::polar(0.5, 2.0 * kPi * n / 4096.0));
                    const PhasePoint moved = advect_point(seed, st, t);
                    err = std::max(err, std::abs(evolved_distribution(moved, st, t) -
                                                 initial_distribution(seed, st)));
                }
                const Trajectory traj{st.center, profile, params, st.representation};
                peak_err = std::max(peak_err,
                                    std::abs(evolved_distribution(evolve_exact(traj, t), st, t) - 1.0));
            }
        }
        out.push_back(VerificationReport::judge("transport identity along characteristics", err, 1e-12));
        out.push_back(VerificationReport::judge("co-moving peak stays exactly 1", peak_err, 0.0));
    }
    {
        const DensityProbe radial = radial_probe();
        const GaussianState st = reference_state(params, FrequencyProfile::mu1(), DeformationKind::QType1);
        const double err = max_over(points, [&](PhasePoint pt) {
            return std::abs(apply_generator(frequency(pt.action(), params, st.profile), pt,
                                            radial.jet(pt), Sign::Plus));
        });
        out.push_back(VerificationReport::judge("generator annihilates radial densities", err, 1e-12));
    }

    // Liouville residual.
    {
        const GridSpec grid = GridSpec::square(64);
        const double t = kPi / 4.0 / params.omega();
        double worst = 0.0;
        for (const auto& profile : {FrequencyProfile::undeformed(), FrequencyProfile::mu1(),
                                    FrequencyProfile::mu2()}) {
            const GaussianState st = reference_state(params, profile, kind_for(profile));
            worst = std::max(worst, pde_residual(st, t, grid, options.sign, 1e-4).max);
        }
        const std::string sign_note = options.sign == Sign::Plus ? "sign +1" : "sign -1";
        out.push_back(VerificationReport::judge("Liouville residual of evolved density", worst, 1e-6,
                                                Bound::AtMost, sign_note));

        const GaussianState st = reference_state(params, FrequencyProfile::mu1(), DeformationKind::QType1);
        const double r1 = pde_residual(st, t, grid, Sign::Plus, 1e-4).max;
        const double r2 = pde_residual(st, t, grid, Sign::Plus, 5e-5).max;
        auto conv = VerificationReport::judge("Liouville residual second-order convergence",
                                              std::abs(r1 / r2 - 4.0), 0.5, Bound::AtMost,
                                              fmt_error("ratio", r1 / r2));
        conv.order = std::log2(r1 / r2);
        out.push_back(conv);

        const GaussianState undeformed =
            reference_state(params, FrequencyProfile::undeformed(), DeformationKind::Undeformed);
        const double reversed = pde_residual(undeformed, t, grid, Sign::Minus, 1e-4).max;
        out.push_back(VerificationReport::judge(
            "reversed-sign generator rejected", reversed, 0.1, Bound::AtLeast,
            "sign -1 is the discriminated branch: its residual must stay >= 0.1"));
    }

    return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

}  // namespace qwhorl
