#pragma once

// Numerical certification of the bracket algebra behind the q-deformed
// Liouville equation. Every check compares a finite-difference Poisson bracket
// taken in the canonical (x, p) variables against a closed form written in the
// complex variables, and records the outcome as a VerificationReport.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qwhorl/core.hpp"
#include "qwhorl/liouville.hpp"

namespace qwhorl {

inline constexpr double kDefaultFdStep = 1e-5;
inline constexpr std::uint64_t kDefaultSeed = 20150917;

// A smooth complex-valued function of the canonical pair (position, momentum).
struct ScalarField {
    std::string name;
    std::function<Complex(double position, double momentum)> eval;
};

enum class CheckStatus { Pass, Fail, NotApplicable };

// AtMost: pass <=> measured <= tolerance. AtLeast marks a discrimination check
// that must stay away from zero: pass <=> measured >= tolerance.
enum class Bound { AtMost, AtLeast };

struct VerificationReport {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    Bound bound = Bound::AtMost;
    CheckStatus status = CheckStatus::Fail;
    std::optional<double> order;  // convergence order estimate, when measured
    std::string note;

    bool passed() const { return status != CheckStatus::Fail; }

    static VerificationReport judge(std::string name, double measured, double tolerance,
                                    Bound bound = Bound::AtMost, std::string note = {});
    static VerificationReport not_applicable(std::string name, std::string note);
};

// A real density probe: value and Wirtinger derivatives as a function of the
// point in whichever complex plane it is evaluated in.
struct DensityProbe {
    std::string name;
    std::function<WirtingerJet(PhasePoint)> jet;
};

DensityProbe gaussian_probe(const GaussianState& state, double t);
DensityProbe radial_probe();  // exp(-|z|^2), annihilated by the Liouville generator

// {F, G} = dF/dx dG/dp - dF/dp dG/dx by centred differences.
Complex poisson_bracket_fd(const ScalarField& f, const ScalarField& g, CanonicalPoint at,
                           double h = kDefaultFdStep);

// Canonical-coordinate views of the complex quantities.
ScalarField position_field();
ScalarField momentum_field();
ScalarField alpha_field(const OscillatorParams& params);
ScalarField alpha_conj_field(const OscillatorParams& params);
ScalarField alphaq_field(const OscillatorParams& params, DeformationKind kind);
ScalarField alphaq_conj_field(const OscillatorParams& params, DeformationKind kind);
ScalarField action_field(const OscillatorParams& params);  // |alpha|^2
ScalarField alphaq_action_field(const OscillatorParams& params, DeformationKind kind);
ScalarField hamiltonian_alpha_field(const OscillatorParams& params, DeformationKind kind);
ScalarField hamiltonian_alphaq_field(const OscillatorParams& params, DeformationKind kind);

// Closed form of {alpha_q, alpha_q*} as a function of s_q = |alpha_q|^2:
// -(i/hbar) lambda sqrt(1 + s_q^2 sinh^2 lambda) / sinh lambda      (type1)
// -(i/hbar) lambda [1 - s_q (1 - e^lambda)] / (e^lambda - 1)        (type2)
Complex deformed_bracket_closed_form(double s_q, const OscillatorParams& params,
                                     DeformationKind kind);

// Closed form of alpha df/dalpha = alpha* df/dalpha* = (1/2f)(Omega_{1,2}/omega - f^2).
double f_log_derivative_closed_form(double s, const OscillatorParams& params, DeformationKind kind);

// Fixed-seed uniform samples from the annulus 0.1 <= |alpha| <= 1.5.
std::vector<PhasePoint> sample_annulus(std::uint64_t seed, std::size_t count,
                                       double r_min = 0.1, double r_max = 1.5);

VerificationReport verify_alpha_bracket(const OscillatorParams& params,
                                        const std::vector<PhasePoint>& points,
                                        double h = kDefaultFdStep);

VerificationReport verify_alphaq_bracket(const OscillatorParams& params, DeformationKind kind,
                                         PhasePoint at, double h = kDefaultFdStep);

// Chain-rule factorisations of the canonical bracket through the complex variables:
//   {alpha, H_q}     = {alpha, alpha*}     dH_q/dalpha*
//   {alpha_q, H_q}   = {alpha_q, alpha_q*} dH_q/dalpha_q*
//   {H_q, P}         = {alpha, alpha*}     {H_q, P}_(alpha, alpha*)
//   {H_q, P_q}       = {alpha_q, alpha_q*} {H_q, P_q}_(alpha_q, alpha_q*)
// Left sides by finite differences, right sides from closed forms. The report
// carries the largest of the four absolute errors. `probe` is the density in
// the alpha plane, `probe_q` the one read at alpha_q.
VerificationReport verify_chain_identities(const OscillatorParams& params, DeformationKind kind,
                                           PhasePoint at, const DensityProbe& probe,
                                           const DensityProbe& probe_q, double h = kDefaultFdStep);
VerificationReport verify_chain_identities(const OscillatorParams& params, DeformationKind kind,
                                           PhasePoint at, const DensityProbe& probe,
                                           double h = kDefaultFdStep);
// Gaussian probes at t = pi/4: the alpha-plane one evolves under mu1/mu2, the
// alpha_q one under mu3/mu4.
VerificationReport verify_chain_identities(const OscillatorParams& params, DeformationKind kind,
                                           PhasePoint at, double h = kDefaultFdStep);

// Three-way agreement of alpha df/dalpha, alpha* df/dalpha* (finite differences)
// and the closed form. Not applicable for |at| <= 1e-4.
VerificationReport verify_f_derivative_identity(const OscillatorParams& params,
                                                DeformationKind kind, PhasePoint at,
                                                double h = kDefaultFdStep);

// {|alpha|^2, H_q} and {|alpha_q|^2, H_q} at seeded random points.
VerificationReport verify_constants_of_motion(const OscillatorParams& params, DeformationKind kind,
                                              std::uint64_t seed = kDefaultSeed,
                                              double h = kDefaultFdStep);

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    Sign sign = Sign::Plus;
    double h = kDefaultFdStep;
    std::size_t samples = 100;
};

// Runs every bracket check plus the dynamics and transport invariants.
// Never throws on a failed check; inspect the reports.
std::vector<VerificationReport> run_full_suite(const OscillatorParams& params,
                                               const SuiteOptions& options = {});

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace qwhorl
