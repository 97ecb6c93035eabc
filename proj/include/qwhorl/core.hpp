#pragma once

// Mathematical kernel of the q-deformed classical oscillator: coordinates,
// q-numbers, the deformation map, both Hamiltonians and the frequency laws.
//
// Units: everything is expressed through OscillatorParams. With the default
// natural units (m = omega = hbar = 1) the complex amplitude is
// alpha = (x + i p) / sqrt(2).

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace qwhorl {

using Complex = std::complex<double>;

// Physical constants plus the deformation parameter q in (0, 1).
// lambda = ln q is derived once at construction and is always < 0.
class OscillatorParams {
public:
    explicit OscillatorParams(double q = 0.5, double mass = 1.0, double omega = 1.0,
                              double hbar = 1.0);

    double q() const noexcept { return q_; }
    double lambda() const noexcept { return lambda_; }
    double mass() const noexcept { return mass_; }
    double omega() const noexcept { return omega_; }
    double hbar() const noexcept { return hbar_; }

    friend bool operator==(const OscillatorParams&, const OscillatorParams&) = default;

private:
    double q_;
    double lambda_;
    double mass_;
    double omega_;
    double hbar_;
};

enum class DeformationKind {
    Undeformed,  // f == 1
    QType1,      // symmetric sinh q-number
    QType2,      // exponential (Jackson) q-number
};

// Which complex plane a point lives in: the undeformed amplitude alpha or the
// deformed amplitude alpha_q = f(|alpha|^2) alpha.
enum class Representation { Alpha, AlphaQ };

// A point alpha of the complex phase plane.
class PhasePoint {
public:
    constexpr PhasePoint() = default;
    constexpr PhasePoint(double re, double im) : z_(re, im) {}
    constexpr explicit PhasePoint(Complex z) : z_(z) {}

    constexpr double re() const { return z_.real(); }
    constexpr double im() const { return z_.imag(); }
    constexpr Complex value() const { return z_; }

    // s = |alpha|^2, the action-like variable every frequency law depends on.
    constexpr double action() const { return z_.real() * z_.real() + z_.imag() * z_.imag(); }

    friend constexpr bool operator==(const PhasePoint&, const PhasePoint&) = default;

private:
    Complex z_{0.0, 0.0};
};

struct CanonicalPoint {
    double position;
    double momentum;
};

struct Energy {
    double value;  // in the same units as hbar * omega
};

enum class ProfileKind { Undeformed, Mu1, Mu2, Mu3, Mu4, Anharmonic };

// A frequency law Omega(s). Mu1/Mu2 take s = |alpha|^2, Mu3/Mu4 take
// s_q = |alpha_q|^2. Anharmonic is the Kerr-type law omega (1 + 2 chi s).
struct FrequencyProfile {
    ProfileKind kind = ProfileKind::Undeformed;
    double chi = 1.0;  // Anharmonic only

    static FrequencyProfile undeformed() { return {ProfileKind::Undeformed, 1.0}; }
    static FrequencyProfile mu1() { return {ProfileKind::Mu1, 1.0}; }
    static FrequencyProfile mu2() { return {ProfileKind::Mu2, 1.0}; }
    static FrequencyProfile mu3() { return {ProfileKind::Mu3, 1.0}; }
    static FrequencyProfile mu4() { return {ProfileKind::Mu4, 1.0}; }
    static FrequencyProfile anharmonic(double chi = 1.0) { return {ProfileKind::Anharmonic, chi}; }

    // Representation whose variable the law is written in.
    Representation representation() const {
        return (kind == ProfileKind::Mu3 || kind == ProfileKind::Mu4) ? Representation::AlphaQ
                                                                      : Representation::Alpha;
    }

    friend bool operator==(const FrequencyProfile&, const FrequencyProfile&) = default;
};

// alpha = sqrt(m w / 2 hbar) x + i p / sqrt(2 hbar m w)
PhasePoint canonical_to_complex(double position, double momentum, const OscillatorParams& params);
CanonicalPoint complex_to_canonical(PhasePoint alpha, const OscillatorParams& params);

// [s]_q. Undeformed returns s. Throws std::domain_error for s < 0.
double q_number(double s, const OscillatorParams& params, DeformationKind kind);

// d[s]_q / ds; equals Omega_{1,2}(s) / omega.
double q_number_slope(double s, const OscillatorParams& params, DeformationKind kind);

// Inverse of q_number. QType2 is only invertible below 1 / (1 - q); larger
// arguments throw std::domain_error.
double inverse_q_number(double s_q, const OscillatorParams& params, DeformationKind kind);

// f(s) = sqrt([s]_q / s), with the removable point s = 0 filled by its Taylor limit.
double deformation_f(double s, const OscillatorParams& params, DeformationKind kind);

// alpha_q = f(|alpha|^2) alpha
PhasePoint deform(PhasePoint alpha, const OscillatorParams& params, DeformationKind kind);

// H_q(alpha, alpha*) = hbar omega [|alpha|^2]_q
Energy hamiltonian_alpha(PhasePoint alpha, const OscillatorParams& params, DeformationKind kind);

// H_q(alpha_q, alpha_q*) = hbar omega |alpha_q|^2
Energy hamiltonian_alphaq(PhasePoint alpha_q, const OscillatorParams& params);

// Omega(s) in rad/time. Throws std::domain_error for s < 0.
double frequency(double s, const OscillatorParams& params, const FrequencyProfile& profile);

// dOmega/ds, analytic.
double frequency_slope(double s, const OscillatorParams& params, const FrequencyProfile& profile);

// The alpha-representation law generated by a deformation kind (Undeformed, Mu1, Mu2),
// and its alpha_q-representation partner (Undeformed, Mu3, Mu4).
FrequencyProfile alpha_profile_for(DeformationKind kind);
FrequencyProfile alphaq_profile_for(DeformationKind kind);

std::string_view to_string(DeformationKind kind);
std::string_view to_string(ProfileKind kind);
std::string_view to_string(Representation rep);
std::optional<DeformationKind> parse_deformation_kind(std::string_view name);
std::optional<ProfileKind> parse_profile_kind(std::string_view name);

}  // namespace qwhorl
