#include "qwhorl/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwhorl {

namespace {

// Below this action the ratio [s]_q / s is replaced by its Taylor expansion.
constexpr double kTaylorThreshold = 1e-8;

void require_non_negative(double s, const char* what) {
    if (!(s >= 0.0)) {
        throw std::domain_error(std::string(what) + ": argument must be >= 0, got " +
                                std::to_string(s));
    }
}

}  // namespace

OscillatorParams::OscillatorParams(double q, double mass, double omega, double hbar)
    : q_(q), lambda_(0.0), mass_(mass), omega_(omega), hbar_(hbar) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::invalid_argument("q must lie in (0,1), got " + std::to_string(q));
    }
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0)) {
        throw std::invalid_argument("mass, omega and hbar must be positive");
    }
    lambda_ = std::log(q_);
}

PhasePoint canonical_to_complex(double position, double momentum, const OscillatorParams& params) {
    const double mw = params.mass() * params.omega();
    const double re = std::sqrt(mw / (2.0 * params.hbar())) * position;
    const double im = momentum / std::sqrt(2.0 * params.hbar() * mw);
    return {re, im};
}

CanonicalPoint complex_to_canonical(PhasePoint alpha, const OscillatorParams& params) {
    // x = sqrt(hbar / 2mw) (alpha + alpha*), p = -i sqrt(hbar m w / 2) (alpha - alpha*)
    const double mw = params.mass() * params.omega();
    const double position = std::sqrt(params.hbar() / (2.0 * mw)) * 2.0 * alpha.re();
    const double momentum = std::sqrt(params.hbar() * mw / 2.0) * 2.0 * alpha.im();
    return {position, momentum};
}

double q_number(double s, const OscillatorParams& params, DeformationKind kind) {
    require_non_negative(s, "q_number");
    const double lam = params.lambda();
    switch (kind) {
        case DeformationKind::Undeformed:
            return s;
        case DeformationKind::QType1:
            return std::sinh(lam * s) / std::sinh(lam);
        case DeformationKind::QType2:
            return std::expm1(lam * s) / std::expm1(lam);
    }
    throw std::logic_error("unhandled deformation kind");
}

double q_number_slope(double s, const OscillatorParams& params, DeformationKind kind) {
    require_non_negative(s, "q_number_slope");
    const double lam = params.lambda();
    switch (kind) {
        case DeformationKind::Undeformed:
            return 1.0;
        case DeformationKind::QType1:
            return lam * std::cosh(lam * s) / std::sinh(lam);
        case DeformationKind::QType2:
            return lam * std::exp(lam * s) / std::expm1(lam);
    }
    throw std::logic_error("unhandled deformation kind");
}

double inverse_q_number(double s_q, const OscillatorParams& params, DeformationKind kind) {
    require_non_negative(s_q, "inverse_q_number");
    const double lam = params.lambda();
    switch (kind) {
        case DeformationKind::Undeformed:
            return s_q;
        case DeformationKind::QType1:
            return std::asinh(s_q * std::sinh(lam)) / lam;
        case DeformationKind::QType2: {
            const double arg = s_q * std::expm1(lam);
            if (!(arg > -1.0)) {
                throw std::domain_error("inverse_q_number: s_q must be below 1/(1-q) for type2");
            }
            return std::log1p(arg) / lam;
        }
    }
    throw std::logic_error("unhandled deformation kind");
}

double deformation_f(double s, const OscillatorParams& params, DeformationKind kind) {
    require_non_negative(s, "deformation_f");
    if (kind == DeformationKind::Undeformed) return 1.0;
    const double lam = params.lambda();
    if (s < kTaylorThreshold) {
        // sinh(ls)/(s sinh l) = (l/sinh l)(1 + l^2 s^2/6 + ...)
        // expm1(ls)/(s expm1 l) = (l/expm1 l)(1 + l s/2 + ...)
        if (kind == DeformationKind::QType1) {
            return std::sqrt(lam / std::sinh(lam)) * (1.0 + lam * lam * s * s / 12.0);
        }
        return std::sqrt(lam / std::expm1(lam)) * (1.0 + lam * s / 4.0);
    }
    return std::sqrt(q_number(s, params, kind) / s);
}

PhasePoint deform(PhasePoint alpha, const OscillatorParams& params, DeformationKind kind) {
    return PhasePoint(deformation_f(alpha.action(), params, kind) * alpha.value());
}

Energy hamiltonian_alpha(PhasePoint alpha, const OscillatorParams& params, DeformationKind kind) {
    return {params.hbar() * params.omega() * q_number(alpha.action(), params, kind)};
}

Energy hamiltonian_alphaq(PhasePoint alpha_q, const OscillatorParams& params) {
    return {params.hbar() * params.omega() * alpha_q.action()};
}

double frequency(double s, const OscillatorParams& params, const FrequencyProfile& profile) {
    require_non_negative(s, "frequency");
    const double w = params.omega();
    const double lam = params.lambda();
    switch (profile.kind) {
        case ProfileKind::Undeformed:
            return w;
        case ProfileKind::Mu1:
            return w * q_number_slope(s, params, DeformationKind::QType1);
        case ProfileKind::Mu2:
            return w * q_number_slope(s, params, DeformationKind::QType2);
        case ProfileKind::Mu3:
            return w * lam / std::sinh(lam) * std::hypot(1.0, s * std::sinh(lam));
        case ProfileKind::Mu4:
            // 1 - s (1 - e^l) written as 1 + s expm1(l)
            return w * lam / std::expm1(lam) * (1.0 + s * std::expm1(lam));
        case ProfileKind::Anharmonic:
            return w * (1.0 + 2.0 * profile.chi * s);
    }
    throw std::logic_error("unhandled frequency profile");
}

double frequency_slope(double s, const OscillatorParams& params, const FrequencyProfile& profile) {
    require_non_negative(s, "frequency_slope");
    const double w = params.omega();
    const double lam = params.lambda();
    switch (profile.kind) {
        case ProfileKind::Undeformed:
            return 0.0;
        case ProfileKind::Mu1:
            return w * lam * lam * std::sinh(lam * s) / std::sinh(lam);
        case ProfileKind::Mu2:
            return w * lam * lam * std::exp(lam * s) / std::expm1(lam);
        case ProfileKind::Mu3: {
            const double sh = std::sinh(lam);
            return w * lam / sh * s * sh * sh / std::hypot(1.0, s * sh);
        }
        case ProfileKind::Mu4:
            return w * lam;
        case ProfileKind::Anharmonic:
            return 2.0 * w * profile.chi;
    }
    throw std::logic_error("unhandled frequency profile");
}

FrequencyProfile alpha_profile_for(DeformationKind kind) {
    switch (kind) {
        case DeformationKind::Undeformed: return FrequencyProfile::undeformed();
        case DeformationKind::QType1: return FrequencyProfile::mu1();
        case DeformationKind::QType2: return FrequencyProfile::mu2();
    }
    throw std::logic_error("unhandled deformation kind");
}

FrequencyProfile alphaq_profile_for(DeformationKind kind) {
    switch (kind) {
        case DeformationKind::Undeformed: return FrequencyProfile::undeformed();
        case DeformationKind::QType1: return FrequencyProfile::mu3();
        case DeformationKind::QType2: return FrequencyProfile::mu4();
    }
    throw std::logic_error("unhandled deformation kind");
}

std::string_view to_string(DeformationKind kind) {
    switch (kind) {
        case DeformationKind::Undeformed: return "none";
        case DeformationKind::QType1: return "type1";
        case DeformationKind::QType2: return "type2";
    }
    return "?";
}

std::string_view to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::Undeformed: return "undeformed";
        case ProfileKind::Mu1: return "mu1";
        case ProfileKind::Mu2: return "mu2";
        case ProfileKind::Mu3: return "mu3";
        case ProfileKind::Mu4: return "mu4";
        case ProfileKind::Anharmonic: return "anharmonic";
    }
    return "?";
}

std::string_view to_string(Representation rep) {
    return rep == Representation::Alpha ? "alpha" : "alpha_q";
}

std::optional<DeformationKind> parse_deformation_kind(std::string_view name) {
    for (auto k : {DeformationKind::Undeformed, DeformationKind::QType1, DeformationKind::QType2}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

std::optional<ProfileKind> parse_profile_kind(std::string_view name) {
    for (auto k : {ProfileKind::Undeformed, ProfileKind::Mu1, ProfileKind::Mu2, ProfileKind::Mu3,
                   ProfileKind::Mu4, ProfileKind::Anharmonic}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

}  // namespace qwhorl
