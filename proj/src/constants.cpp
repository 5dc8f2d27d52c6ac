#include "landau_qsl/constants.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace lqsl {

FieldProfile::FieldProfile(double b0_gauss_pm_n, double n) : b0_(b0_gauss_pm_n), n_(n) {
    if (!(b0_ > 0.0) || !std::isfinite(b0_)) {
        throw std::invalid_argument("b0 must be positive and finite, got " + std::to_string(b0_));
    }
    if (!(n_ > -1.0) || !std::isfinite(n_)) {
        throw std::invalid_argument("n must exceed -1, got " + std::to_string(n_));
    }
}

double to_beta(const FieldProfile& profile) {
    return profile.b0() * std::pow(constants.reduced_compton_wavelength_pm, profile.n()) /
           constants.critical_field_gauss;
}

FieldProfile from_beta(double beta, double n) {
    return FieldProfile(beta * constants.critical_field_gauss /
                            std::pow(constants.reduced_compton_wavelength_pm, n),
                        n);
}

double epsilon_of_alpha(double alpha) {
    if (alpha < -1.0 || std::isnan(alpha)) {
        throw std::domain_error("epsilon_of_alpha: alpha must be >= -1");
    }
    return std::sqrt(1.0 + alpha);
}

double epsilon_gap(double alpha_low, double alpha_high) {
    return (alpha_high - alpha_low) / (epsilon_of_alpha(alpha_high) + epsilon_of_alpha(alpha_low));
}

double velocity_to_c_units(double x_disp, double delta_eps) {
    return x_disp * delta_eps / std::numbers::pi;
}

} // namespace lqsl
