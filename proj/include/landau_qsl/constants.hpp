#ifndef LANDAU_QSL_CONSTANTS_HPP
#define LANDAU_QSL_CONSTANTS_HPP

#include <cmath>

namespace lqsl {

// CODATA 2018, Gaussian CGS.
namespace codata {
inline constexpr double electron_mass_g = 9.1093837015e-28;
inline constexpr double light_speed_cm_s = 2.99792458e10;
inline constexpr double hbar_erg_s = 1.054571817e-27;
inline constexpr double elementary_charge_esu = 4.803204712570263e-10;
inline constexpr double erg_per_kev = 1.602176634e-9;
inline constexpr double pm_per_cm = 1.0e10;
} // namespace codata

struct PhysicalConstants {
    double electron_mass_energy_erg;
    double electron_mass_energy_kev;
    double reduced_compton_wavelength_pm;  // lambda_e = hbar / (m_e c)
    double critical_field_gauss;           // B_cr = m_e^2 c^3 / (hbar e)
    double light_speed_pm_s;
    double hbar_erg_s;
};

inline constexpr PhysicalConstants constants{
    codata::electron_mass_g * codata::light_speed_cm_s * codata::light_speed_cm_s,
    codata::electron_mass_g * codata::light_speed_cm_s * codata::light_speed_cm_s / codata::erg_per_kev,
    codata::hbar_erg_s / (codata::electron_mass_g * codata::light_speed_cm_s) * codata::pm_per_cm,
    codata::electron_mass_g * codata::electron_mass_g * codata::light_speed_cm_s * codata::light_speed_cm_s *
        codata::light_speed_cm_s / (codata::hbar_erg_s * codata::elementary_charge_esu),
    codata::light_speed_cm_s * codata::pm_per_cm,
    codata::hbar_erg_s,
};

/// Power-law axial field B = b0 * rho^n with rho in picometres.
class FieldProfile {
public:
    /// Throws std::invalid_argument unless b0 > 0 and n > -1.
    FieldProfile(double b0_gauss_pm_n, double n);

    double b0() const { return b0_; }
    double n() const { return n_; }

private:
    double b0_;
    double n_;
};

/// Dimensionless field strength beta = b0 * lambda_e^n / B_cr.
double to_beta(const FieldProfile& profile);

/// Inverse of to_beta for a given exponent.
FieldProfile from_beta(double beta, double n);

/// epsilon = sqrt(1 + alpha); throws std::domain_error for alpha < -1.
double epsilon_of_alpha(double alpha);

/// sqrt(1 + alpha_high) - sqrt(1 + alpha_low) without cancellation at small alpha.
double epsilon_gap(double alpha_low, double alpha_high);

/// v/c from a displacement in lambda_e units and a dimensionless energy gap.
/// tau = pi hbar / (E_high - E_low) and rho = lambda_e * x give v/c = x * d_eps / pi.
double velocity_to_c_units(double x_disp, double delta_eps);

} // namespace lqsl

#endif
