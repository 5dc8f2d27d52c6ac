#include "landau_qsl/qsl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <numbers>
#include <stdexcept>

#include "landau_qsl/parallel.hpp"
#include "landau_qsl/quadrature.hpp"

namespace lqsl {

std::string bound_name(SpeedBound b) {
    return b == SpeedBound::mandelstam_tamm ? "MT" : "ML";
}

double delta_h(double e_low, double e_high) {
    if (!(e_low > 0.0) || !(e_high > e_low)) {
        throw std::invalid_argument("delta_h: need e_high > e_low > 0");
    }
    return 0.5 * (e_high - e_low);
}

TauResult tau_qsl_from_gap(double gap, double mean) {
    if (!(gap > 0.0)) throw std::invalid_argument("tau_qsl: degenerate pair");
    const double spread = 0.5 * gap;
    const double mt = std::numbers::pi * constants.hbar_erg_s / (2.0 * spread);
    const double ml = mean > 0.0 ? std::numbers::pi * constants.hbar_erg_s / (2.0 * mean)
                                 : std::numeric_limits<double>::infinity();
    if (ml > mt) return {ml, SpeedBound::margolus_levitin};
    return {mt, SpeedBound::mandelstam_tamm};
}

TauResult tau_qsl(double e_low, double e_high) {
    if (!(e_high > e_low)) throw std::invalid_argument("tau_qsl: need e_high > e_low");
    return tau_qsl_from_gap(e_high - e_low, 0.5 * (e_low + e_high));
}

LevelPair solve_pair(const ScaledProblem& problem, int nu, const SolverSettings& settings) {
    auto levels = solve_levels(problem, nu, 2, settings);
    const double ov = overlap_s(levels[0], levels[1]).value;
    return LevelPair{problem, nu, std::move(levels[0]), std::move(levels[1]), ov};
}

QslPoint evaluate(const LevelPair& pair, const FieldProfile& profile) {
    if (profile.n() != pair.problem.n()) throw std::invalid_argument("evaluate: exponent mismatch");
    const double beta = to_beta(profile);
    const double scale = pair.problem.alpha_scale(beta);
    const double a_lo = std::max(0.0, pair.lower.alpha_tilde) * scale;
    const double a_hi = std::max(0.0, pair.upper.alpha_tilde) * scale;
    const double gap = epsilon_gap(a_lo, a_hi);
    const double eps_lo = epsilon_of_alpha(a_lo);
    const double eps_hi = epsilon_of_alpha(a_hi);
    const double mc2 = constants.electron_mass_energy_erg;
    const TauResult tau = tau_qsl_from_gap(gap * mc2, 0.5 * (eps_lo + eps_hi) * mc2);
    if (tau.bound != SpeedBound::mandelstam_tamm) {
        throw std::logic_error("QSL time not set by the Mandelstam-Tamm bound");
    }
    const double x_disp = 2.0 * std::abs(pair.overlap_s) * pair.problem.gamma(beta);
    return QslPoint{profile,
                    pair.problem.spin(),
                    pair.nu,
                    beta,
                    eps_lo,
                    eps_hi,
                    tau.tau,
                    x_disp * constants.reduced_compton_wavelength_pm,
                    velocity_to_c_units(x_disp, gap),
                    tau.bound};
}

QslPoint qsl_velocity(const FieldProfile& profile, SpinBranch spin, int nu, int m, const SolverSettings& settings) {
    return evaluate(solve_pair(ScaledProblem(profile.n(), m, spin, true), nu, settings), profile);
}

std::vector<QslPoint> sweep_b0(double n, SpinBranch spin, int nu, std::span<const double> b0_grid, int m,
                               const SolverSettings& settings) {
    const LevelPair pair = solve_pair(ScaledProblem(n, m, spin, true), nu, settings);
    std::vector<QslPoint> out;
    out.reserve(b0_grid.size());
    for (double b0 : b0_grid) out.push_back(evaluate(pair, FieldProfile(b0, n)));
    return out;
}

double sqsl(const LevelPair& pair) {
    const double lo = std::sqrt(std::max(0.0, pair.lower.alpha_tilde));
    const double hi = std::sqrt(std::max(0.0, pair.upper.alpha_tilde));
    return 2.0 * std::abs(pair.overlap_s) * (hi - lo) / std::numbers::pi;
}

double sqsl(double n, SpinBranch spin, int nu, int m, const SolverSettings& settings) {
    return sqsl(solve_pair(ScaledProblem(n, m, spin, true), nu, settings));
}

B0Rule constant_b0(double b0) {
    return [b0](double) { return b0; };
}

std::vector<QslPoint> sweep_n(const B0Rule& b0_rule, SpinBranch spin, int nu, std::span<const double> n_grid, int m,
                              const SolverSettings& settings, unsigned threads) {
    std::vector<std::optional<QslPoint>> slots(n_grid.size());
    parallel_for(n_grid.size(), threads, [&](std::size_t i) {
        const double n = n_grid[i];
        slots[i] = qsl_velocity(FieldProfile(b0_rule(n), n), spin, nu, m, settings);
    });
    std::vector<QslPoint> out;
    for (auto& s : slots) out.push_back(*s);
    return out;
}

std::vector<double> log_grid(double start, double stop, int points_per_decade) {
    if (!(start > 0.0) || !(stop >= start)) throw std::invalid_argument("log_grid: need 0 < start <= stop");
    if (points_per_decade < 1) throw std::invalid_argument("log_grid: points per decade must be >= 1");
    const double decades = std::log10(stop / start);
    const auto count = static_cast<long>(std::floor(decades * points_per_decade + 1e-9));
    std::vector<double> out;
    for (long i = 0; i <= count; ++i) out.push_back(start * std::pow(10.0, double(i) / points_per_decade));
    if (out.back() < stop * (1.0 - 1e-12)) out.push_back(stop);
    return out;
}

} // namespace lqsl
