#ifndef LANDAU_QSL_QSL_HPP
#define LANDAU_QSL_QSL_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "landau_qsl/constants.hpp"
#include "landau_qsl/eigensolver.hpp"

namespace lqsl {

enum class SpeedBound { mandelstam_tamm, margolus_levitin };
std::string bound_name(SpeedBound b);  // "MT" / "ML"

/// Energy spread of the equal-weight two-level superposition, (e_high - e_low)/2.
/// Throws std::invalid_argument unless e_high > e_low > 0.
double delta_h(double e_low, double e_high);

struct TauResult {
    double tau = 0.0;  // seconds when energies are in erg
    SpeedBound bound = SpeedBound::mandelstam_tamm;
};

/// Orthogonalization time max(pi hbar / 2 dH, pi hbar / 2 <H>) with
/// <H> = (e_low + e_high)/2. Energies in erg.
TauResult tau_qsl(double e_low, double e_high);

/// Same, from the gap and mean directly; avoids forming nearly equal energies.
TauResult tau_qsl_from_gap(double gap, double mean);

/// Levels nu and nu+1 of one branch on a common grid, with their s matrix element.
struct LevelPair {
    ScaledProblem problem;
    int nu;
    RadialSolution lower;
    RadialSolution upper;
    double overlap_s;  // <nu| s |nu+1> in scaled units
};

LevelPair solve_pair(const ScaledProblem& problem, int nu, const SolverSettings& settings = {});

struct QslPoint {
    FieldProfile profile;
    SpinBranch spin;
    int nu;
    double beta;
    double epsilon_low;
    double epsilon_high;
    double tau_qsl_s;
    double rho_disp_pm;
    double v_over_c;
    SpeedBound bound;
};

/// Maps a solved pair to one field profile by the scaling rules; no re-solve.
QslPoint evaluate(const LevelPair& pair, const FieldProfile& profile);

QslPoint qsl_velocity(const FieldProfile& profile, SpinBranch spin, int nu = 0, int m = 0,
                      const SolverSettings& settings = {});

std::vector<QslPoint> sweep_b0(double n, SpinBranch spin, int nu, std::span<const double> b0_grid, int m = 0,
                               const SolverSettings& settings = {});

/// Saturated QSL, the beta -> infinity limit:
///   2 |<nu|s|nu+1>| (sqrt(alpha_tilde_{nu+1}) - sqrt(alpha_tilde_nu)) / pi.
double sqsl(const LevelPair& pair);
double sqsl(double n, SpinBranch spin, int nu = 0, int m = 0, const SolverSettings& settings = {});

using B0Rule = std::function<double(double n)>;
/// b0 = 1e17 G pm^-n regardless of n.
B0Rule constant_b0(double b0 = 1e17);

std::vector<QslPoint> sweep_n(const B0Rule& b0_rule, SpinBranch spin, int nu, std::span<const double> n_grid,
                              int m = 0, const SolverSettings& settings = {}, unsigned threads = 1);

/// Log-spaced grid from start to stop with the given points per decade, both ends included.
std::vector<double> log_grid(double start, double stop, int points_per_decade);

} // namespace lqsl

#endif
