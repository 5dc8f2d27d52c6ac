#ifndef LANDAU_QSL_EIGENSOLVER_HPP
#define LANDAU_QSL_EIGENSOLVER_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "landau_qsl/radial_solution.hpp"
#include "landau_qsl/scaled_problem.hpp"

namespace lqsl {

class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverSettings {
    int steps = 40000;
    double s0 = 0.0;  // <= 0 selects ScaledProblem::default_s0()
    double margin = ScaledProblem::default_margin;
    double min_tail_action = ScaledProblem::default_tail_action;
    double alpha_ceiling = 1e6;
    double rel_tol = 1e-10;
    bool use_cache = true;

    double start_point(const ScaledProblem& p) const { return s0 > 0.0 ? s0 : p.default_s0(); }
};

/// Integration grid on [s0, s_max] with `steps` intervals (rounded up to even).
/// For -1 < n < 0 the first 5% of intervals are geometric so the integrable
/// s^n singularity is resolved; the join is placed where the geometric step
/// matches the uniform one.
std::vector<double> make_grid(const ScaledProblem& problem, double s0, double s_max, int steps);

struct Trajectory {
    std::vector<double> values;    // S at each grid point reached
    int node_count = 0;            // interior sign changes
    int terminal_sign = 1;         // sign of S at the last point reached
    bool truncated = false;        // overflow guard fired before s_max
};

/// Fixed-step RK4 integration of S'' + S'/s + (alpha_tilde - V) S = 0 outward
/// from the regular origin series.
Trajectory integrate_radial(const ScaledProblem& problem, double alpha_tilde, std::span<const double> grid);

/// Bound-state eigenvalue with exactly nu nodes. Brackets by doubling from
/// alpha_tilde = 1 on node counts, then bisects on a fixed grid.
double find_alpha_tilde(const ScaledProblem& problem, int nu, const SolverSettings& settings = {});

/// Normalized eigenfunction for a converged eigenvalue: outward solution up to
/// the outer turning point, inward solution (Dirichlet at s_max) beyond it.
RadialSolution eigenfunction(const ScaledProblem& problem, double alpha_tilde, std::vector<double> grid);

/// Solves level nu. When s_max is not given it is solver_cutoff(alpha_tilde).
RadialSolution solve_level(const ScaledProblem& problem, int nu, const SolverSettings& settings = {},
                           std::optional<double> s_max = std::nullopt);

/// Levels first..first+count-1 sampled on one shared grid sized for the highest level.
std::vector<RadialSolution> solve_levels(const ScaledProblem& problem, int first, int count,
                                         const SolverSettings& settings = {});

struct EigenState {
    QuantumNumbers qn;
    RadialSolution radial;
    double beta = 1.0;
    double alpha = 0.0;    // alpha_tilde * beta^(2/(n+2))
    double epsilon = 1.0;  // sqrt(1 + alpha)
};

EigenState make_state(RadialSolution radial, int nu, double beta);

/// First `count` levels mapped to field strength beta, ascending.
std::vector<EigenState> spectrum(double n, int m, SpinBranch spin, int count, bool zeeman_enabled,
                                 double beta, const SolverSettings& settings = {});

} // namespace lqsl

#endif
