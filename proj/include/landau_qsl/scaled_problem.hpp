#ifndef LANDAU_QSL_SCALED_PROBLEM_HPP
#define LANDAU_QSL_SCALED_PROBLEM_HPP

#include <string>
#include <utility>

namespace lqsl {

/// Sign sigma of the +/-1 spin-field term in the radial equation.
enum class SpinBranch : int { minus = -1, plus = +1 };

inline int sign_of(SpinBranch b) { return static_cast<int>(b); }
std::string branch_name(SpinBranch b);  // "plus" / "minus"

/// Display mapping between branches and physical spin labels. The default
/// puts "up" on the branch with the smaller uniform-field saturated QSL.
struct SpinLabels {
    bool swapped = false;
    std::string label(SpinBranch b) const;
    SpinBranch branch(const std::string& label) const;  // accepts up/down/plus/minus
};

struct QuantumNumbers {
    int nu = 0;
    int m = 0;
    SpinBranch spin = SpinBranch::plus;

    QuantumNumbers() = default;
    QuantumNumbers(int nu_, int m_, SpinBranch spin_);
};

/// Field-strength-free radial problem
///   -S'' - S'/s + V(s) S = alpha_tilde S,
///   V(s) = s^(2n+2)/(n+2)^2 + z s^n + m^2/s^2,
/// obtained from the physical radial equation by x = rho/lambda_e and
/// s = x * beta^(1/(n+2)). Physical eigenvalues follow from
/// alpha = alpha_tilde * beta^(2/(n+2)).
class ScaledProblem {
public:
    ScaledProblem(double n, int m, SpinBranch spin, bool zeeman_enabled);

    double n() const { return n_; }
    int m() const { return m_; }
    SpinBranch spin() const { return spin_; }
    bool zeeman_enabled() const { return zeeman_; }

    /// z = -2m/(n+2) + sigma; the sigma part is dropped when Zeeman is off.
    double spin_coeff() const { return z_; }

    /// Throws std::domain_error for s <= 0.
    double potential(double s) const;

    /// Coordinate scale: x = s * gamma(beta), gamma = beta^(-1/(n+2)).
    double gamma(double beta) const;
    /// alpha = alpha_tilde * beta^(2/(n+2)).
    double alpha_scale(double beta) const;

    /// Regular solution and derivative at s0 from the Frobenius series.
    std::pair<double, double> origin_series(double alpha_tilde, double s0) const;

    /// Smallest s_max (rounded up to a multiple of 1/64) with
    /// V(s) >= alpha_tilde + margin for all s >= s_max.
    double outer_cutoff(double alpha_tilde, double margin = default_margin) const;

    /// Largest s with V(s) <= alpha_tilde; 0 when there is none.
    double outer_turning_point(double alpha_tilde) const;

    /// WKB decay exponent: integral of sqrt(max(V - alpha_tilde, 0)) over [from, to].
    double tail_action(double alpha_tilde, double from, double to) const;

    /// Integration domain used by the solver: at least outer_cutoff(), then
    /// widened in 10% steps until the tail action past the outer turning point
    /// reaches min_action. Steep potentials (large n) need the second condition.
    double solver_cutoff(double alpha_tilde, double margin = default_margin,
                         double min_action = default_tail_action) const;

    /// Default start point: 1e-6 for n >= 0, 1e-4 for -1 < n < 0.
    double default_s0() const { return n_ >= 0.0 ? 1e-6 : 1e-4; }

    static constexpr double default_margin = 25.0;
    static constexpr double default_tail_action = 20.0;

    friend bool operator==(const ScaledProblem&, const ScaledProblem&) = default;

private:
    double n_;
    int m_;
    SpinBranch spin_;
    bool zeeman_;
    double z_;
};

} // namespace lqsl

#endif
