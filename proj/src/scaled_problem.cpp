#include "landau_qsl/scaled_problem.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace lqsl {

std::string branch_name(SpinBranch b) {
    return b == SpinBranch::plus ? "plus" : "minus";
}

std::string SpinLabels::label(SpinBranch b) const {
    const bool up = (b == SpinBranch::plus) != swapped;
    return up ? "up" : "down";
}

SpinBranch SpinLabels::branch(const std::string& label) const {
    if (label == "plus") return SpinBranch::plus;
    if (label == "minus") return SpinBranch::minus;
    if (label == "up") return swapped ? SpinBranch::minus : SpinBranch::plus;
    if (label == "down") return swapped ? SpinBranch::plus : SpinBranch::minus;
    throw std::invalid_argument("unknown spin label '" + label + "'");
}

QuantumNumbers::QuantumNumbers(int nu_, int m_, SpinBranch spin_) : nu(nu_), m(m_), spin(spin_) {
    if (nu < 0) throw std::invalid_argument("nu must be non-negative");
    if (spin != SpinBranch::plus && spin != SpinBranch::minus) {
        throw std::invalid_argument("spin branch must be +1 or -1");
    }
}

ScaledProblem::ScaledProblem(double n, int m, SpinBranch spin, bool zeeman_enabled)
    : n_(n), m_(m), spin_(spin), zeeman_(zeeman_enabled) {
    if (!(n > -1.0) || !std::isfinite(n)) {
        throw std::invalid_argument("n must exceed -1");
    }
    z_ = -2.0 * m_ / (n_ + 2.0) + (zeeman_ ? sign_of(spin_) : 0.0);
}

double ScaledProblem::potential(double s) const {
    if (!(s > 0.0)) throw std::domain_error("potential: s must be positive");
    const double k = n_ + 2.0;
    double v = std::pow(s, 2.0 * n_ + 2.0) / (k * k);
    if (z_ != 0.0) v += z_ * std::pow(s, n_);
    if (m_ != 0) v += double(m_) * m_ / (s * s);
    return v;
}

double ScaledProblem::gamma(double beta) const {
    return std::pow(beta, -1.0 / (n_ + 2.0));
}

double ScaledProblem::alpha_scale(double beta) const {
    return std::pow(beta, 2.0 / (n_ + 2.0));
}

// S = s^|m| * sum c(i,j) s^(i(n+2) + 2j). Substituting into the ODE gives
//   c(i,j) [(|m|+e)^2 - m^2] = z c(i-1,j) + c(i-2,j)/(n+2)^2 - alpha c(i,j-1)
// with e = i(n+2) + 2j and c(0,0) = 1.
std::pair<double, double> ScaledProblem::origin_series(double alpha_tilde, double s0) const {
    constexpr int order = 5;
    const double k = n_ + 2.0;
    const double am = std::abs(m_);
    std::array<std::array<double, order + 1>, order + 1> c{};
    c[0][0] = 1.0;
    double value = 0.0;
    double deriv = 0.0;
    for (int total = 0; total <= order; ++total) {
        for (int i = 0; i <= total; ++i) {
            const int j = total - i;
            const double e = i * k + 2.0 * j;
            if (total > 0) {
                double rhs = 0.0;
                if (i >= 1) rhs += z_ * c[i - 1][j];
                if (i >= 2) rhs += c[i - 2][j] / (k * k);
                if (j >= 1) rhs -= alpha_tilde * c[i][j - 1];
                c[i][j] = rhs / ((am + e) * (am + e) - am * am);
            }
            const double p = am + e;
            value += c[i][j] * std::pow(s0, p);
            if (p != 0.0) deriv += c[i][j] * p * std::pow(s0, p - 1.0);
        }
    }
    return {value, deriv};
}

double ScaledProblem::outer_cutoff(double alpha_tilde, double margin) const {
    const double target = alpha_tilde + margin;
    double hi = 1.0;
    while (potential(hi) < target) hi *= 2.0;
    double lo = hi > 1.0 ? hi / 2.0 : default_s0();
    if (potential(lo) >= target) return std::ceil(hi * 64.0) / 64.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (potential(mid) >= target ? hi : lo) = mid;
    }
    return std::ceil(hi * 64.0) / 64.0;
}

double ScaledProblem::outer_turning_point(double alpha_tilde) const {
    const double hi = outer_cutoff(alpha_tilde, 0.0);
    // Walk inward in small steps to find the outermost crossing.
    constexpr int samples = 4096;
    for (int i = samples; i > 0; --i) {
        const double s = hi * i / samples;
        if (potential(s) <= alpha_tilde) {
            double lo = s;
            double up = hi * (i + 1) / samples;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + up);
                (potential(mid) <= alpha_tilde ? lo : up) = mid;
            }
            return lo;
        }
    }
    return 0.0;
}

double ScaledProblem::tail_action(double alpha_tilde, double from, double to) const {
    if (!(to > from)) return 0.0;
    constexpr int panels = 512;
    const double h = (to - from) / panels;
    double sum = 0.0;
    for (int i = 0; i <= panels; ++i) {
        const double s = from + h * i;
        const double w = (i == 0 || i == panels) ? 0.5 : 1.0;
        if (s > 0.0) sum += w * std::sqrt(std::max(potential(s) - alpha_tilde, 0.0));
    }
    return sum * h;
}

double ScaledProblem::solver_cutoff(double alpha_tilde, double margin, double min_action) const {
    double s_max = outer_cutoff(alpha_tilde, margin);
    const double turn = outer_turning_point(alpha_tilde);
    while (tail_action(alpha_tilde, turn, s_max) < min_action) s_max *= 1.1;
    return std::ceil(s_max * 64.0) / 64.0;
}

} // namespace lqsl
