#include "landau_qsl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "landau_qsl/constants.hpp"

namespace lqsl {

namespace {

double simpson_pair(double x0, double x1, double x2, double f0, double f1, double f2) {
    const double h0 = x1 - x0;
    const double h1 = x2 - x1;
    return (h0 + h1) / 6.0 *
           ((2.0 - h1 / h0) * f0 + (h0 + h1) * (h0 + h1) / (h0 * h1) * f1 + (2.0 - h0 / h1) * f2);
}

// Integral over [x1, x2] of the parabola through three points.
double last_interval(double x0, double x1, double x2, double f0, double f1, double f2) {
    const double h0 = x1 - x0;
    const double h1 = x2 - x1;
    return f2 * h1 * (2.0 * h1 + 3.0 * h0) / (6.0 * (h0 + h1)) + f1 * h1 * (h1 + 3.0 * h0) / (6.0 * h0) -
           f0 * h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
}

void require_same_family(const RadialSolution& a, const RadialSolution& b) {
    if (a.problem.n() != b.problem.n() || a.problem.m() != b.problem.m()) {
        throw std::invalid_argument("matrix element between different (n, m) families");
    }
    if (a.grid != b.grid) {
        throw std::invalid_argument("matrix element requires a common grid");
    }
}

double origin_power(const RadialSolution& r) {
    return std::abs(r.problem.m());
}

} // namespace

double simpson(std::span<const double> x, std::span<const double> f) {
    if (x.size() != f.size()) throw std::invalid_argument("simpson: size mismatch");
    const std::size_t n = x.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * (x[1] - x[0]) * (f[0] + f[1]);
    const std::size_t intervals = n - 1;
    const std::size_t paired = intervals - intervals % 2;
    double sum = 0.0;
    for (std::size_t i = 0; i < paired; i += 2) {
        sum += simpson_pair(x[i], x[i + 1], x[i + 2], f[i], f[i + 1], f[i + 2]);
    }
    if (paired != intervals) {
        sum += last_interval(x[n - 3], x[n - 2], x[n - 1], f[n - 3], f[n - 2], f[n - 1]);
    }
    return sum;
}

double norm_integral(const RadialSolution& r) {
    std::vector<double> f(r.grid.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = r.values[i] * r.values[i] * r.grid[i];
    const double s0 = r.grid.front();
    const double head = r.values.front() * r.values.front() * s0 * s0 / (2.0 * origin_power(r) + 2.0);
    return head + simpson(r.grid, f);
}

RadialSolution normalize(RadialSolution r) {
    const double norm = norm_integral(r);
    if (!(norm > 0.0) || !std::isfinite(norm)) throw QuadratureError("normalize: non-positive norm");
    const double factor = 1.0 / std::sqrt(norm);
    for (double& v : r.values) v *= factor;
    r.norm_factor *= factor;

    const std::size_t start = r.grid.size() - std::max<std::size_t>(3, r.grid.size() / 20);
    std::vector<double> f;
    f.reserve(r.grid.size() - start);
    for (std::size_t i = start; i < r.grid.size(); ++i) f.push_back(r.values[i] * r.values[i] * r.grid[i]);
    const double tail = simpson(std::span(r.grid).subspan(start), f);
    if (tail > 1e-8) {
        throw QuadratureError("normalize: tail carries " + std::to_string(tail) + " of the norm");
    }
    return r;
}

OverlapResult overlap_s(const RadialSolution& a, const RadialSolution& b) {
    require_same_family(a, b);
    const std::size_t n = a.grid.size();
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = a.values[i] * b.values[i] * a.grid[i] * a.grid[i];
    const double s0 = a.grid.front();
    const double head = a.values.front() * b.values.front() * s0 * s0 * s0 / (2.0 * origin_power(a) + 3.0);
    OverlapResult out;
    out.value = head + simpson(a.grid, f);

    // Richardson-style estimate from the every-other-point rule.
    std::vector<double> xc, fc;
    for (std::size_t i = 0; i < n; i += 2) {
        xc.push_back(a.grid[i]);
        fc.push_back(f[i]);
    }
    if (xc.back() != a.grid.back()) {
        xc.push_back(a.grid.back());
        fc.push_back(f.back());
    }
    out.estimated_quadrature_error = std::abs(head + simpson(xc, fc) - out.value) / 15.0;
    return out;
}

double overlap(const RadialSolution& a, const RadialSolution& b) {
    require_same_family(a, b);
    std::vector<double> f(a.grid.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = a.values[i] * b.values[i] * a.grid[i];
    const double s0 = a.grid.front();
    return a.values.front() * b.values.front() * s0 * s0 / (2.0 * origin_power(a) + 2.0) + simpson(a.grid, f);
}

double displacement(const RadialSolution& a, const RadialSolution& b, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("displacement: beta must be positive");
    return 2.0 * std::abs(overlap_s(a, b).value) * a.problem.gamma(beta);
}

double mean_radius_t(const RadialSolution& a, const RadialSolution& b, double beta, double t_seconds) {
    if (t_seconds < 0.0) throw std::invalid_argument("mean_radius_t: t must be non-negative");
    const double gamma = a.problem.gamma(beta);
    const double scale = a.problem.alpha_scale(beta);
    const double xa = overlap_s(a, a).value * gamma;
    const double xb = overlap_s(b, b).value * gamma;
    const double xab = overlap_s(a, b).value * gamma;
    const double gap = epsilon_gap(a.alpha_tilde * scale, b.alpha_tilde * scale);
    const double omega = gap * constants.electron_mass_energy_erg / constants.hbar_erg_s;
    return 0.5 * (xa + xb + 2.0 * xab * std::cos(omega * t_seconds));
}

} // namespace lqsl
