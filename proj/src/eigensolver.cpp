#include "landau_qsl/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "landau_qsl/eigen_cache.hpp"
#include "landau_qsl/quadrature.hpp"

namespace lqsl {

namespace {

constexpr double overflow_limit = 0.5e300;

// Potential sampled at nodes and interval midpoints; independent of alpha.
struct SampledPotential {
    std::vector<double> node;
    std::vector<double> mid;

    SampledPotential(const ScaledProblem& p, std::span<const double> grid) : node(grid.size()), mid(grid.size() - 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) node[i] = p.potential(grid[i]);
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) mid[i] = p.potential(0.5 * (grid[i] + grid[i + 1]));
    }
};

struct State {
    double y;   // S
    double dy;  // S'
};

// One RK4 step of S'' = -S'/s + (V - alpha) S from s_a to s_b.
State rk4_step(State st, double s_a, double s_b, double v_a, double v_m, double v_b, double alpha) {
    const double h = s_b - s_a;
    const double s_m = 0.5 * (s_a + s_b);
    auto acc = [alpha](double s, double v, double y, double dy) { return -dy / s + (v - alpha) * y; };
    const double k1y = st.dy;
    const double k1p = acc(s_a, v_a, st.y, st.dy);
    const double k2y = st.dy + 0.5 * h * k1p;
    const double k2p = acc(s_m, v_m, st.y + 0.5 * h * k1y, k2y);
    const double k3y = st.dy + 0.5 * h * k2p;
    const double k3p = acc(s_m, v_m, st.y + 0.5 * h * k2y, k3y);
    const double k4y = st.dy + h * k3p;
    const double k4p = acc(s_b, v_b, st.y + h * k3y, k4y);
    return {st.y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
            st.dy + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)};
}

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

Trajectory integrate_sampled(const ScaledProblem& p, double alpha, std::span<const double> grid,
                             const SampledPotential& v) {
    Trajectory out;
    out.values.reserve(grid.size());
    auto [y0, dy0] = p.origin_series(alpha, grid[0]);
    State st{y0, dy0};
    out.values.push_back(st.y);
    int last_sign = sign_of(st.y);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        st = rk4_step(st, grid[i], grid[i + 1], v.node[i], v.mid[i], v.node[i + 1], alpha);
        out.values.push_back(st.y);
        if (st.y != 0.0) {
            const int sg = sign_of(st.y);
            if (sg != last_sign) {
                ++out.node_count;
                last_sign = sg;
            }
        }
        if (std::abs(st.y) > overflow_limit || !std::isfinite(st.y)) {
            out.truncated = true;
            break;
        }
    }
    out.terminal_sign = last_sign;
    return out;
}

EigenKey cache_key(const ScaledProblem& p, int nu, const SolverSettings& s) {
    return {p.n(), p.m(), sign_of(p.spin()), p.zeeman_enabled(), nu, s.steps, s.start_point(p), s.margin,
            s.min_tail_action};
}

struct Bisection {
    double lo;
    double hi;
};

double bisect_on_grid(const ScaledProblem& p, int nu, Bisection br, std::span<const double> grid,
                      const SolverSettings& settings) {
    const SampledPotential v(p, grid);
    auto count = [&](double a) { return integrate_sampled(p, a, grid, v).node_count; };
    if (count(br.lo) > nu) br.lo = -1.0;
    if (count(br.lo) > nu) throw BracketError("no lower bracket for level " + std::to_string(nu));
    if (count(br.hi) <= nu) throw BracketError("upper bracket lost for level " + std::to_string(nu));

    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (br.lo + br.hi);
        if (br.hi - br.lo < settings.rel_tol * std::max(1.0, std::abs(mid))) return mid;
        if (mid <= br.lo || mid >= br.hi) {
            throw ConvergenceError("bisection stagnated for level " + std::to_string(nu));
        }
        (count(mid) <= nu ? br.lo : br.hi) = mid;
    }
    throw ConvergenceError("bisection did not converge for level " + std::to_string(nu));
}

double default_s_max(const ScaledProblem& p, double alpha_tilde, const SolverSettings& s) {
    return p.solver_cutoff(alpha_tilde, s.margin, s.min_tail_action);
}

} // namespace

std::vector<double> make_grid(const ScaledProblem& problem, double s0, double s_max, int steps) {
    if (!(s0 > 0.0) || !(s_max > s0)) throw std::invalid_argument("make_grid: need 0 < s0 < s_max");
    if (steps < 8) throw std::invalid_argument("make_grid: too few steps");
    steps += (4 - steps % 4) % 4;
    std::vector<double> grid(static_cast<std::size_t>(steps) + 1);

    int geometric = 0;
    double join = s0;
    if (problem.n() < 0.0) {
        geometric = steps / 20;
        // Join where the last geometric step equals the uniform step.
        auto mismatch = [&](double sj) {
            const double ratio = std::pow(sj / s0, 1.0 / geometric);
            return sj * (1.0 - 1.0 / ratio) - (s_max - sj) / (steps - geometric);
        };
        double lo = s0 * (1.0 + 1e-9);
        double hi = 0.5 * s_max;
        if (mismatch(lo) < 0.0 && mismatch(hi) > 0.0) {
            for (int it = 0; it < 200; ++it) {
                const double mid = std::sqrt(lo * hi);
                (mismatch(mid) < 0.0 ? lo : hi) = mid;
            }
            join = hi;
        } else {
            geometric = 0;
        }
    }
    for (int i = 0; i <= geometric; ++i) grid[i] = s0 * std::pow(join / s0, double(i) / std::max(geometric, 1));
    const double h = (s_max - join) / (steps - geometric);
    for (int i = geometric + 1; i <= steps; ++i) grid[i] = join + h * (i - geometric);
    grid[steps] = s_max;
    return grid;
}

Trajectory integrate_radial(const ScaledProblem& problem, double alpha_tilde, std::span<const double> grid) {
    if (!std::isfinite(alpha_tilde)) throw std::invalid_argument("integrate_radial: alpha_tilde not finite");
    if (grid.size() < 3) throw std::invalid_argument("integrate_radial: grid too small");
    return integrate_sampled(problem, alpha_tilde, grid, SampledPotential(problem, grid));
}

double find_alpha_tilde(const ScaledProblem& problem, int nu, const SolverSettings& settings) {
    if (nu < 0) throw std::invalid_argument("nu must be non-negative");
    const auto key = cache_key(problem, nu, settings);
    auto& cache = EigenCache::global();
    if (settings.use_cache) {
        if (auto hit = cache.find(key)) return *hit;
    }

    const double s0 = settings.start_point(problem);
    // Every branch is a square of a Hermitian operator, so alpha_tilde >= 0.
    Bisection br{-1.0, 1.0};
    std::vector<double> grid;
    for (;;) {
        grid = make_grid(problem, s0, default_s_max(problem, br.hi, settings), settings.steps);
        if (integrate_radial(problem, br.hi, grid).node_count > nu) break;
        br.lo = br.hi;
        br.hi *= 2.0;
        if (br.hi > settings.alpha_ceiling) {
            throw BracketError("no bracket for level " + std::to_string(nu) + " below alpha_tilde ceiling " +
                               std::to_string(settings.alpha_ceiling));
        }
    }
    const double alpha = bisect_on_grid(problem, nu, br, grid, settings);
    if (settings.use_cache) cache.store(key, alpha);
    return alpha;
}

RadialSolution eigenfunction(const ScaledProblem& problem, double alpha_tilde, std::vector<double> grid) {
    const SampledPotential v(problem, grid);
    const std::size_t last = grid.size() - 1;

    // Outer turning point: last node with V <= alpha_tilde.
    std::size_t turn = last / 2;
    for (std::size_t i = last; i-- > 0;) {
        if (v.node[i] <= alpha_tilde) {
            turn = i;
            break;
        }
    }
    turn = std::clamp<std::size_t>(turn, 2, last - 2);

    Trajectory outward = integrate_sampled(problem, alpha_tilde, std::span(grid).first(turn + 1), v);
    if (outward.truncated) throw ConvergenceError("eigenfunction: outward overflow before turning point");

    // Inward from S(s_max) = 0, rescaling to stay finite.
    std::vector<double> inward(grid.size(), 0.0);
    State st{0.0, -1.0};
    inward[last] = 0.0;
    for (std::size_t i = last; i > turn; --i) {
        st = rk4_step(st, grid[i], grid[i - 1], v.node[i], v.mid[i - 1], v.node[i - 1], alpha_tilde);
        inward[i - 1] = st.y;
        if (std::abs(st.y) > 1e250) {
            for (std::size_t k = i - 1; k <= last; ++k) inward[k] *= 1e-250;
            st.y *= 1e-250;
            st.dy *= 1e-250;
        }
    }
    const double match = outward.values[turn] / inward[turn];

    RadialSolution r{problem, std::move(grid), {}, alpha_tilde, 0, 1.0};
    r.values = std::move(outward.values);
    r.values.resize(r.grid.size());
    for (std::size_t i = turn + 1; i <= last; ++i) r.values[i] = inward[i] * match;

    int last_sign = sign_of(r.values[0]);
    for (std::size_t i = 1; i < last; ++i) {
        if (r.values[i] == 0.0) continue;
        if (sign_of(r.values[i]) != last_sign) {
            ++r.nodes;
            last_sign = sign_of(r.values[i]);
        }
    }
    return normalize(std::move(r));
}

namespace {

RadialSolution level_on_grid(const ScaledProblem& problem, int nu, double alpha, double s_max,
                             const SolverSettings& settings) {
    RadialSolution r =
        eigenfunction(problem, alpha, make_grid(problem, settings.start_point(problem), s_max, settings.steps));
    if (r.nodes != nu) {
        throw ConvergenceError("level " + std::to_string(nu) + " eigenfunction has " + std::to_string(r.nodes) +
                               " nodes");
    }
    return r;
}

} // namespace

RadialSolution solve_level(const ScaledProblem& problem, int nu, const SolverSettings& settings,
                           std::optional<double> s_max) {
    const double alpha = find_alpha_tilde(problem, nu, settings);
    return level_on_grid(problem, nu, alpha, s_max ? *s_max : default_s_max(problem, alpha, settings), settings);
}

std::vector<RadialSolution> solve_levels(const ScaledProblem& problem, int first, int count,
                                         const SolverSettings& settings) {
    if (count < 1) throw std::invalid_argument("solve_levels: count must be >= 1");
    std::vector<double> alphas;
    for (int k = 0; k < count; ++k) alphas.push_back(find_alpha_tilde(problem, first + k, settings));
    const double outer = default_s_max(problem, alphas.back(), settings);
    std::vector<RadialSolution> out;
    for (int k = 0; k < count; ++k) out.push_back(level_on_grid(problem, first + k, alphas[k], outer, settings));
    return out;
}

EigenState make_state(RadialSolution radial, int nu, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("make_state: beta must be positive");
    // Clamp rounding noise around the zero mode of the minus branch.
    const double alpha = std::max(0.0, radial.alpha_tilde) * radial.problem.alpha_scale(beta);
    const QuantumNumbers qn(nu, radial.problem.m(), radial.problem.spin());
    return EigenState{qn, std::move(radial), beta, alpha, std::sqrt(1.0 + alpha)};
}

std::vector<EigenState> spectrum(double n, int m, SpinBranch spin, int count, bool zeeman_enabled, double beta,
                                 const SolverSettings& settings) {
    const ScaledProblem p(n, m, spin, zeeman_enabled);
    auto levels = solve_levels(p, 0, count, settings);
    std::vector<EigenState> out;
    for (int k = 0; k < count; ++k) out.push_back(make_state(std::move(levels[k]), k, beta));
    return out;
}

} // namespace lqsl
